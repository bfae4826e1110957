/// Arbitrary-precision integers and rationals plus the small number-theory
/// helpers the rest of the library leans on.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramify {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an internal invariant is violated (CLI exit code 2).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline bool is_zero(const Int& a) { return a.is_zero(); }
inline Int zero_like(const Int&) { return Int(0); }
inline Int one_like(const Int&) { return Int(1); }

inline bool is_zero(const Rat& a) { return a.is_zero(); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int int_pow(Int base, std::uint64_t e) {
    Int r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Exact division; nullopt when b does not divide a.
inline std::optional<Int> try_divide(const Int& a, const Int& b) {
    if (b.is_zero()) return std::nullopt;
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

inline std::optional<Rat> try_divide(const Rat& a, const Rat& b) {
    if (b.is_zero()) return std::nullopt;
    return Rat(a / b);
}

inline Rat inv(const Rat& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero rational");
    return Rat(1) / a;
}

/// Least nonnegative residue.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += int_abs(m);
    return r;
}

/// Trial-division primality. Inputs are desk-scale: anything below 2^63 is
/// accepted, the suite exercises p <= 10^6.
inline bool is_prime(const Int& p) {
    if (p > Int(std::uint64_t(1) << 62) * 2) throw std::invalid_argument("primality test limited to p < 2^63");
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Trial-division factorization of |n| up to `bound`. Returns (prime, exponent)
/// pairs in increasing order plus the unfactored cofactor (1 when complete).
inline std::pair<std::vector<std::pair<Int, int>>, Int> factor_trial(Int n, std::uint64_t bound = 1000000) {
    std::vector<std::pair<Int, int>> out;
    n = int_abs(n);
    if (n <= 1) return {out, Int(1)};
    auto strip = [&](const Int& d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    };
    strip(Int(2));
    for (Int d = 3; d * d <= n && d <= bound; d += 2) strip(d);
    if (n > 1 && n <= Int(bound) * Int(bound)) {
        out.emplace_back(n, 1);
        n = 1;
    }
    return {out, n};
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace ramify

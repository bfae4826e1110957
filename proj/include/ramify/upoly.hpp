/// Dense univariate polynomials over an arbitrary coefficient ring.
///
/// The coefficient type C plugs in through unqualified customization points:
///   is_zero(c), zero_like(c), one_like(c), from_int(proto, k), try_divide(a, b)
/// and, for field coefficients only, inv(c). Coefficients are stored lowest
/// degree first; the leading coefficient is nonzero unless the polynomial is
/// zero (empty vector), so degree() == size() - 1.
#pragma once

#include "ramify/integers.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace ramify {

inline Int from_int(const Int&, long long k) { return Int(k); }
inline Rat from_int(const Rat&, long long k) { return Rat(k); }

template <class C>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(C v) {
        std::vector<C> c;
        if (!is_zero(v)) c.push_back(std::move(v));
        return UPoly(std::move(c));
    }
    /// c * X^k
    static UPoly monomial(C v, std::size_t k) {
        if (is_zero(v)) return UPoly();
        std::vector<C> c(k + 1, zero_like(v));
        c[k] = std::move(v);
        return UPoly(std::move(c));
    }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const C& lc() const {
        if (c_.empty()) throw internal_error("lc of zero polynomial");
        return c_.back();
    }
    const C& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<C>& coeffs() const { return c_; }

    /// Coefficient of X^i, padding with zero above the degree.
    C coeff_or_zero(std::size_t i, const C& proto) const {
        return i < c_.size() ? c_[i] : zero_like(proto);
    }

    bool is_one() const { return c_.size() == 1 && is_zero(C(c_[0] - one_like(c_[0]))); }
    bool is_monic() const { return !c_.empty() && is_zero(C(c_.back() - one_like(c_.back()))); }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!is_zero(C(a.c_[i] - b.c_[i]))) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly operator-() const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(C(-x));
        return UPoly(std::move(r));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        if (a.c_.empty()) return b;
        if (b.c_.empty()) return a;
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = C(r[i] + b.c_[i]);
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return UPoly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = C(r[i + j] + a.c_[i] * b.c_[j]);
        return UPoly(std::move(r));
    }

    friend UPoly operator*(const UPoly& a, const C& s) {
        std::vector<C> r;
        r.reserve(a.c_.size());
        for (const auto& x : a.c_) r.push_back(C(x * s));
        return UPoly(std::move(r));
    }

    /// f(x) by Horner.
    C eval(const C& x) const {
        if (c_.empty()) return zero_like(x);
        C acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = C(acc * x + c_[i]);
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<C> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(C(c_[i] * from_int(c_[i], static_cast<long long>(i))));
        return UPoly(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<C> c_;
};

// --- customization points so UPoly itself can serve as a coefficient ring ---

template <class C>
bool is_zero(const UPoly<C>& p) {
    return p.is_zero_poly();
}
template <class C>
UPoly<C> zero_like(const UPoly<C>&) {
    return UPoly<C>();
}
template <class C>
UPoly<C> one_like(const UPoly<C>& p) {
    if (p.is_zero_poly()) throw internal_error("one_like of zero polynomial needs a coefficient prototype");
    return UPoly<C>::constant(one_like(p.lc()));
}
template <class C>
UPoly<C> from_int(const UPoly<C>& p, long long k) {
    if (p.is_zero_poly()) throw internal_error("from_int needs a coefficient prototype");
    return UPoly<C>::constant(from_int(p.lc(), k));
}

/// Division with remainder by a monic divisor; exact over any ring.
template <class C>
std::pair<UPoly<C>, UPoly<C>> divrem_monic(const UPoly<C>& f, const UPoly<C>& g) {
    if (!g.is_monic()) throw internal_error("divrem_monic: divisor is not monic");
    UPoly<C> q, r = f;
    while (!r.is_zero_poly() && r.degree() >= g.degree()) {
        const C& c = r.lc();
        std::size_t d = static_cast<std::size_t>(r.degree() - g.degree());
        UPoly<C> t = UPoly<C>::monomial(c, d);
        q = q + t;
        r = r - t * g;
    }
    return {std::move(q), std::move(r)};
}

template <class C>
UPoly<C> rem_monic(const UPoly<C>& f, const UPoly<C>& g) {
    return divrem_monic(f, g).second;
}

/// Pseudo-division: lc(g)^k * f = q*g + r with deg r < deg g. The scale
/// exponent k is kept minimal by dividing exactly whenever lc(g) divides the
/// current leading coefficient.
template <class C>
std::tuple<UPoly<C>, UPoly<C>, int> pseudo_divide(const UPoly<C>& f, const UPoly<C>& g) {
    if (g.is_zero_poly()) throw std::domain_error("pseudo-division by zero polynomial");
    UPoly<C> q, r = f;
    int k = 0;
    const C& lg = g.lc();
    while (!r.is_zero_poly() && r.degree() >= g.degree()) {
        std::size_t d = static_cast<std::size_t>(r.degree() - g.degree());
        if (auto t = try_divide(r.lc(), lg)) {
            UPoly<C> m = UPoly<C>::monomial(*t, d);
            q = q + m;
            r = r - m * g;
        } else {
            UPoly<C> m = UPoly<C>::monomial(r.lc(), d);
            q = q * lg + m;
            r = r * lg - m * g;
            ++k;
        }
    }
    return {std::move(q), std::move(r), k};
}

/// Classical pseudo-remainder normalized to lc(g)^(deg f - deg g + 1).
template <class C>
UPoly<C> prem_full(const UPoly<C>& f, const UPoly<C>& g) {
    if (g.is_zero_poly()) throw std::domain_error("pseudo-division by zero polynomial");
    if (f.is_zero_poly() || f.degree() < g.degree()) return f;
    int delta = f.degree() - g.degree();
    UPoly<C> r = f;
    int steps = 0;
    const C& lg = g.lc();
    while (!r.is_zero_poly() && r.degree() >= g.degree()) {
        std::size_t d = static_cast<std::size_t>(r.degree() - g.degree());
        UPoly<C> m = UPoly<C>::monomial(r.lc(), d);
        r = r * lg - m * g;
        ++steps;
    }
    for (; steps < delta + 1; ++steps) r = r * lg;
    return r;
}

/// Exact polynomial division; nullopt when g does not divide f over C.
template <class C>
std::optional<UPoly<C>> try_divide(const UPoly<C>& f, const UPoly<C>& g) {
    if (g.is_zero_poly()) return std::nullopt;
    UPoly<C> q, r = f;
    while (!r.is_zero_poly() && r.degree() >= g.degree()) {
        auto t = try_divide(r.lc(), g.lc());
        if (!t) return std::nullopt;
        UPoly<C> m = UPoly<C>::monomial(*t, static_cast<std::size_t>(r.degree() - g.degree()));
        q = q + m;
        r = r - m * g;
    }
    if (!r.is_zero_poly()) return std::nullopt;
    return q;
}

template <class C>
UPoly<C> exact_divide(const UPoly<C>& f, const UPoly<C>& g, const char* what) {
    auto q = try_divide(f, g);
    if (!q) throw internal_error(std::string("inexact polynomial division in ") + what);
    return *q;
}

namespace detail {
template <class C>
C ring_pow(const C& base, int e) {
    C acc = one_like(base);
    for (int i = 0; i < e; ++i) acc = C(acc * base);
    return acc;
}
template <class C>
C exact_div_c(const C& a, const C& b, const char* what) {
    auto q = try_divide(a, b);
    if (!q) throw internal_error(std::string("inexact coefficient division in ") + what);
    return *q;
}
}  // namespace detail

/// Resultant via the subresultant pseudo-remainder sequence. Works over any
/// integral domain with exact division (Int, MPoly, fields, nested UPoly).
template <class C>
C resultant(UPoly<C> a, UPoly<C> b) {
    if (a.is_zero_poly() && b.is_zero_poly()) throw std::domain_error("resultant of two zero polynomials");
    if (a.is_zero_poly()) return zero_like(b.lc());
    if (b.is_zero_poly()) return zero_like(a.lc());
    bool negate = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        C r = detail::ring_pow(b.lc(), a.degree());
        return negate ? C(-r) : C(r);
    }
    C g = one_like(a.lc());
    C h = g;
    while (true) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
        UPoly<C> r = prem_full(a, b);
        a = b;
        if (r.is_zero_poly()) return zero_like(g);
        C divisor = C(g * detail::ring_pow(h, delta));
        UPoly<C> scaled;
        {
            auto q = try_divide(r, UPoly<C>::constant(divisor));
            if (!q) throw internal_error("subresultant PRS division failed");
            scaled = std::move(*q);
        }
        b = std::move(scaled);
        g = a.lc();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = detail::exact_div_c(detail::ring_pow(g, delta), detail::ring_pow(h, delta - 1), "subresultant h-update");
        if (b.degree() == 0) break;
    }
    int e = a.degree();
    C num = detail::ring_pow(b.lc(), e);
    C res = (e <= 1) ? num : detail::exact_div_c(num, detail::ring_pow(h, e - 1), "subresultant finish");
    return negate ? C(-res) : res;
}

/// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f).
template <class C>
C discriminant(const UPoly<C>& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant of a constant polynomial");
    C r = resultant(f, f.derivative());
    long long n = f.degree();
    if (((n * (n - 1)) / 2) & 1) r = C(-r);
    return detail::exact_div_c(r, f.lc(), "discriminant lc division");
}

/// Monic gcd over a field coefficient type (requires inv()).
template <class C>
UPoly<C> poly_gcd(UPoly<C> a, UPoly<C> b) {
    while (!b.is_zero_poly()) {
        UPoly<C> m = b * inv(b.lc());
        UPoly<C> r = rem_monic(a, m);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    return a * inv(a.lc());
}

/// Extended Euclid over a field: returns (d, u, v) with d monic, u*a + v*b = d.
template <class C>
std::tuple<UPoly<C>, UPoly<C>, UPoly<C>> poly_ext_gcd(const UPoly<C>& a, const UPoly<C>& b) {
    if (a.is_zero_poly() && b.is_zero_poly()) return {UPoly<C>(), UPoly<C>(), UPoly<C>()};
    C proto = !a.is_zero_poly() ? a.lc() : b.lc();
    UPoly<C> r0 = a, r1 = b;
    UPoly<C> u0 = UPoly<C>::constant(one_like(proto)), u1;
    UPoly<C> v0, v1 = UPoly<C>::constant(one_like(proto));
    while (!r1.is_zero_poly()) {
        C linv = inv(r1.lc());
        UPoly<C> m = r1 * linv;
        auto [q, r] = divrem_monic(r0, m);
        q = q * linv;
        UPoly<C> u2 = u0 - q * u1;
        UPoly<C> v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero_poly()) return {r0, u0, v0};
    C s = inv(r0.lc());
    return {r0 * s, u0 * s, v0 * s};
}

/// gcd(f, f') == 1 over a field; over finite residue fields this is exactly
/// the unramified-fiber condition.
template <class C>
bool is_squarefree_over_field(const UPoly<C>& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::domain_error("squarefree test expects a monic nonconstant polynomial");
    UPoly<C> d = f.derivative();
    if (d.is_zero_poly()) return false;
    return poly_gcd(f, d).degree() == 0;
}

/// base^e mod m (m monic), square-and-multiply over the bits of e.
template <class C>
UPoly<C> pow_mod(UPoly<C> base, Int e, const UPoly<C>& m) {
    if (e < 0) throw internal_error("pow_mod: negative exponent");
    UPoly<C> acc = UPoly<C>::constant(one_like(m.lc()));
    base = rem_monic(base, m);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) acc = rem_monic(acc * base, m);
        base = rem_monic(base * base, m);
        e >>= 1;
    }
    return acc;
}

/// f(e(X)) mod m for monic m, by Horner.
template <class C>
UPoly<C> compose_mod(const UPoly<C>& f, const UPoly<C>& e, const UPoly<C>& m) {
    UPoly<C> acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = rem_monic(acc * e + UPoly<C>::constant(f[static_cast<std::size_t>(i)]), m);
    }
    return acc;
}

}  // namespace ramify

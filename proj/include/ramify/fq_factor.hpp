/// Complete univariate factorization over tower-presented finite fields:
/// squarefree part extraction (with the char-p p-th-root step), distinct-degree
/// splitting, seeded Cantor-Zassenhaus equal-degree splitting (trace variant
/// in characteristic 2), a Rabin irreducibility test, and the checked tower
/// builder. Output factor lists are sorted canonically, so results do not
/// depend on the seed.
#pragma once

#include "ramify/fq.hpp"
#include "ramify/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramify {

using FqPoly = UPoly<FqElem>;

namespace detail {

inline FqPoly fq_x(const FieldTower& lv) { return FqPoly::monomial(FqElem::one(lv), 1); }

inline std::uint64_t cardinality_u64(const FieldTower& lv) {
    const Int& q = lv->cardinality();
    if (q > Int(1) << 62) throw std::invalid_argument("field too large for randomized factorization");
    return q.convert_to<std::uint64_t>();
}

inline FqPoly random_poly_below(const FieldTower& lv, int deg_bound, SplitMix64& rng) {
    std::uint64_t q = cardinality_u64(lv);
    std::vector<FqElem> c;
    c.reserve(static_cast<std::size_t>(deg_bound));
    for (int i = 0; i < deg_bound; ++i) c.push_back(FqElem::from_index(lv, Int(rng.below(q))));
    return FqPoly(std::move(c));
}

/// Coefficient-wise p-th root; defined on every element of a finite field.
inline FqPoly pth_root(const FqPoly& f, const FieldTower& lv) {
    const Int& p = lv->characteristic();
    Int root_exp = lv->cardinality() / p;  // a^(q/p) is the p-th root of a
    std::size_t pz = p.convert_to<std::size_t>();
    std::vector<FqElem> out;
    for (std::size_t j = 0; j * pz < f.coeffs().size() || j == 0; ++j) {
        std::size_t src = j * pz;
        if (src >= f.coeffs().size()) break;
        out.push_back(f[src].pow(root_exp));
    }
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (i % pz != 0 && !f[i].is_zero_elem()) throw internal_error("p-th root of a polynomial that is not a p-th power");
    return FqPoly(std::move(out));
}

}  // namespace detail

/// f = prod part_i^mult_i with the parts monic, squarefree and pairwise
/// coprime. Handles f' = 0 via p-th-root extraction.
inline std::vector<std::pair<FqPoly, int>> squarefree_factorization(const FqPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("squarefree factorization expects a monic nonconstant polynomial");
    const FieldTower& lv = f.lc().level();
    std::vector<std::pair<FqPoly, int>> out;
    FqPoly d = f.derivative();
    if (d.is_zero_poly()) {
        std::size_t p = lv->characteristic().convert_to<std::size_t>();
        for (auto& [g, m] : squarefree_factorization(detail::pth_root(f, lv))) out.emplace_back(std::move(g), m * static_cast<int>(p));
        return out;
    }
    FqPoly c = poly_gcd(f, d);
    FqPoly w = exact_divide(f, c, "squarefree split");
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = poly_gcd(w, c);
        FqPoly fac = exact_divide(w, y, "squarefree step");
        if (fac.degree() > 0) out.emplace_back(std::move(fac), i);
        w = std::move(y);
        c = exact_divide(c, w, "squarefree content step");
        ++i;
    }
    if (c.degree() > 0) {
        std::size_t p = lv->characteristic().convert_to<std::size_t>();
        for (auto& [g, m] : squarefree_factorization(detail::pth_root(c, lv))) out.emplace_back(std::move(g), m * static_cast<int>(p));
    }
    return out;
}

/// For squarefree monic f: [(product of all irreducible factors of degree d, d)],
/// ascending in d, computed via gcd(f, X^(q^d) - X).
inline std::vector<std::pair<FqPoly, int>> distinct_degree_factorization(const FqPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("distinct-degree factorization expects a monic nonconstant polynomial");
    const FieldTower& lv = f.lc().level();
    const Int& q = lv->cardinality();
    std::vector<std::pair<FqPoly, int>> out;
    FqPoly rest = f;
    FqPoly h = rem_monic(detail::fq_x(lv), rest);
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.emplace_back(rest, rest.degree());
            break;
        }
        h = pow_mod(h, q, rest);
        FqPoly g = poly_gcd(rest, h - detail::fq_x(lv));
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = exact_divide(rest, g, "distinct-degree split");
            h = rem_monic(h, rest);
        }
    }
    return out;
}

/// Splits a monic squarefree product of degree-d irreducibles into its factors.
/// Deterministic for a given seed; the returned list is canonically sorted, so
/// in fact it is seed-independent.
inline std::vector<FqPoly> equal_degree_factorization(const FqPoly& f, int d, std::uint64_t seed) {
    if (!f.is_monic() || f.degree() < 1 || d < 1 || f.degree() % d != 0)
        throw std::invalid_argument("equal-degree factorization: degree bookkeeping violated");
    const FieldTower& lv = f.lc().level();
    const Int& q = lv->cardinality();
    SplitMix64 rng(seed ^ 0x9c0debadull);
    std::vector<FqPoly> out;
    std::vector<FqPoly> work{f};
    while (!work.empty()) {
        FqPoly g = std::move(work.back());
        work.pop_back();
        if (g.degree() == d) {
            out.push_back(std::move(g));
            continue;
        }
        FqPoly splitter;
        while (true) {
            FqPoly a = detail::random_poly_below(lv, g.degree(), rng);
            if (a.degree() < 1) continue;
            FqPoly c = poly_gcd(g, a);
            if (c.degree() > 0 && c.degree() < g.degree()) {
                splitter = std::move(c);
                break;
            }
            FqPoly b;
            if (lv->characteristic() == 2) {
                // trace map over F_2: a + a^2 + ... + a^(2^(k*d - 1))
                int k = lv->absolute_degree();
                FqPoly t = a, sq = a;
                for (int i = 1; i < k * d; ++i) {
                    sq = rem_monic(sq * sq, g);
                    t = t + sq;
                }
                b = std::move(t);
            } else {
                Int e = Int(1);
                for (int i = 0; i < d; ++i) e *= q;
                e = (e - 1) / 2;
                b = pow_mod(a, e, g) - FqPoly::constant(FqElem::one(lv));
            }
            FqPoly c2 = poly_gcd(g, b);
            if (c2.degree() > 0 && c2.degree() < g.degree()) {
                splitter = std::move(c2);
                break;
            }
        }
        work.push_back(exact_divide(g, splitter, "equal-degree split"));
        work.push_back(std::move(splitter));
    }
    std::sort(out.begin(), out.end(), [](const FqPoly& a, const FqPoly& b) { return upoly_fq_cmp(a, b) < 0; });
    return out;
}

/// Complete factorization of a monic polynomial: prod f_i^(m_i) = f exactly,
/// factors irreducible and canonically sorted.
inline std::vector<std::pair<FqPoly, int>> factor_fq(const FqPoly& f, std::uint64_t seed) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("factor_fq expects a monic nonconstant polynomial");
    std::vector<std::pair<FqPoly, int>> out;
    for (const auto& [part, mult] : squarefree_factorization(f)) {
        for (const auto& [prod, d] : distinct_degree_factorization(part)) {
            for (auto& irred : equal_degree_factorization(prod, d, seed)) out.emplace_back(std::move(irred), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int c = upoly_fq_cmp(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
    return out;
}

/// Rabin: f irreducible iff X^(q^n) = X mod f and gcd(f, X^(q^(n/r)) - X) = 1
/// for every prime r | n.
inline bool is_irreducible_fq(const FqPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("irreducibility test expects a monic nonconstant polynomial");
    int n = f.degree();
    if (n == 1) return true;
    const FieldTower& lv = f.lc().level();
    const Int& q = lv->cardinality();
    FqPoly x = detail::fq_x(lv);
    std::vector<int> prime_divs;
    int m = n;
    for (int r = 2; r * r <= m; ++r)
        while (m % r == 0) {
            if (prime_divs.empty() || prime_divs.back() != r) prime_divs.push_back(r);
            m /= r;
        }
    if (m > 1) prime_divs.push_back(m);
    // h_d = X^(q^d) mod f by iterated Frobenius
    std::vector<FqPoly> frob(static_cast<std::size_t>(n) + 1);
    frob[0] = rem_monic(x, f);
    for (int i = 1; i <= n; ++i) frob[static_cast<std::size_t>(i)] = pow_mod(frob[static_cast<std::size_t>(i - 1)], q, f);
    if (frob[static_cast<std::size_t>(n)] != rem_monic(x, f)) return false;
    for (int r : prime_divs) {
        FqPoly g = poly_gcd(f, frob[static_cast<std::size_t>(n / r)] - x);
        if (g.degree() != 0) return false;
    }
    return true;
}

/// Checked single-stage extension: stage must be monic of degree >= 1 over
/// `base` and irreducible there; a reducible stage reports a factor found.
inline FieldTower extend_checked(const FieldTower& base, const FqPoly& stage) {
    if (!stage.is_monic() || stage.degree() < 1) throw std::invalid_argument("tower stage must be monic of degree >= 1");
    if (stage.degree() > 1 && !is_irreducible_fq(stage)) {
        auto fac = factor_fq(stage, 0);
        throw std::invalid_argument("tower stage is reducible (factor of degree " + std::to_string(fac.front().first.degree()) +
                                    " found)");
    }
    return FqLevel::extend_unchecked(base, stage);
}

/// Certified prime field: primality by trial division.
inline FieldTower certified_prime_field(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("tower characteristic " + to_string(p) + " is not prime");
    return FqLevel::prime_field(p);
}

/// Tower from integer-coefficient stages, each reduced into the field built
/// so far: build_tower(2, {x^2+x+1}) is F_4, build_tower(3, {x^2+1}) is F_9.
inline FieldTower build_tower(const Int& p, const std::vector<UPoly<Int>>& stages) {
    FieldTower lv = certified_prime_field(p);
    for (const auto& s : stages) {
        std::vector<FqElem> c;
        c.reserve(s.coeffs().size());
        for (const auto& k : s.coeffs()) c.push_back(FqElem::from_integer(lv, k));
        lv = extend_checked(lv, FqPoly(std::move(c)));
    }
    return lv;
}

}  // namespace ramify

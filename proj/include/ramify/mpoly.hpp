/// Sparse multivariate polynomials over Int in variables t1..tn, with the
/// canonical lexicographic term order t1 > t2 > ... > tn. Equality and
/// serialization both use that order. Includes exact division, substitution,
/// contents and a primitive-PRS gcd; no multivariate factorization anywhere.
#pragma once

#include "ramify/integers.hpp"
#include "ramify/upoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramify {

using ExpVec = std::vector<std::uint32_t>;

/// Descending lex: the map's first entry is the leading term.
struct LexDescCompare {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

class MPoly {
  public:
    using TermMap = std::map<ExpVec, Int, LexDescCompare>;

    explicit MPoly(int n = 0) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative variable count");
    }

    static MPoly constant(int n, Int c) {
        MPoly p(n);
        if (!ramify::is_zero(c)) p.terms_.emplace(ExpVec(static_cast<std::size_t>(n), 0), std::move(c));
        return p;
    }
    static MPoly one(int n) { return constant(n, Int(1)); }
    /// t_i^e with 1-based variable index.
    static MPoly variable(int n, int i, std::uint32_t e = 1) {
        if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
        MPoly p(n);
        ExpVec ev(static_cast<std::size_t>(n), 0);
        ev[static_cast<std::size_t>(i - 1)] = e;
        p.terms_.emplace(std::move(ev), Int(1));
        return p;
    }

    int vars() const { return n_; }
    bool is_zero_poly() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpVec(static_cast<std::size_t>(n_), 0)); }
    Int constant_value() const {
        if (terms_.empty()) return Int(0);
        if (!is_constant()) throw internal_error("constant_value of nonconstant polynomial");
        return terms_.begin()->second;
    }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Merge a term in; used by parsers and builders.
    void add_term(ExpVec ev, Int c) {
        if (ev.size() != static_cast<std::size_t>(n_)) throw internal_error("exponent vector length mismatch");
        if (ramify::is_zero(c)) return;
        auto it = terms_.find(ev);
        if (it == terms_.end()) {
            terms_.emplace(std::move(ev), std::move(c));
        } else {
            it->second += c;
            if (ramify::is_zero(it->second)) terms_.erase(it);
        }
    }

    int degree_in(int i) const {
        std::uint32_t d = 0;
        for (const auto& [ev, c] : terms_) d = std::max(d, ev[static_cast<std::size_t>(i - 1)]);
        return terms_.empty() ? -1 : static_cast<int>(d);
    }
    int total_degree() const {
        if (terms_.empty()) return -1;
        std::uint64_t best = 0;
        for (const auto& [ev, c] : terms_) {
            std::uint64_t s = 0;
            for (auto e : ev) s += e;
            best = std::max(best, s);
        }
        return static_cast<int>(best);
    }

    /// Leading (lex-greatest) term.
    const std::pair<const ExpVec, Int>& leading_term() const {
        if (terms_.empty()) throw internal_error("leading term of zero polynomial");
        return *terms_.begin();
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly operator-() const {
        MPoly r(n_);
        for (const auto& [ev, c] : terms_) r.terms_.emplace(ev, Int(-c));
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_same(b);
        MPoly r = a;
        for (const auto& [ev, c] : b.terms_) r.add_term(ev, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check_same(b);
        MPoly r = a;
        for (const auto& [ev, c] : b.terms_) r.add_term(ev, Int(-c));
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_same(b);
        MPoly r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec ev(ea.size());
                for (std::size_t i = 0; i < ev.size(); ++i) ev[i] = ea[i] + eb[i];
                r.add_term(std::move(ev), Int(ca * cb));
            }
        return r;
    }
    friend MPoly operator*(const MPoly& a, const Int& s) {
        MPoly r(a.n_);
        if (ramify::is_zero(s)) return r;
        for (const auto& [ev, c] : a.terms_) r.terms_.emplace(ev, Int(c * s));
        return r;
    }

    MPoly pow(std::uint32_t e) const {
        MPoly acc = one(n_);
        MPoly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Ring homomorphism t_i -> images[i]; all images share a variable count,
    /// which becomes the result's.
    MPoly subst(const std::vector<MPoly>& images) const {
        if (images.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("substitution image count mismatch");
        int m = n_ == 0 ? 0 : images[0].vars();
        for (const auto& im : images)
            if (im.vars() != m) throw std::invalid_argument("substitution images disagree on variable count");
        MPoly r(m);
        for (const auto& [ev, c] : terms_) {
            MPoly term = MPoly::constant(m, c);
            for (std::size_t i = 0; i < ev.size(); ++i)
                if (ev[i]) term = term * images[i].pow(ev[i]);
            r = r + term;
        }
        return r;
    }

    /// gcd of all integer coefficients (nonnegative).
    Int integer_content() const {
        Int g(0);
        for (const auto& [ev, c] : terms_) g = int_gcd(g, c);
        return g;
    }

  private:
    void check_same(const MPoly& o) const {
        if (n_ != o.n_) throw internal_error("mixed variable counts in MPoly arithmetic");
    }
    int n_;
    TermMap terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero_poly(); }
inline MPoly zero_like(const MPoly& p) { return MPoly(p.vars()); }
inline MPoly one_like(const MPoly& p) { return MPoly::one(p.vars()); }
inline MPoly from_int(const MPoly& p, long long k) { return MPoly::constant(p.vars(), Int(k)); }

/// Canonical total order on same-arity polynomials: term-by-term in the
/// canonical term order, then by coefficient.
inline int mpoly_cmp(const MPoly& a, const MPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    LexDescCompare lt;
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (lt(ia->first, ib->first)) return -1;
        if (lt(ib->first, ia->first)) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

/// Exact multivariate division via leading-term peeling; nullopt when not exact.
inline std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g) {
    if (g.is_zero_poly()) return std::nullopt;
    MPoly q(f.vars());
    MPoly r = f;
    while (!r.is_zero_poly()) {
        const auto& [er, cr] = r.leading_term();
        const auto& [eg, cg] = g.leading_term();
        ExpVec ev(er.size());
        for (std::size_t i = 0; i < ev.size(); ++i) {
            if (er[i] < eg[i]) return std::nullopt;
            ev[i] = er[i] - eg[i];
        }
        auto c = try_divide(cr, cg);
        if (!c) return std::nullopt;
        MPoly mono(f.vars());
        mono.add_term(std::move(ev), *c);
        q = q + mono;
        r = r - mono * g;
    }
    return q;
}

MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

/// Negate so the lex-leading integer coefficient is positive.
inline MPoly sign_normalized(const MPoly& p) {
    if (p.is_zero_poly()) return p;
    return p.leading_term().second < 0 ? -p : p;
}

/// Content/primitive split of a univariate polynomial with MPoly coefficients:
/// f = content * primitive, content = gcd of the coefficients, and the
/// primitive part's leading coefficient has positive leading integer.
inline std::pair<MPoly, UPoly<MPoly>> content_primitive(const UPoly<MPoly>& f) {
    if (f.is_zero_poly()) return {MPoly(0), f};
    int n = f.lc().vars();
    MPoly c(n);
    for (const auto& coef : f.coeffs()) c = mpoly_gcd(c, coef);
    if (f.lc().leading_term().second < 0) c = -c;
    std::vector<MPoly> prim;
    prim.reserve(f.coeffs().size());
    for (const auto& coef : f.coeffs()) {
        auto q = try_divide(coef, c);
        if (!q) throw internal_error("content does not divide coefficient");
        prim.push_back(std::move(*q));
    }
    return {std::move(c), UPoly<MPoly>(std::move(prim))};
}

namespace detail {

/// View of p as a dense univariate polynomial in t_v (1-based) whose
/// coefficients are t_v-free MPolys in the same ambient variables.
inline UPoly<MPoly> dense_in_variable(const MPoly& p, int v) {
    int d = p.degree_in(v);
    if (d < 0) return UPoly<MPoly>();
    std::vector<MPoly> c(static_cast<std::size_t>(d) + 1, MPoly(p.vars()));
    for (const auto& [ev, coef] : p.terms()) {
        ExpVec rest = ev;
        std::uint32_t e = rest[static_cast<std::size_t>(v - 1)];
        rest[static_cast<std::size_t>(v - 1)] = 0;
        c[e].add_term(std::move(rest), coef);
    }
    return UPoly<MPoly>(std::move(c));
}

inline MPoly from_dense_in_variable(const UPoly<MPoly>& f, int v, int n) {
    MPoly r(n);
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
        if (f.coeffs()[e].is_zero_poly()) continue;
        r = r + f.coeffs()[e] * MPoly::variable(n, v, static_cast<std::uint32_t>(e));
    }
    return r;
}

}  // namespace detail

/// Multivariate gcd via recursive content / primitive-part reduction and a
/// primitive pseudo-remainder sequence in one distinguished variable.
inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero_poly()) return sign_normalized(b);
    if (b.is_zero_poly()) return sign_normalized(a);
    if (a.is_constant() || b.is_constant())
        return MPoly::constant(a.vars(), int_gcd(a.integer_content(), b.integer_content()));
    int v = 0;
    for (int i = 1; i <= a.vars(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            break;
        }
    if (v == 0) throw internal_error("nonconstant polynomial without variables");
    UPoly<MPoly> au = detail::dense_in_variable(a, v);
    UPoly<MPoly> bu = detail::dense_in_variable(b, v);
    auto [ca, ap] = content_primitive(au);
    auto [cb, bp] = content_primitive(bu);
    MPoly c = mpoly_gcd(ca, cb);
    if (ap.degree() == 0 || bp.degree() == 0) return sign_normalized(c);
    if (ap.degree() < bp.degree()) std::swap(ap, bp);
    UPoly<MPoly> g;
    while (true) {
        UPoly<MPoly> r = prem_full(ap, bp);
        if (r.is_zero_poly()) {
            g = bp;
            break;
        }
        if (r.degree() == 0) {
            g = UPoly<MPoly>::constant(MPoly::one(a.vars()));
            break;
        }
        ap = std::move(bp);
        bp = content_primitive(r).second;
    }
    MPoly gm = detail::from_dense_in_variable(content_primitive(g).second, v, a.vars());
    return sign_normalized(c * gm);
}

/// gcd customization used by generic helpers.
inline MPoly gcd_of(const MPoly& a, const MPoly& b) { return mpoly_gcd(a, b); }
inline Int gcd_of(const Int& a, const Int& b) { return int_gcd(a, b); }

using UPolyM = UPoly<MPoly>;
using UPolyZ = UPoly<Int>;
using UPolyQ = UPoly<Rat>;

/// Integer-coefficient polynomial viewed in Z[t1..tn][X].
inline UPolyM upoly_over_vars(const UPolyZ& f, int n) {
    std::vector<MPoly> c;
    c.reserve(f.coeffs().size());
    for (const auto& k : f.coeffs()) c.push_back(MPoly::constant(n, k));
    return UPolyM(std::move(c));
}

}  // namespace ramify

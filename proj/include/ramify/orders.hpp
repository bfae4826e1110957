/// Monogenic presentations K = Q(t1..tn)[mu] with mu a root of a monic
/// f in Z[t1..tn][X], triangular maximal ideals of Z[t1..tn] with their
/// constructive residue towers, reduction, Kummer-Dedekind fiber
/// factorization, integral normalization of non-monic generators, and the
/// Dedekind p-maximality test for n = 0.
///
/// All ramification verdicts downstream are about the order Z[t1..tn][mu];
/// field-level claims are made only where maximality is certified.
#pragma once

#include "ramify/fq.hpp"
#include "ramify/fq_factor.hpp"
#include "ramify/mpoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramify {

/// Maximal ideal (p; g1(t1); ...; gn(t1..tn)) of Z[t1..tn]. Each stage is
/// monic in its own variable over the residue tower built so far; validity of
/// the tower (irreducible stages over a prime p) is exactly maximality.
class TriangularIdeal {
  public:
    static TriangularIdeal make(Int p, std::vector<MPoly> chain, int n) {
        if (static_cast<int>(chain.size()) != n)
            throw std::invalid_argument("triangular ideal needs one chain polynomial per variable");
        TriangularIdeal m;
        m.p_ = std::move(p);
        m.n_ = n;
        m.tower_ = certified_prime_field(m.p_);
        for (int i = 0; i < n; ++i) {
            const MPoly& gi = chain[i];
            if (gi.vars() != n) throw std::invalid_argument("chain polynomial has the wrong ambient variable count");
            for (int j = i + 2; j <= n; ++j)
                if (gi.degree_in(j) > 0)
                    throw std::invalid_argument("chain polynomial " + std::to_string(i + 1) + " uses a later variable");
            if (gi.degree_in(i + 1) < 1)
                throw std::invalid_argument("chain polynomial " + std::to_string(i + 1) + " must involve t" + std::to_string(i + 1));
            UPoly<MPoly> dense = detail::dense_in_variable(gi, i + 1);
            std::vector<FqElem> c;
            c.reserve(dense.coeffs().size());
            for (const auto& coef : dense.coeffs()) c.push_back(m.reduce(coef));
            FqPoly stage(std::move(c));
            if (!stage.is_monic())
                throw std::invalid_argument("chain polynomial " + std::to_string(i + 1) + " is not monic over the residue tower");
            FieldTower next = extend_checked(m.tower_, stage);
            for (auto& g : m.gens_) g = g.lift_to(next);
            m.tower_ = next;
            m.gens_.push_back(FqElem::generator(m.tower_));
            m.chain_.push_back(gi);
        }
        return m;
    }

    const Int& p() const { return p_; }
    int vars() const { return n_; }
    const std::vector<MPoly>& chain() const { return chain_; }
    const FieldTower& residue_field() const { return tower_; }
    /// Image of t_i (1-based) in the residue field.
    const FqElem& generator_image(int i) const { return gens_.at(static_cast<std::size_t>(i - 1)); }

    /// Ring homomorphism Z[t1..tn] -> residue field.
    FqElem reduce(const MPoly& a) const {
        if (a.vars() != n_) throw std::invalid_argument("variable count mismatch in reduction");
        FqElem acc = FqElem::zero(tower_);
        for (const auto& [ev, c] : a.terms()) {
            FqElem term = FqElem::from_integer(tower_, c);
            for (std::size_t i = 0; i < ev.size(); ++i)
                if (ev[i]) term = term * gens_[i].pow(Int(ev[i]));
            acc = acc + term;
        }
        return acc;
    }

    bool contains(const MPoly& a) const { return reduce(a).is_zero_elem(); }

  private:
    TriangularIdeal() = default;
    Int p_;
    int n_ = 0;
    std::vector<MPoly> chain_;
    FieldTower tower_;
    std::vector<FqElem> gens_;
};

inline FieldTower residue_field(const TriangularIdeal& m) { return m.residue_field(); }

/// Coefficient-wise reduction of f in Z[t1..tn][X] to kappa(m)[X]; degree is
/// preserved for monic f.
inline FqPoly reduce_mod(const UPoly<MPoly>& f, const TriangularIdeal& m) {
    std::vector<FqElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& coef : f.coeffs()) c.push_back(m.reduce(coef));
    return FqPoly(std::move(c));
}

/// A monogenic arithmetic function field presentation. The irreducibility
/// certificate is a sufficient modular witness; its absence downgrades
/// downstream reports to "attested", never blocks them.
struct FunctionFieldExt {
    int n = 0;
    UPoly<MPoly> f;
    std::string label;
    bool certified = false;
    std::optional<TriangularIdeal> witness;

    int degree() const { return f.degree(); }
};

namespace detail {

/// Deterministic sweep of small triangular ideals with linear stages.
template <class Fn>
void for_each_small_ideal(int n, const Fn& fn, int attempt_cap = 4000) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    int attempts = 0;
    for (int p : primes) {
        std::vector<Int> point(static_cast<std::size_t>(n), Int(0));
        while (true) {
            std::vector<MPoly> chain;
            chain.reserve(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i)
                chain.push_back(MPoly::variable(n, i) - MPoly::constant(n, point[static_cast<std::size_t>(i - 1)]));
            if (fn(TriangularIdeal::make(Int(p), std::move(chain), n))) return;
            if (++attempts >= attempt_cap) return;
            // advance the point odometer in base p
            int i = 0;
            for (; i < n; ++i) {
                if (point[static_cast<std::size_t>(i)] + 1 < p) {
                    ++point[static_cast<std::size_t>(i)];
                    break;
                }
                point[static_cast<std::size_t>(i)] = 0;
            }
            if (i == n) break;
        }
    }
}

}  // namespace detail

/// Presentation constructor: requires a monic generator polynomial and
/// searches small ideals for an irreducibility witness.
inline FunctionFieldExt new_extension(int n, UPoly<MPoly> f, std::string label) {
    if (f.is_zero_poly() || f.degree() < 1) throw std::invalid_argument("extension generator must have degree >= 1");
    if (!f.is_monic() || !f.lc().is_constant())
        throw std::invalid_argument("extension generator must be monic; use normalize_integral first");
    for (const auto& c : f.coeffs())
        if (c.vars() != n) throw std::invalid_argument("coefficient variable count does not match n");
    FunctionFieldExt ext;
    ext.n = n;
    ext.f = std::move(f);
    ext.label = std::move(label);
    detail::for_each_small_ideal(n, [&](TriangularIdeal m) {
        FqPoly fbar = reduce_mod(ext.f, m);
        if (is_irreducible_fq(fbar)) {
            ext.certified = true;
            ext.witness = std::move(m);
            return true;
        }
        return false;
    });
    return ext;
}

/// Prop-2.1-style integral normalization: for g = a_n X^n + ... + a_0 returns
/// the monic h with h(Y) = Y^n + sum a_(n-k) a_n^(k-1) Y^(n-k), so that
/// h(a_n X) = a_n^(n-1) g(X) and roots correspond by s -> a_n s.
inline std::pair<UPoly<MPoly>, MPoly> normalize_integral(const UPoly<MPoly>& g) {
    if (g.degree() < 1) throw std::invalid_argument("cannot normalize a constant polynomial");
    const MPoly& an = g.lc();
    if (an.is_constant() && an.constant_value() == 1) return {g, MPoly::one(an.vars())};
    int n = g.degree();
    std::vector<MPoly> h(static_cast<std::size_t>(n) + 1, MPoly(an.vars()));
    h[static_cast<std::size_t>(n)] = MPoly::one(an.vars());
    MPoly anpow = MPoly::one(an.vars());
    for (int k = 1; k <= n; ++k) {
        h[static_cast<std::size_t>(n - k)] = g[static_cast<std::size_t>(n - k)] * anpow;
        anpow = anpow * an;
    }
    return {UPoly<MPoly>(std::move(h)), an};
}

/// An irreducible residue factor H of the fiber polynomial at m, carrying its
/// ramification index and residue degree.
struct PrimeAbove {
    TriangularIdeal m;
    FqPoly factor;
    int e = 1;
    int f_deg = 1;
};

struct IdealFactorization {
    TriangularIdeal m;
    FqPoly fiber;
    std::vector<PrimeAbove> primes;
};

/// Kummer-Dedekind fiber decomposition of the order at m.
inline IdealFactorization factor_ideal(const FunctionFieldExt& ext, const TriangularIdeal& m, std::uint64_t seed) {
    if (ext.n != m.vars()) throw std::invalid_argument("extension and ideal disagree on variable count");
    IdealFactorization out;
    out.m = m;
    out.fiber = reduce_mod(ext.f, m);
    FqPoly check = FqPoly::constant(FqElem::one(m.residue_field()));
    int degsum = 0;
    for (auto& [h, e] : factor_fq(out.fiber, seed)) {
        PrimeAbove pa;
        pa.m = m;
        pa.e = e;
        pa.f_deg = h.degree();
        for (int i = 0; i < e; ++i) check = check * h;
        degsum += e * h.degree();
        pa.factor = std::move(h);
        out.primes.push_back(std::move(pa));
    }
    if (check != out.fiber || degsum != ext.degree())
        throw internal_error("fiber factorization violated prod H_i^{e_i} = fbar or sum e_i f_i = deg f");
    return out;
}

// --- Dedekind p-maximality for number-field presentations (n = 0) ---

struct DedekindResult {
    bool maximal = false;
    std::optional<UPoly<Int>> witness;  // nontrivial common factor, lifted with coefficients in [0, p)
};

namespace detail {

inline UPoly<Int> upoly_int_from_mpoly(const UPoly<MPoly>& f) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const auto& coef : f.coeffs()) c.push_back(coef.constant_value());
    return UPoly<Int>(std::move(c));
}

inline FqPoly reduce_upoly_int(const UPoly<Int>& f, const FieldTower& fp) {
    std::vector<FqElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& k : f.coeffs()) c.push_back(FqElem::from_integer(fp, k));
    return FqPoly(std::move(c));
}

/// Coefficient representatives in [0, p); keeps the test deterministic.
inline UPoly<Int> lift_fq_poly(const FqPoly& f) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(x.index());
    return UPoly<Int>(std::move(c));
}

}  // namespace detail

/// Dedekind criterion at p for Z[mu], n = 0: with fbar = prod gbar_i^{e_i},
/// gbar the radical, hbar = fbar/gbar and T = (g*h - f)/p for the [0,p) lifts,
/// Z[mu] is p-maximal iff gcd(Tbar, gbar, hbar) = 1.
inline DedekindResult dedekind_maximality_test(const FunctionFieldExt& ext, const Int& p) {
    if (ext.n != 0) throw std::invalid_argument("Dedekind test supports n = 0 only; maximality is attested otherwise");
    FieldTower fp = certified_prime_field(p);
    UPoly<Int> f = detail::upoly_int_from_mpoly(ext.f);
    FqPoly fbar = detail::reduce_upoly_int(f, fp);
    FqPoly gbar = FqPoly::constant(FqElem::one(fp));
    for (const auto& [h, e] : factor_fq(fbar, 0)) gbar = gbar * h;
    FqPoly hbar = exact_divide(fbar, gbar, "Dedekind radical split");
    UPoly<Int> g = detail::lift_fq_poly(gbar);
    UPoly<Int> h = detail::lift_fq_poly(hbar);
    UPoly<Int> gh_minus_f = g * h - f;
    std::vector<Int> tc;
    tc.reserve(gh_minus_f.coeffs().size());
    for (const auto& c : gh_minus_f.coeffs()) {
        auto q = try_divide(c, p);
        if (!q) throw internal_error("Dedekind: g*h - f not divisible by p");
        tc.push_back(*q);
    }
    FqPoly tbar = detail::reduce_upoly_int(UPoly<Int>(std::move(tc)), fp);
    FqPoly d = poly_gcd(poly_gcd(tbar, gbar), hbar);
    DedekindResult out;
    out.maximal = d.degree() == 0;
    if (!out.maximal) out.witness = detail::lift_fq_poly(d);
    return out;
}

}  // namespace ramify

/// Finite residue fields presented as towers over F_p: each stage adjoins a
/// root of a monic irreducible polynomial over the field built so far.
/// Elements are nested coordinate vectors, always reduced; a level is
/// identified by its node, so residue fields compare only within one tower.
#pragma once

#include "ramify/integers.hpp"
#include "ramify/upoly.hpp"

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramify {

class FqLevel;
using FieldTower = std::shared_ptr<const FqLevel>;

class FqElem {
  public:
    FqElem() = default;

    static FqElem zero(const FieldTower& lv);
    static FqElem one(const FieldTower& lv) { return from_integer(lv, Int(1)); }
    static FqElem from_integer(const FieldTower& lv, const Int& k);
    /// Residue class of X at a proper extension level.
    static FqElem generator(const FieldTower& lv);

    const FieldTower& level() const { return level_; }
    bool is_zero_elem() const;

    friend bool operator==(const FqElem& a, const FqElem& b) { return fq_cmp(a, b) == 0; }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return fq_cmp(a, b) != 0; }

    FqElem operator-() const;
    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a, const FqElem& b) { return a + (-b); }
    friend FqElem operator*(const FqElem& a, const FqElem& b);

    FqElem pow(Int e) const;
    FqElem inverse() const;

    /// Embed into a level that has this one among its ancestors.
    FqElem lift_to(const FieldTower& target) const;

    /// Mixed-radix position in [0, q); fixes the canonical element order.
    Int index() const;
    static FqElem from_index(const FieldTower& lv, Int idx);

    /// Total order within one level: by index.
    static int fq_cmp(const FqElem& a, const FqElem& b);

    /// Coordinates over the parent level (empty for zero); level >= 1 only.
    const std::vector<FqElem>& coords() const { return c_; }
    /// Value in [0, p); level 0 only.
    const Int& prime_value() const { return v0_; }

  private:
    friend class FqLevel;
    FieldTower level_;
    Int v0_;
    std::vector<FqElem> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero_elem()) c_.pop_back();
    }
    UPoly<FqElem> as_poly() const { return UPoly<FqElem>(c_); }
    static FqElem from_poly(const FieldTower& lv, const UPoly<FqElem>& p);
    void check_level(const FqElem& o) const {
        if (level_ != o.level_) throw internal_error("mixed tower levels in Fq arithmetic");
    }
};

inline bool is_zero(const FqElem& a) { return a.is_zero_elem(); }
inline FqElem zero_like(const FqElem& a) { return FqElem::zero(a.level()); }
inline FqElem one_like(const FqElem& a) { return FqElem::one(a.level()); }
inline FqElem from_int(const FqElem& a, long long k) { return FqElem::from_integer(a.level(), Int(k)); }
inline FqElem inv(const FqElem& a) { return a.inverse(); }
inline std::optional<FqElem> try_divide(const FqElem& a, const FqElem& b) {
    if (b.is_zero_elem()) return std::nullopt;
    return FqElem(a * b.inverse());
}

class FqLevel : public std::enable_shared_from_this<FqLevel> {
  public:
    /// F_p. Primality is the caller's contract here; build_tower certifies it.
    static FieldTower prime_field(Int p) {
        auto lv = std::shared_ptr<FqLevel>(new FqLevel);
        lv->p_ = p;
        lv->q_ = p;
        lv->depth_ = 0;
        return lv;
    }

    /// Adjoin a root of `stage` (monic, deg >= 1, over `base`). Irreducibility
    /// is certified by the checked builder in fq_factor.hpp.
    static FieldTower extend_unchecked(const FieldTower& base, UPoly<FqElem> stage) {
        if (!stage.is_monic() || stage.degree() < 1) throw std::invalid_argument("tower stage must be monic of degree >= 1");
        for (const auto& c : stage.coeffs())
            if (c.level() != base) throw internal_error("stage coefficients live at the wrong level");
        auto lv = std::shared_ptr<FqLevel>(new FqLevel);
        lv->p_ = base->p_;
        lv->parent_ = base;
        lv->stage_ = std::move(stage);
        lv->q_ = Int(1);
        for (int i = 0; i < lv->stage_.degree(); ++i) lv->q_ *= base->q_;
        lv->depth_ = base->depth_ + 1;
        return lv;
    }

    const Int& characteristic() const { return p_; }
    const Int& cardinality() const { return q_; }
    const FieldTower& parent() const { return parent_; }
    const UPoly<FqElem>& stage() const { return stage_; }
    int stage_degree() const { return parent_ ? stage_.degree() : 1; }
    int depth() const { return depth_; }
    bool is_prime_field() const { return !parent_; }

    /// Extension degree over F_p.
    int absolute_degree() const {
        int d = 1;
        for (const FqLevel* lv = this; lv->parent_; lv = lv->parent_.get()) d *= lv->stage_.degree();
        return d;
    }

  private:
    FqLevel() = default;
    Int p_;
    Int q_;
    FieldTower parent_;
    UPoly<FqElem> stage_;
    int depth_ = 0;
};

inline FqElem FqElem::zero(const FieldTower& lv) {
    FqElem e;
    e.level_ = lv;
    e.v0_ = 0;
    return e;
}

inline FqElem FqElem::from_integer(const FieldTower& lv, const Int& k) {
    FqElem e = zero(lv);
    if (lv->is_prime_field()) {
        e.v0_ = mod_floor(k, lv->characteristic());
    } else {
        FqElem c = from_integer(lv->parent(), k);
        if (!c.is_zero_elem()) e.c_.push_back(std::move(c));
    }
    return e;
}

inline FqElem FqElem::from_poly(const FieldTower& lv, const UPoly<FqElem>& p) {
    FqElem e = zero(lv);
    e.c_ = p.coeffs();
    e.trim();
    return e;
}

inline FqElem FqElem::generator(const FieldTower& lv) {
    if (lv->is_prime_field()) throw std::invalid_argument("prime field has no stage generator");
    UPoly<FqElem> x = UPoly<FqElem>::monomial(FqElem::one(lv->parent()), 1);
    return from_poly(lv, rem_monic(x, lv->stage()));
}

inline bool FqElem::is_zero_elem() const {
    if (!level_) throw internal_error("uninitialized field element");
    return level_->is_prime_field() ? v0_.is_zero() : c_.empty();
}

inline FqElem FqElem::operator-() const {
    FqElem r = zero(level_);
    if (level_->is_prime_field()) {
        r.v0_ = v0_.is_zero() ? Int(0) : Int(level_->characteristic() - v0_);
    } else {
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(-x);
    }
    return r;
}

inline FqElem operator+(const FqElem& a, const FqElem& b) {
    a.check_level(b);
    FqElem r = FqElem::zero(a.level_);
    if (a.level_->is_prime_field()) {
        r.v0_ = mod_floor(a.v0_ + b.v0_, a.level_->characteristic());
    } else {
        r.c_ = (a.as_poly() + b.as_poly()).coeffs();
        r.trim();
    }
    return r;
}

inline FqElem operator*(const FqElem& a, const FqElem& b) {
    a.check_level(b);
    if (a.level_->is_prime_field()) {
        FqElem r = FqElem::zero(a.level_);
        r.v0_ = mod_floor(a.v0_ * b.v0_, a.level_->characteristic());
        return r;
    }
    return FqElem::from_poly(a.level_, rem_monic(a.as_poly() * b.as_poly(), a.level_->stage()));
}

inline FqElem FqElem::pow(Int e) const {
    if (e < 0) return inverse().pow(-e);
    FqElem acc = one(level_);
    FqElem base = *this;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

inline FqElem FqElem::inverse() const {
    if (is_zero_elem()) throw std::domain_error("inverse of zero field element");
    if (level_->is_prime_field()) {
        // extended Euclid on integers
        Int a = v0_, m = level_->characteristic();
        Int x0 = 0, x1 = 1, r0 = m, r1 = a;
        while (!r1.is_zero()) {
            Int q = r0 / r1;
            Int r2 = r0 - q * r1;
            Int x2 = x0 - q * x1;
            r0 = r1;
            r1 = r2;
            x0 = x1;
            x1 = x2;
        }
        if (r0 != 1) throw internal_error("non-invertible residue: modulus not prime?");
        FqElem r = zero(level_);
        r.v0_ = mod_floor(x0, m);
        return r;
    }
    auto [d, u, v] = poly_ext_gcd(as_poly(), level_->stage());
    if (d.degree() != 0) throw internal_error("non-invertible element: reducible tower stage?");
    return from_poly(level_, u);
}

inline FqElem FqElem::lift_to(const FieldTower& target) const {
    if (target == level_) return *this;
    if (!target || target->is_prime_field()) throw internal_error("lift target is not an extension of the element's level");
    FqElem below = lift_to(target->parent());
    FqElem r = zero(target);
    if (!below.is_zero_elem()) r.c_.push_back(std::move(below));
    return r;
}

inline Int FqElem::index() const {
    if (level_->is_prime_field()) return v0_;
    Int acc(0);
    const Int& qp = level_->parent()->cardinality();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * qp + c_[i].index();
    return acc;
}

inline FqElem FqElem::from_index(const FieldTower& lv, Int idx) {
    if (idx < 0 || idx >= lv->cardinality()) throw std::invalid_argument("element index out of range");
    if (lv->is_prime_field()) {
        FqElem r = zero(lv);
        r.v0_ = std::move(idx);
        return r;
    }
    FqElem r = zero(lv);
    const Int& qp = lv->parent()->cardinality();
    while (!idx.is_zero()) {
        r.c_.push_back(from_index(lv->parent(), mod_floor(idx, qp)));
        idx /= qp;
    }
    r.trim();
    return r;
}

inline int FqElem::fq_cmp(const FqElem& a, const FqElem& b) {
    a.check_level(b);
    if (a.level_->is_prime_field()) {
        if (a.v0_ != b.v0_) return a.v0_ < b.v0_ ? -1 : 1;
        return 0;
    }
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    FqElem z = zero(a.level_->parent());
    for (std::size_t i = n; i-- > 0;) {
        const FqElem& xa = i < a.c_.size() ? a.c_[i] : z;
        const FqElem& xb = i < b.c_.size() ? b.c_[i] : z;
        int c = fq_cmp(xa, xb);
        if (c) return c;
    }
    return 0;
}

/// Canonical order on polynomials over one level: degree first, then
/// coefficients from the top down.
inline int upoly_fq_cmp(const UPoly<FqElem>& a, const UPoly<FqElem>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = FqElem::fq_cmp(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
        if (c) return c;
    }
    return 0;
}

/// Coefficient-wise embedding into a deeper level of the same tower.
inline UPoly<FqElem> lift_poly(const UPoly<FqElem>& f, const FieldTower& target) {
    std::vector<FqElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(x.lift_to(target));
    return UPoly<FqElem>(std::move(c));
}

}  // namespace ramify

#include <catch2/catch_amalgamated.hpp>

#include <ramify/fq.hpp>
#include <ramify/fq_factor.hpp>

#include "oracles.hpp"

using namespace ramify;

namespace {

FqPoly fqpoly(const FieldTower& lv, std::initializer_list<long long> coeffs_low_first) {
    std::vector<FqElem> c;
    for (auto v : coeffs_low_first) c.push_back(FqElem::from_integer(lv, Int(v)));
    return FqPoly(std::move(c));
}

UPoly<Int> zpoly(std::initializer_list<long long> coeffs_low_first) {
    std::vector<Int> c;
    for (auto v : coeffs_low_first) c.emplace_back(v);
    return UPoly<Int>(std::move(c));
}

FqPoly monic_from_index(const FieldTower& lv, int deg, Int idx) {
    const Int& q = lv->cardinality();
    std::vector<FqElem> c;
    for (int i = 0; i < deg; ++i) {
        c.push_back(FqElem::from_index(lv, mod_floor(idx, q)));
        idx /= q;
    }
    c.push_back(FqElem::one(lv));
    return FqPoly(std::move(c));
}

bool irreducible_by_trial_division(const FqPoly& f) {
    const FieldTower& lv = f.lc().level();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        Int count = Int(1);
        for (int i = 0; i < d; ++i) count *= lv->cardinality();
        for (Int idx = 0; idx < count; ++idx) {
            FqPoly g = monic_from_index(lv, d, idx);
            if (divrem_monic(f, g).second.is_zero_poly()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("tower construction") {
    auto f2 = build_tower(Int(2), {});
    CHECK(f2->cardinality() == 2);
    auto f4 = build_tower(Int(2), {zpoly({1, 1, 1})});
    CHECK(f4->cardinality() == 4);
    auto f9 = build_tower(Int(3), {zpoly({1, 0, 1})});
    CHECK(f9->cardinality() == 9);
    CHECK(f9->absolute_degree() == 2);

    CHECK_THROWS_WITH(build_tower(Int(4), {}), Catch::Matchers::ContainsSubstring("not prime"));
    // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_WITH(build_tower(Int(2), {zpoly({1, 0, 1})}), Catch::Matchers::ContainsSubstring("reducible"));
}

TEST_CASE("field inverses") {
    auto f5 = build_tower(Int(5), {});
    CHECK(FqElem::one(f5).inverse() == FqElem::one(f5));
    CHECK(FqElem::from_integer(f5, Int(2)).inverse() == FqElem::from_integer(f5, Int(3)));

    auto f4 = build_tower(Int(2), {zpoly({1, 1, 1})});
    FqElem x = FqElem::generator(f4);
    CHECK(x.inverse() == x + FqElem::one(f4));
    CHECK_THROWS_AS(FqElem::zero(f4).inverse(), std::domain_error);

    // a * a^-1 = 1 across a whole small field
    auto f9 = build_tower(Int(3), {zpoly({1, 0, 1})});
    for (Int i = 1; i < 9; ++i) {
        FqElem a = FqElem::from_index(f9, i);
        CHECK(a * a.inverse() == FqElem::one(f9));
    }
}

TEST_CASE("squarefree factorization") {
    auto f5 = build_tower(Int(5), {});
    // (X+1)^2 (X+2)
    FqPoly f = fqpoly(f5, {1, 1}) * fqpoly(f5, {1, 1}) * fqpoly(f5, {2, 1});
    auto parts = squarefree_factorization(f);
    REQUIRE(parts.size() == 2);
    // sorted by emission order: multiplicity 1 part first here
    bool found1 = false, found2 = false;
    for (auto& [g, m] : parts) {
        if (m == 1) {
            CHECK(g == fqpoly(f5, {2, 1}));
            found1 = true;
        }
        if (m == 2) {
            CHECK(g == fqpoly(f5, {1, 1}));
            found2 = true;
        }
    }
    CHECK(found1);
    CHECK(found2);

    auto f2 = build_tower(Int(2), {});
    auto parts2 = squarefree_factorization(fqpoly(f2, {1, 0, 1}));
    REQUIRE(parts2.size() == 1);
    CHECK(parts2[0].first == fqpoly(f2, {1, 1}));
    CHECK(parts2[0].second == 2);

    auto parts3 = squarefree_factorization(fqpoly(f5, {-2, 0, 1}));
    REQUIRE(parts3.size() == 1);
    CHECK(parts3[0].second == 1);
}

TEST_CASE("distinct-degree factorization") {
    auto f3 = build_tower(Int(3), {});
    FqPoly f = fqpoly(f3, {1, 1}) * fqpoly(f3, {2, 1}) * fqpoly(f3, {1, 0, 1});
    auto classes = distinct_degree_factorization(f);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].second == 1);
    CHECK(classes[0].first == fqpoly(f3, {1, 1}) * fqpoly(f3, {2, 1}));
    CHECK(classes[1].second == 2);
    CHECK(classes[1].first == fqpoly(f3, {1, 0, 1}));

    // X^q - X splits completely into the d = 1 class
    FqPoly xq = fqpoly(f3, {0, 2, 0, 1});  // X^3 - X = X^3 + 2X
    auto cl = distinct_degree_factorization(xq);
    REQUIRE(cl.size() == 1);
    CHECK(cl[0].second == 1);
    CHECK(cl[0].first == xq);

    // X^3 + X - 1 has no root mod 5 (values 4,1,4,4,2), so it is irreducible
    auto f5 = build_tower(Int(5), {});
    auto cl2 = distinct_degree_factorization(fqpoly(f5, {-1, 1, 0, 1}));
    REQUIRE(cl2.size() == 1);
    CHECK(cl2[0].second == 3);
}

TEST_CASE("equal-degree factorization") {
    auto f5 = build_tower(Int(5), {});
    FqPoly f = fqpoly(f5, {2, 1}) * fqpoly(f5, {3, 1});
    auto roots = equal_degree_factorization(f, 1, 7);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == fqpoly(f5, {2, 1}));
    CHECK(roots[1] == fqpoly(f5, {3, 1}));

    auto f3 = build_tower(Int(3), {});
    FqPoly a = fqpoly(f3, {1, 0, 1});    // X^2 + 1
    FqPoly b = fqpoly(f3, {2, 1, 1});    // X^2 + X + 2
    REQUIRE(is_irreducible_fq(b));
    auto quads = equal_degree_factorization(a * b, 2, 1);
    REQUIRE(quads.size() == 2);
    CHECK(((quads[0] == a && quads[1] == b) || (quads[0] == b && quads[1] == a)));

    auto single = equal_degree_factorization(a, 2, 99);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == a);
}

TEST_CASE("complete factorization frozen examples") {
    auto f5 = build_tower(Int(5), {});
    auto fac = factor_fq(fqpoly(f5, {1, 0, 1}), 0);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == fqpoly(f5, {2, 1}));
    CHECK(fac[1].first == fqpoly(f5, {3, 1}));

    auto f2 = build_tower(Int(2), {});
    auto fac2 = factor_fq(fqpoly(f2, {1, 0, 1}), 0);
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0].first == fqpoly(f2, {1, 1}));
    CHECK(fac2[0].second == 2);

    auto fac3 = factor_fq(fqpoly(f5, {-2, 0, 1}), 0);
    REQUIRE(fac3.size() == 1);
    CHECK(fac3[0].second == 1);
    CHECK(is_irreducible_fq(fac3[0].first));
}

TEST_CASE("irreducibility test") {
    auto f2 = build_tower(Int(2), {});
    CHECK(is_irreducible_fq(fqpoly(f2, {1, 1, 1})));
    auto f5 = build_tower(Int(5), {});
    CHECK(!is_irreducible_fq(fqpoly(f5, {1, 0, 1})));
    CHECK(is_irreducible_fq(fqpoly(f5, {4, 1})));
}

TEST_CASE("factorization is seed-independent") {
    auto f9 = build_tower(Int(3), {zpoly({1, 0, 1})});
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 25; ++iter) {
        FqPoly f = monic_from_index(f9, 3, Int(rng.below(729)));
        auto ref = factor_fq(f, 0);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto cur = factor_fq(f, seed);
            REQUIRE(cur.size() == ref.size());
            for (std::size_t i = 0; i < cur.size(); ++i) {
                CHECK(cur[i].first == ref[i].first);
                CHECK(cur[i].second == ref[i].second);
            }
        }
    }
}

TEST_CASE("exhaustive factorization oracle on small fields") {
    std::vector<FieldTower> fields = {
        build_tower(Int(2), {}),
        build_tower(Int(3), {}),
        build_tower(Int(2), {zpoly({1, 1, 1})}),
        build_tower(Int(5), {}),
    };
    for (const auto& lv : fields) {
        for (int deg = 1; deg <= 3; ++deg) {
            Int count = Int(1);
            for (int i = 0; i < deg; ++i) count *= lv->cardinality();
            for (Int idx = 0; idx < count; ++idx) {
                FqPoly f = monic_from_index(lv, deg, idx);
                auto fac = factor_fq(f, 0);
                FqPoly prod = FqPoly::constant(FqElem::one(lv));
                int degsum = 0;
                for (const auto& [g, m] : fac) {
                    REQUIRE(irreducible_by_trial_division(g));
                    REQUIRE(is_irreducible_fq(g));
                    for (int i = 0; i < m; ++i) prod = prod * g;
                    degsum += m * g.degree();
                }
                REQUIRE(prod == f);
                REQUIRE(degsum == deg);
            }
        }
    }
}

TEST_CASE("irreducible polynomials divide X^(q^deg) - X") {
    auto f4 = build_tower(Int(2), {zpoly({1, 1, 1})});
    SplitMix64 rng(55);
    int checked = 0;
    for (int iter = 0; iter < 40; ++iter) {
        FqPoly f = monic_from_index(f4, 2 + static_cast<int>(rng.below(2)), Int(rng.below(64)));
        if (!is_irreducible_fq(f)) continue;
        Int qn = Int(1);
        for (int i = 0; i < f.degree(); ++i) qn *= f4->cardinality();
        FqPoly x = FqPoly::monomial(FqElem::one(f4), 1);
        CHECK(pow_mod(x, qn, f) == rem_monic(x, f));
        ++checked;
    }
    REQUIRE(checked > 5);
}

TEST_CASE("element index round-trip and ordering") {
    auto f9 = build_tower(Int(3), {zpoly({1, 0, 1})});
    for (Int i = 0; i < 9; ++i) {
        FqElem a = FqElem::from_index(f9, i);
        CHECK(a.index() == i);
    }
    CHECK(FqElem::fq_cmp(FqElem::from_index(f9, Int(2)), FqElem::from_index(f9, Int(5))) < 0);
}

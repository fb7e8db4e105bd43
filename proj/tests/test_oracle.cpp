#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "b3/oracle.hpp"
#include "b3/pbwalg.hpp"

using namespace b3;
using R = Root;

TEST_CASE("free algebra arithmetic") {
    FreeOracle o(canonical_datum(3));
    FreeElement a = free_word({0, 1});
    FreeElement b = free_word({2});
    FreeElement ab = o.mul(a, b);
    REQUIRE(ab.size() == 1);
    CHECK(ab.begin()->first == FreeWord{0, 1, 2});

    FreeElement sum = free_add(a, free_scale(a, CycScalar(-1)));
    CHECK(sum.empty());
}

TEST_CASE("serre relations vanish in the quotient") {
    FreeOracle o(canonical_datum(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            CAPTURE(i);
            CAPTURE(j);
            CHECK(o.is_zero_in_quotient(o.serre_relation(i, j)));
            // padded instances u * r * v
            FreeElement padded = o.mul(free_word({2}), o.mul(o.serre_relation(i, j), free_word({0})));
            CHECK(o.is_zero_in_quotient(padded));
        }
    }
    CHECK(!o.is_zero_in_quotient(free_word({0, 1})));
}

TEST_CASE("quotient dimensions match the straightening engine") {
    // N = 5: at N = 3 the Serre-only quotient is one dimension bigger in
    // Z^3-degree (1,2,3); the discrepancy dies once power relations are
    // imposed, so it never reaches the truncated algebras.
    FreeOracle o(canonical_datum(5));
    RewriteSystem rs(canonical_datum(5), PowerMode::none);
    CHECK(o.dimension(0) == 1);
    CHECK(o.dimension(1) == 3);
    CHECK(o.dimension(2) == 8);
    for (unsigned d = 3; d <= 6; ++d) {
        CAPTURE(d);
        CHECK(o.dimension(d) == rs.graded_dimension(d));
    }
}

TEST_CASE("every commutation identity reduces to zero") {
    FreeOracle o(canonical_datum(5));
    RewriteSystem rs(canonical_datum(5), PowerMode::none);
    auto ids = commutation_identities(o, rs);
    CHECK(ids.size() > 20);
    for (auto& [name, lhs] : ids) {
        CAPTURE(name);
        CHECK(o.reduce(lhs).empty());
    }
}

TEST_CASE("a corrupted tail fails the oracle cross-check") {
    FreeOracle o(canonical_datum(5));
    RewriteSystem rs(canonical_datum(5), PowerMode::none);
    rs.scale_tail_for_test(R::at31, R::a21, CycScalar(5));
    bool any_residual = false;
    for (auto& [name, lhs] : commutation_identities(o, rs))
        any_residual |= !o.reduce(lhs).empty();
    CHECK(any_residual);
}

TEST_CASE("zero-equivalence agrees between oracle and engine") {
    Datum d = canonical_datum(3);
    FreeOracle o(d);
    RewriteSystem rs(d, PowerMode::none);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter(0, 2), coef(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        // random combination of degree-4 words
        FreeElement fe;
        AlgElement ae = rs.zero();
        for (int t = 0; t < 3; ++t) {
            FreeWord w;
            std::vector<Root> rw;
            for (int l = 0; l < 4; ++l) {
                int x = letter(rng);
                w.push_back(x);
                rw.push_back(static_cast<Root>(x));  // a1,a2,a3 are letters 0,1,2
            }
            long c = coef(rng);
            fe = free_add(std::move(fe), free_word(w, CycScalar(c)));
            ae += rs.normalize_word(rw, MuScalar(c), group_identity(d.group));
        }
        CHECK(o.is_zero_in_quotient(fe) == ae.is_zero());
    }

    // engine-certified zero: a padded serre relation, pushed through both
    FreeElement rel = o.mul(o.serre_relation(2, 1), free_word({1}));
    AlgElement eng = rs.zero();
    for (const auto& [w, c] : rel) {
        std::vector<Root> rw;
        for (int x : w) rw.push_back(static_cast<Root>(x));
        eng += rs.normalize_word(rw, MuScalar(c), group_identity(d.group));
    }
    CHECK(o.is_zero_in_quotient(rel));
    CHECK(eng.is_zero());
}

TEST_CASE("degree budget") {
    FreeOracle o(canonical_datum(3), 3);
    CHECK_THROWS_AS(o.dimension(4), DegreeBudgetExceeded);
    CHECK(o.dimension(3) == 18);  // 10 height-1 monomials, 6 mixed, y31, yt32
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "b3/verify.hpp"

using namespace b3;

namespace {

PbwMonomial mono(const Datum& d, std::initializer_list<std::pair<Root, int>> exps,
                 const GroupElement& g) {
    PbwExp e{};
    for (auto [r, k] : exps) e[root_info(r).pbw_pos] = static_cast<std::uint16_t>(k);
    return PbwMonomial{e, g};
}

void require_all_pass(const VerifyReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(c.id, ": ", c.detail);
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("coproduct of generators and group-likes") {
    Datum d = canonical_datum(3);
    RewriteSystem rs(d, PowerMode::none);
    TensorAlgebra ta(rs);
    GroupElement e = group_identity(d.group);

    TensorElement d1 = ta.coproduct(rs.gen(Root::a1));
    TensorElement exp1 =
        TensorElement::term(mono(d, {{Root::a1, 1}}, e), mono(d, {}, e), MuScalar(1)) +
        TensorElement::term(mono(d, {}, d.g[0]), mono(d, {{Root::a1, 1}}, e), MuScalar(1));
    CHECK(d1 == exp1);

    GroupElement g = group_mul(d.group, d.g[1], d.g[2]);
    CHECK(ta.coproduct(rs.group_term(g)) ==
          TensorElement::term(mono(d, {}, g), mono(d, {}, g), MuScalar(1)));

    // Delta(y21) = y21 (x) 1 + xi2 y2 g1 (x) y1 + g21 (x) y21
    CycScalar xi2 = xi(2, d.q33());
    GroupElement g21 = d.root_g(Root::a21);
    TensorElement d21 = ta.coproduct(rs.gen(Root::a21));
    TensorElement exp21 =
        TensorElement::term(mono(d, {{Root::a21, 1}}, e), mono(d, {}, e), MuScalar(1)) +
        TensorElement::term(mono(d, {{Root::a2, 1}}, d.g[0]), mono(d, {{Root::a1, 1}}, e),
                            MuScalar(xi2)) +
        TensorElement::term(mono(d, {}, g21), mono(d, {{Root::a21, 1}}, e), MuScalar(1));
    CHECK(d21 == exp21);
}

TEST_CASE("counit and skew-primitivity probes") {
    Datum d = canonical_datum(3);
    RewriteSystem rs(d, PowerMode::none);
    TensorAlgebra ta(rs);

    CHECK(ta.counit(rs.one()) == MuScalar(1));
    CHECK(ta.counit(rs.gen(Root::a31)).is_zero());
    CHECK(ta.counit(rs.group_term(d.g[0])) == MuScalar(1));

    auto g1 = ta.is_skew_primitive(rs.gen(Root::a1));
    REQUIRE(g1.has_value());
    CHECK(*g1 == d.g[0]);
    // composite root vectors are not skew-primitive in the free theory
    CHECK_FALSE(ta.is_skew_primitive(rs.gen(Root::a21)).has_value());
    CHECK_FALSE(ta.is_skew_primitive(rs.gen(Root::at31)).has_value());
}

TEST_CASE("coproduct is an algebra map and coassociative on samples") {
    Datum d = canonical_datum(3);
    RewriteSystem rs(d, PowerMode::nichols);
    TensorAlgebra ta(rs);

    AlgElement samples[] = {rs.gen(Root::a31), rs.multiply(rs.gen(Root::a2), rs.gen(Root::a1)),
                            rs.multiply(rs.gen(Root::at32), rs.group_term(d.g[2])),
                            rs.power(rs.gen(Root::a21), 2)};
    for (const AlgElement& a : samples) {
        for (const AlgElement& b : samples) {
            CHECK(ta.coproduct(rs.multiply(a, b)) == ta.multiply(ta.coproduct(a), ta.coproduct(b)));
        }
        TensorElement da = ta.coproduct(a);
        CHECK(ta.delta_left(da) == ta.delta_right(da));
    }
}

TEST_CASE("antipode convolution inverts the identity on generators") {
    Datum d = canonical_datum(3);
    MuFamily mu = MuFamily::symbolic(d);
    require_all_pass(antipode_check(d, mu));
}

TEST_CASE("lifting relations generate a Hopf ideal at N=3, symbolic mu") {
    Datum d = canonical_datum(3);
    MuFamily mu = MuFamily::symbolic(d);
    VerifyReport rep = verify_hopf_ideal(d, mu);
    CHECK(rep.checks.size() == 46);
    require_all_pass(rep);
}

TEST_CASE("a perturbed commutator tail breaks coproduct compatibility") {
    Datum d = canonical_datum(3);
    MuFamily mu = MuFamily::symbolic(d);
    RewriteSystem rs = build_lifting(d, mu);
    rs.scale_tail_for_test(Root::a2, Root::a1, CycScalar(2));
    TensorAlgebra ta(rs);
    TensorElement lhs = ta.multiply(ta.coproduct(rs.gen(Root::a1)), ta.coproduct(rs.gen(Root::a2)));
    CHECK(lhs != ta.coproduct(rs.multiply(rs.gen(Root::a1), rs.gen(Root::a2))));
}

TEST_CASE("power sums collapse and corrections are skew-primitive, N=3") {
    Datum d = canonical_datum(3);
    MuFamily mu = MuFamily::symbolic(d);
    for (Root r : all_roots()) require_all_pass(verify_power_coproduct(r, d, mu));
}

TEST_CASE("tensor-term commutation analyses hold, N=3") {
    Datum d = canonical_datum(3);
    for (const auto& id : claim_ids()) require_all_pass(verify_claim_relations(id, d));
    CHECK_THROWS_AS(verify_claim_relations("bogus", d), InvalidArgument);
}

TEST_CASE("claims and power collapses also hold at N=5") {
    // N=3 identifies q33^-4 with q33^2; rechecking at N=5 pins every
    // exponent in the commutation hypotheses
    Datum d = canonical_datum(5);
    MuFamily mu = MuFamily::symbolic(d);
    for (const auto& id : claim_ids()) require_all_pass(verify_claim_relations(id, d));
    for (Root r : all_roots()) require_all_pass(verify_power_coproduct(r, d, mu));
}

TEST_CASE("closed power formulas hold for small exponents, N=3") {
    Datum d = canonical_datum(3);
    for (unsigned n : {1u, 2u, 3u, 4u}) require_all_pass(verify_power_formulas(n, d));
}

TEST_CASE("beta power-sum identity and exponent variant") {
    for (unsigned N : {3u, 5u}) {
        Datum d = canonical_datum(N);
        require_all_pass(beta_adjudication(d));
    }
}

TEST_CASE("random Hopf-axiom sampling passes at N=3") {
    Datum d = canonical_datum(3);
    MuFamily mu = MuFamily::symbolic(d);
    require_all_pass(hopf_axiom_samples(d, mu, 50, 11));
}

TEST_CASE("report plumbing: lines, json, exceptions, suites") {
    VerifyReport rep;
    rep.run("ok", [] { return std::pair<bool, std::string>{true, "fine"}; });
    rep.run("boom", []() -> std::pair<bool, std::string> { throw InvalidArgument("nope"); });
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.lines() == "CHECK ok PASS fine\nCHECK boom FAIL exception: nope\n");
    CHECK(rep.json().find("\"all_pass\": false") != std::string::npos);

    VerifyReport deg1 = run_suite("deg1", "fast");
    CHECK(deg1.checks.size() == 6);  // two checks per simple root
    require_all_pass(deg1);
    CHECK_THROWS_AS(run_suite("bogus", "fast"), InvalidArgument);
    CHECK_THROWS_AS(run_suite("all", "warp"), InvalidArgument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "b3/commands.hpp"
#include "b3/datum_io.hpp"
#include "b3/expr.hpp"

#include "expr_corpus.h"

using namespace b3;
using b3_test::kExprCorpus;

namespace {

std::string write_datum(const std::string& name, const DatumFile& df) {
    std::string path = std::string("cli-test-") + name + ".json";
    std::ofstream(path) << datum_to_json(df);
    return path;
}

std::pair<int, std::string> cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str() + err.str()};
}

}  // namespace

TEST_CASE("round-trip fixpoint on the expression corpus") {
    for (const char* s : kExprCorpus) {
        CAPTURE(s);
        ExprPtr e = parse_expr(s);
        std::string printed = print_expr(e);
        ExprPtr e2 = parse_expr(printed);
        CHECK(*e2 == *e);
        // print o parse is idempotent: canonical spacing is a fixpoint
        CHECK(print_expr(e2) == printed);
    }
}

TEST_CASE("parser shapes and positioned errors") {
    ExprPtr two_terms = parse_expr("y2*y1 - q^-1 * y1*y2");
    CHECK(two_terms->kind == ExprKind::sub);
    ExprPtr nested = parse_expr("[y3,[y3,y2]_c]_c");
    CHECK(nested->kind == ExprKind::comm);
    CHECK(nested->b->kind == ExprKind::comm);
    // precedence: ^ over juxtaposition over +
    ExprPtr p = parse_expr("y1 y2^2 + y3");
    CHECK(p->kind == ExprKind::add);
    CHECK(p->a->kind == ExprKind::mul);
    CHECK(p->a->b->kind == ExprKind::pow);

    auto pos_of = [](const std::string& s) {
        try {
            parse_expr(s);
        } catch (const ExprParseError& e) {
            return static_cast<long>(e.pos);
        }
        return -1L;
    };
    CHECK(pos_of("y1 + ") == 5);
    CHECK(pos_of("y4") == 0);
    CHECK(pos_of("y1 ^ q") == 5);
    CHECK(pos_of("(y1 + y2") == 8);
    CHECK(pos_of("[y1, y2]") == 8);
    CHECK(pos_of("mu[zz]") == 3);
    CHECK(pos_of("y1 + + y2") == 5);
}

TEST_CASE("evaluation matches direct construction") {
    Datum d = canonical_datum(3);
    RewriteSystem rs(d, PowerMode::nichols);
    CHECK(eval_expr(parse_expr("[y2, y1]_c"), rs) == rs.gen(Root::a21));
    CHECK(eval_expr(parse_expr("y2*y1 - q^-1*y1*y2"), rs) == rs.gen(Root::a21));
    CHECK(eval_expr(parse_expr("[y3, [y3, y2]_c]_c"), rs) == rs.gen(Root::at32));
    CHECK(eval_expr(parse_expr("y1^3"), rs).is_zero());
    CHECK(eval_expr(parse_expr("q^3"), rs) == rs.one());
    CHECK(eval_expr(parse_expr("g[1,2,3]^-1"), rs) ==
          rs.group_term(group_inv(d.group, group_element(d.group, {1, 2, 3}))));
    CHECK(eval_expr(parse_expr("2/3 + 1/3"), rs) == rs.one());
    CHECK_THROWS_AS(eval_expr(parse_expr("y1^-1"), rs), InvalidArgument);
    CHECK_THROWS_AS(eval_expr(parse_expr("[y1 + 1, y2]_c"), rs), InvalidArgument);
}

TEST_CASE("datum file round trip") {
    DatumFile df{canonical_datum(3), std::nullopt};
    std::array<CycScalar, kNumRoots> vals{};
    vals[static_cast<size_t>(Root::a1)] = CycScalar(1);
    vals[static_cast<size_t>(Root::at21)] = CycScalar(mpq_class(-2, 3));
    df.mu = vals;
    DatumFile back = parse_datum_json(datum_to_json(df));
    CHECK(back.datum.N == 3);
    CHECK(back.datum.group.factors() == df.datum.group.factors());
    CHECK(back.datum.E == df.datum.E);
    for (int i = 0; i < 3; ++i) {
        CHECK(back.datum.g[i] == df.datum.g[i]);
        CHECK(back.datum.chi[i] == df.datum.chi[i]);
    }
    REQUIRE(back.mu.has_value());
    CHECK(*back.mu == *df.mu);
    CHECK(validate_datum(back.datum).valid());

    CHECK_THROWS_AS(parse_datum_json("{"), InvalidArgument);
    CHECK_THROWS_AS(parse_datum_json("{\"N\": 3}"), InvalidArgument);
}

TEST_CASE("subcommand exit codes and determinism") {
    std::string path = write_datum("n3", DatumFile{canonical_datum(3), std::nullopt});

    auto [c0, o0] = cli({"validate", path});
    CHECK(c0 == 0);
    CHECK(o0 == "datum valid\n");

    auto [c1, o1] = cli({"normalize", path, "-e", "y1^3", "--mode", "lifting"});
    CHECK(c1 == 0);
    CHECK(o1 == "-mu[a1] + mu[a1]*g[3,0,0]\n");
    // byte-identical rerun
    CHECK(cli({"normalize", path, "-e", "y1^3", "--mode", "lifting"}).second == o1);

    auto [c2, o2] = cli({"normalize", path, "-e", "y1^^"});
    CHECK(c2 == 2);
    auto [c3, o3] = cli({"normalize", path, "-e", "y1", "--mode", "warp"});
    CHECK(c3 == 2);
    auto [c4, o4] = cli({"frobnicate", path});
    CHECK(c4 == 2);
    auto [c5, o5] = cli({"validate", "does-not-exist.json"});
    CHECK(c5 == 2);
    auto [c6, o6] = cli({"dims", path, "--upto", "99999"});
    CHECK(c6 == 3);
    auto [c7, o7] = cli({"verify", path, "--suite", "deg1", "--tier", "fast"});
    CHECK(c7 == 0);
    CHECK(o7.find("RESULT PASS") != std::string::npos);
    auto [c8, o8] = cli({"dims", path, "--upto", "0"});
    CHECK(c8 == 0);
    CHECK(o8.find("14348907") != std::string::npos);
    auto [c9, o9] = cli({"verify", path, "--suite", "bogus"});
    CHECK(c9 == 2);

    // verification failure (not usage error) exits 1: an invalid datum
    DatumFile bad{canonical_datum(3), std::nullopt};
    bad.datum.E[0][1] = 1;  // breaks the Cartan compatibility conditions
    std::string bad_path = write_datum("bad", bad);
    auto [c10, o10] = cli({"validate", bad_path});
    CHECK(c10 == 1);

    auto [c11, o11] = cli({"u-alpha", path, "--root", "a21", "--json"});
    CHECK(c11 == 0);
    CHECK(o11.find("\"schema_version\": 1") != std::string::npos);

    std::remove(path.c_str());
    std::remove(bad_path.c_str());
}

#include "b3/commands.hpp"

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "b3/datum_io.hpp"
#include "b3/expr.hpp"
#include "b3/verify.hpp"

namespace b3 {

namespace {

using nlohmann::ordered_json;

unsigned long degree_budget() {
    if (const char* env = std::getenv("B3_DEGREE_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 64;
}

struct Options {
    std::string datum_path;
    std::string expr;
    std::string mode = "lifting";
    std::string suite = "all";
    std::string tier = "fast";
    std::string root;
    unsigned upto = 6;
    bool json = false;
    bool specialize = false;
};

RewriteSystem make_system(const DatumFile& df, const std::string& mode, bool specialize) {
    if (mode == "serre") return RewriteSystem(df.datum, PowerMode::none);
    if (mode == "nichols") return RewriteSystem(df.datum, PowerMode::nichols);
    if (mode == "lifting")
        // symbolic parameters by default; --specialize applies the file's
        // mu assignment
        return build_lifting(df.datum,
                             specialize ? df.mu_family() : MuFamily::symbolic(df.datum));
    throw InvalidArgument("unknown mode: " + mode);
}

void emit(const Options& o, std::ostream& out, const std::string& command,
          const std::string& text, ordered_json payload) {
    if (o.json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = command;
        for (auto& [k, v] : payload.items()) j[k] = v;
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

int cmd_validate(const Options& o, std::ostream& out) {
    DatumFile df = load_datum_file(o.datum_path);
    ValidationReport rep = validate_datum(df.datum);
    std::string text = rep.valid() ? "datum valid\n" : rep.str();
    ordered_json issues = ordered_json::array();
    for (const auto& i : rep.issues) issues.push_back({{"check", i.check}, {"detail", i.detail}});
    emit(o, out, "validate", text, {{"valid", rep.valid()}, {"issues", std::move(issues)}});
    return rep.valid() ? 0 : 1;
}

int cmd_normalize(const Options& o, std::ostream& out) {
    DatumFile df = load_datum_file(o.datum_path);
    RewriteSystem rs = make_system(df, o.mode, o.specialize);
    AlgElement e = eval_expr(parse_expr(o.expr), rs);
    emit(o, out, "normalize", e.str() + "\n", {{"mode", o.mode}, {"result", e.str()}});
    return 0;
}

int cmd_coproduct(const Options& o, std::ostream& out) {
    DatumFile df = load_datum_file(o.datum_path);
    RewriteSystem rs = make_system(df, o.mode, o.specialize);
    TensorAlgebra ta(rs);
    TensorElement t = ta.coproduct(eval_expr(parse_expr(o.expr), rs));
    emit(o, out, "coproduct", t.str() + "\n", {{"mode", o.mode}, {"result", t.str()}});
    return 0;
}

int cmd_confluence(const Options& o, std::ostream& out) {
    DatumFile df = load_datum_file(o.datum_path);
    RewriteSystem rs = make_system(df, o.mode, o.specialize);
    std::vector<OverlapIssue> issues = rs.check_local_confluence();
    std::string text;
    if (issues.empty()) {
        text = "locally confluent (mode " + o.mode + ")\n";
    } else {
        for (const auto& i : issues)
            text += "overlap " + i.overlap + ": residual " + i.difference + "\n";
    }
    ordered_json ji = ordered_json::array();
    for (const auto& i : issues)
        ji.push_back({{"overlap", i.overlap}, {"difference", i.difference}});
    emit(o, out, "confluence", text,
         {{"mode", o.mode}, {"confluent", issues.empty()}, {"issues", std::move(ji)}});
    return issues.empty() ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
    DatumFile df = load_datum_file(o.datum_path);
    if (o.tier != "fast" && o.tier != "faithful")
        throw InvalidArgument("unknown tier: " + o.tier);
    VerifyReport rep = run_suite(o.suite, df.datum,
                                 o.specialize ? df.mu_family()
                                              : MuFamily::symbolic(df.datum),
                                 o.tier == "faithful");
    if (o.json) {
        out << rep.json() << "\n";
    } else {
        out << rep.lines();
        out << (rep.all_pass() ? "RESULT PASS\n" : "RESULT FAIL\n");
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_dims(const Options& o, std::ostream& out) {
    DatumFile df = load_datum_file(o.datum_path);
    if (o.upto > degree_budget())
        throw DegreeBudgetExceeded("--upto exceeds the degree budget (B3_DEGREE_BUDGET)");
    RewriteSystem rs(df.datum, PowerMode::nichols);
    const unsigned N = df.datum.N;
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), N, 9);
    total *= mpz_class(std::to_string(df.datum.group.order()));
    std::string text = "total dimension N^9*|Gamma| = " + total.get_str() + "\n";
    ordered_json graded = ordered_json::array();
    for (unsigned d = 0; d <= o.upto; ++d) {
        unsigned long long gd = rs.graded_dimension(d);
        text += "filtration " + std::to_string(d) + ": " + std::to_string(gd) + "\n";
        graded.push_back(gd);
    }
    emit(o, out, "dims", text, {{"total", total.get_str()}, {"graded", std::move(graded)}});
    return 0;
}

int cmd_u_alpha(const Options& o, std::ostream& out) {
    DatumFile df = load_datum_file(o.datum_path);
    auto r = root_by_name(o.root);
    if (!r) throw InvalidArgument("unknown root name: " + o.root);
    MuFamily mu = o.specialize ? df.mu_family() : MuFamily::symbolic(df.datum);
    AlgElement u = u_alpha(*r, mu, df.datum);
    std::string lhs = std::string(root_info(*r).gen_name) + "^" + std::to_string(df.datum.N);
    emit(o, out, "u-alpha", lhs + " = " + u.str() + "\n",
         {{"root", o.root}, {"power", lhs}, {"result", u.str()}});
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rewrite engine for the liftings of a rank-3 Nichols algebra"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool wants_mode) {
        sub->add_option("datum", o.datum_path, "datum JSON file")->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        if (wants_mode)
            sub->add_option("--mode", o.mode, "serre|nichols|lifting (default lifting)");
        sub->add_flag("--specialize", o.specialize,
                      "use the datum file's mu values instead of symbolic parameters");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a datum file");
    add_common(validate, false);
    CLI::App* normalize = app.add_subcommand("normalize", "normal form of an expression");
    add_common(normalize, true);
    normalize->add_option("-e,--expr", o.expr, "expression")->required();
    CLI::App* coproduct = app.add_subcommand("coproduct", "coproduct of an expression");
    add_common(coproduct, true);
    coproduct->add_option("-e,--expr", o.expr, "expression")->required();
    CLI::App* confluence = app.add_subcommand("confluence", "resolve all overlap ambiguities");
    add_common(confluence, true);
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, false);
    verify->add_option("--suite", o.suite,
                       "all|deg1..deg5|claims|powers|hopf-ideal|antipode (default all)");
    verify->add_option("--tier", o.tier, "fast|faithful (default fast)");
    CLI::App* dims = app.add_subcommand("dims", "dimension and graded dimensions");
    add_common(dims, false);
    dims->add_option("--upto", o.upto, "largest filtration degree (default 6)");
    CLI::App* ualpha = app.add_subcommand("u-alpha", "closed form of a power relation");
    add_common(ualpha, false);
    ualpha->add_option("--root", o.root, "root name (a1..at21)")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out);
        if (normalize->parsed()) return cmd_normalize(o, out);
        if (coproduct->parsed()) return cmd_coproduct(o, out);
        if (confluence->parsed()) return cmd_confluence(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (dims->parsed()) return cmd_dims(o, out);
        if (ualpha->parsed()) return cmd_u_alpha(o, out);
        err << "no subcommand\n";
        return 2;
    } catch (const StepBudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const DegreeBudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace b3

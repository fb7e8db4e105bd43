#include "b3/datum_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace b3 {

namespace {

using nlohmann::json;

std::vector<long> long_vector(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array");
    std::vector<long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidArgument(std::string(what) + ": integer expected");
        out.push_back(v.get<long>());
    }
    return out;
}

CycScalar rational_value(const json& v, const std::string& key) {
    mpq_class r;
    if (v.is_number_integer()) {
        r = mpq_class(v.get<long>());
    } else if (v.is_string()) {
        try {
            r = mpq_class(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw InvalidArgument("mu." + key + ": not a rational");
        }
        r.canonicalize();
    } else {
        throw InvalidArgument("mu." + key + ": integer or \"p/q\" string expected");
    }
    return CycScalar(r);
}

}  // namespace

MuFamily DatumFile::mu_family() const {
    return mu ? MuFamily::constants(datum, *mu) : MuFamily::symbolic(datum);
}

DatumFile parse_datum_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("datum file: ") + e.what());
    }
    for (const char* key : {"N", "invariant_factors", "E", "g", "chi"})
        if (!j.contains(key)) throw InvalidArgument(std::string("datum file: missing ") + key);

    if (!j["N"].is_number_integer() || j["N"].get<long>() < 3)
        throw InvalidArgument("datum file: N must be an integer >= 3");
    unsigned N = j["N"].get<unsigned>();

    std::vector<long> factors = long_vector(j["invariant_factors"], "invariant_factors");
    std::vector<unsigned> uf;
    for (long f : factors) {
        if (f < 1) throw InvalidArgument("invariant_factors must be positive");
        uf.push_back(static_cast<unsigned>(f));
    }
    AbelianGroup G(uf);

    if (!j["E"].is_array() || j["E"].size() != 3)
        throw InvalidArgument("E must be a 3x3 integer matrix");
    std::array<std::array<long, 3>, 3> E{};
    for (int i = 0; i < 3; ++i) {
        std::vector<long> row = long_vector(j["E"][i], "E row");
        if (row.size() != 3) throw InvalidArgument("E must be a 3x3 integer matrix");
        for (int k = 0; k < 3; ++k) E[i][k] = row[k];
    }

    auto triple = [&](const json& arr, const char* what) {
        if (!arr.is_array() || arr.size() != 3)
            throw InvalidArgument(std::string(what) + " must list three exponent vectors");
    };
    triple(j["g"], "g");
    triple(j["chi"], "chi");

    unsigned M = std::lcm(N, G.exponent());
    Datum d{G, {}, {}, N, E, std::make_shared<CycField>(M)};
    for (int i = 0; i < 3; ++i) {
        std::vector<long> ge = long_vector(j["g"][i], "g entry");
        std::vector<long> ce = long_vector(j["chi"][i], "chi entry");
        if (ge.size() != G.rank() || ce.size() != G.rank())
            throw InvalidArgument("g/chi exponent vectors must match the group rank");
        d.g[i] = group_element(G, ge);
        d.chi[i] = character(G, ce);
    }

    DatumFile df{std::move(d), std::nullopt};
    if (j.contains("mu")) {
        if (!j["mu"].is_object()) throw InvalidArgument("mu must be an object keyed by root name");
        std::array<CycScalar, kNumRoots> values{};
        for (const auto& [key, v] : j["mu"].items()) {
            auto r = root_by_name(key);
            if (!r) throw InvalidArgument("mu: unknown root name " + key);
            values[static_cast<size_t>(*r)] = rational_value(v, key);
        }
        df.mu = values;
    }
    return df;
}

DatumFile load_datum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open datum file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_datum_json(buf.str());
}

std::string datum_to_json(const DatumFile& df) {
    const Datum& d = df.datum;
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["N"] = d.N;
    j["invariant_factors"] = d.group.factors();
    j["E"] = d.E;
    nlohmann::ordered_json gs = nlohmann::ordered_json::array(),
                           chis = nlohmann::ordered_json::array();
    for (int i = 0; i < 3; ++i) {
        gs.push_back(d.g[i].e);
        chis.push_back(d.chi[i].c);
    }
    j["g"] = std::move(gs);
    j["chi"] = std::move(chis);
    if (df.mu) {
        nlohmann::ordered_json m = nlohmann::ordered_json::object();
        for (Root r : all_roots()) {
            const CycScalar& v = (*df.mu)[static_cast<size_t>(r)];
            if (v.is_zero()) continue;
            if (!v.is_rational())
                throw InvalidArgument("datum files carry rational mu values only");
            m[root_info(r).name] = v.rational_part().get_str();
        }
        j["mu"] = std::move(m);
    }
    return j.dump(2) + "\n";
}

}  // namespace b3

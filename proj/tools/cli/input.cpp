#include "input.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dequant::cli {

using nlohmann::json;

namespace {

Rational number_of(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_number(v.get<std::string>());
    throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

RVec vector_of(const LieAlgebra& L, const json& v, const std::string& where) {
    if (!v.is_object()) throw ParseError(where + ": expected an object {name: coefficient}");
    RVec out(L.dim(), Rational(0));
    for (const auto& [name, c] : v.items()) {
        auto k = L.index_of(name);
        if (!k) throw ParseError(where + ": unknown basis vector '" + name + "'");
        out[*k] = number_of(c, where + "." + name);
    }
    return out;
}

std::vector<std::string> names_of(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array of basis names");
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string()) throw ParseError(where + ": expected basis names");
        out.push_back(x.get<std::string>());
    }
    return out;
}

LieAlgebra algebra_from(const json& j) {
    if (!j.contains("basis")) throw ParseError("missing \"basis\"");
    auto names = names_of(j["basis"], "basis");
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!idx.emplace(names[i], i).second) throw ParseError("basis name '" + names[i] + "' repeated");
    std::vector<BracketEntry> entries;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw ParseError("\"brackets\" must be an array");
        std::size_t pos = 0;
        for (const auto& b : j["brackets"]) {
            std::string where = "brackets[" + std::to_string(pos++) + "]";
            auto lookup = [&](const char* key) {
                if (!b.contains(key) || !b[key].is_string()) throw ParseError(where + ": missing \"" + key + "\"");
                auto it = idx.find(b[key].get<std::string>());
                if (it == idx.end()) throw ParseError(where + ": unknown basis vector '" + b[key].get<std::string>() + "'");
                return it->second;
            };
            BracketEntry e{lookup("left"), lookup("right"), {}};
            if (e.i == e.j) throw ParseError(where + ": bracket of a vector with itself");
            if (!b.contains("value") || !b["value"].is_object()) throw ParseError(where + ": missing \"value\" object");
            for (const auto& [name, c] : b["value"].items()) {
                auto it = idx.find(name);
                if (it == idx.end()) throw ParseError(where + ": unknown basis vector '" + name + "'");
                e.terms.emplace_back(it->second, number_of(c, where + ".value." + name));
            }
            entries.push_back(std::move(e));
        }
    }
    try {
        return LieAlgebra(names, entries);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Rational parse_number(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

std::pair<std::string, Rational> parse_binding(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected name=p/q, got '" + text + "'");
    return {text.substr(0, eq), parse_number(text.substr(eq + 1))};
}

Source load_example(const std::string& name, const std::map<std::string, Rational>& params, const std::string& model,
                    int trunc) {
    Source s;
    s.label = name;
    if (name == "verma-sl2") {
        for (const auto& [k, v] : params)
            if (k != "lambda") throw ParseError("verma-sl2 has no parameter '" + k + "'");
        s.chevalley = sl2_chevalley();
        s.algebra = s.chevalley->algebra;
        auto it = params.find("lambda");
        s.weight = {it == params.end() ? Rational(3) : it->second};
        return s;
    }
    CatalogSpec spec{name, params, model, trunc};
    AnyRep rep;
    try {
        rep = catalog(spec);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    s.algebra = algebra_of(rep);
    std::visit(
        [&](const auto& r) {
            s.form = r.form;
            s.polarization = r.polarization;
        },
        rep);
    s.catalog = spec;
    return s;
}

Source load_file(const std::string& path, const std::map<std::string, Rational>& params) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(path + ": top level must be an object");
    Source s;
    s.label = j.value("name", path);
    s.algebra = algebra_from(j);
    const auto& L = s.algebra;
    if (j.contains("form")) s.form = vector_of(L, j["form"], "form");
    // --param X=p/q overrides a form coefficient
    for (const auto& [k, v] : params) {
        auto i = L.index_of(k);
        if (!i) throw ParseError("--param " + k + ": no such basis vector");
        if (!s.form) s.form = RVec(L.dim(), Rational(0));
        (*s.form)[*i] = v;
    }
    auto vectors = [&](const char* key) {
        std::vector<RVec> vs;
        if (!j[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
        for (std::size_t p = 0; p < j[key].size(); ++p)
            vs.push_back(vector_of(L, j[key][p], std::string(key) + "[" + std::to_string(p) + "]"));
        return vs;
    };
    if (j.contains("polarization")) s.polarization = span(vectors("polarization"), L.dim());
    if (j.contains("chart")) {
        if (!s.polarization) throw ParseError("\"chart\" needs a polarization");
        MalcevChart c;
        c.coexp = vectors("chart");
        c.h = *s.polarization;
        c.coords = default_coordinate_names(c.coexp.size());
        s.chart = c;
    }
    if (j.contains("catalog")) {
        const auto& c = j["catalog"];
        CatalogSpec spec;
        spec.name = c.value("name", "");
        spec.model = c.value("model", "trig");
        spec.trunc = c.value("trunc", 12);
        if (c.contains("params"))
            for (const auto& [k, v] : c["params"].items()) spec.params[k] = number_of(v, "catalog.params." + k);
        AnyRep rep;
        try {
            rep = catalog(spec);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("catalog: ") + e.what());
        }
        if (!(algebra_of(rep) == L)) throw ParseError("catalog entry '" + spec.name + "' is over a different algebra");
        s.catalog = spec;
    }
    if (j.contains("chevalley")) {
        const auto& c = j["chevalley"];
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& p : c.at("transpose")) {
            auto two = names_of(p, "chevalley.transpose");
            if (two.size() != 2) throw ParseError("chevalley.transpose: expected pairs");
            pairs.emplace_back(two[0], two[1]);
        }
        try {
            s.chevalley = make_chevalley(L, names_of(c.at("n_minus"), "chevalley.n_minus"),
                                         names_of(c.at("cartan"), "chevalley.cartan"),
                                         names_of(c.at("n_plus"), "chevalley.n_plus"), pairs);
        } catch (const json::exception& e) {
            throw ParseError(std::string("chevalley: ") + e.what());
        }
        if (c.contains("lambda"))
            for (const auto& v : c["lambda"]) s.weight.push_back(number_of(v, "chevalley.lambda"));
        else
            s.weight = RVec(s.chevalley->rank, Rational(0));
    }
    return s;
}

AnyRep representation(const Source& s) {
    if (s.catalog) return catalog(*s.catalog);
    if (s.chevalley) throw std::invalid_argument(s.label + " is a Verma module source; use the verma command");
    if (!s.form || !s.polarization)
        throw std::invalid_argument(s.label + ": a representation needs \"form\" and \"polarization\" (or \"catalog\")");
    PolyRep r = build_pi(s.algebra, *s.form, *s.polarization, s.chart);
    r.label = s.label;
    return r;
}

}  // namespace dequant::cli

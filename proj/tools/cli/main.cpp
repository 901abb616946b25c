// dequant: command-line front end.
//
// Exit status: 0 success, 1 internal error, 2 parse error, 3 validation
// failure, 4 bound insufficient, 5 property violation.
#include "acceptance.hpp"
#include "input.hpp"

#include "dequant/charvar.hpp"
#include "dequant/coadjoint.hpp"
#include "dequant/poisson.hpp"
#include "dequant/starprod.hpp"
#include "dequant/verma.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace dequant;
using namespace dequant::cli;
using dequant::ParseError;
using Record = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, internal = 1, parse = 2, validation = 3, bound = 4, property = 5 };

// Thrown when a check fails; the report is already printed.
struct Violation {};

struct Options {
    std::string file;
    std::string example;
    std::vector<std::string> params;
    std::string model = "trig";
    int trunc = 12;
    int degree = 3;
    int nu_degree = 3;
    std::string format = "text";
    std::string order = "grevlex";
};

Options opt;

bool records() { return opt.format == "records"; }
MonomialOrder monomial_order() { return opt.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex(); }

void emit(const Record& r) { std::cout << r.dump() << "\n"; }

std::vector<std::string> strings(const std::vector<Poly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.str());
    return out;
}

std::vector<std::string> basis_strings(const Ideal& I) { return strings(I.groebner(monomial_order())); }

std::string ideal_str(const Ideal& I) {
    std::string s = "<";
    auto b = basis_strings(I);
    for (std::size_t k = 0; k < b.size(); ++k) s += (k ? ", " : "") + b[k];
    return s + ">";
}

std::string rational_str(const Rational& r) { return Gaussian(r).str(); }

std::vector<std::string> vector_strings(const RVec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(rational_str(x));
    return out;
}

Source source() {
    std::map<std::string, Rational> params;
    for (const auto& p : opt.params) {
        auto [k, v] = parse_binding(p);
        params[k] = v;
    }
    if (opt.file.empty() == opt.example.empty()) throw ParseError("give exactly one of an input file or --example");
    if (!opt.file.empty()) return load_file(opt.file, params);
    return load_example(opt.example, params, opt.model, opt.trunc);
}

void add_source_options(CLI::App* app, bool file = true) {
    if (file) app->add_option("input", opt.file, "algebra file (JSON)");
    app->add_option("--example", opt.example, "catalog entry")
        ->check(CLI::IsMember({"heisenberg", "filiform", "axb", "spiral", "diamond", "motion", "verma-sl2"}));
    app->add_option("--param", opt.params, "parameter binding name=p/q (repeatable)");
    app->add_option("--model", opt.model, "motion model")->check(CLI::IsMember({"trig", "tilde"}));
    app->add_option("--trunc", opt.trunc, "truncation order N for transcendental coefficients")
        ->check(CLI::NonNegativeNumber);
}

void add_bounds(CLI::App* app, bool nu) {
    app->add_option("--degree", opt.degree, "degree bound D")->check(CLI::PositiveNumber);
    if (nu) app->add_option("--nu-degree", opt.nu_degree, "nu-degree bound K")->check(CLI::NonNegativeNumber);
}

// ---- commands

int cmd_validate() {
    Source s = source();
    const auto& L = s.algebra;
    auto v = validate(L);
    std::string pol;
    if (s.form && s.polarization) pol = polarization_defect(L, *s.form, *s.polarization);
    if (records()) {
        Record r{{"record", "validate"}, {"source", s.label}, {"dim", L.dim()}, {"jacobi", v.jacobi_ok}};
        if (v.offending) {
            const auto& t = *v.offending;
            r["offending"] = {L.names()[t[0]], L.names()[t[1]], L.names()[t[2]]};
        }
        r["lower_central"] = v.lower_central;
        r["derived"] = v.derived;
        r["nilpotency_class"] = v.nilpotency_class ? Record(*v.nilpotency_class) : Record(nullptr);
        r["solvable"] = v.solvable;
        if (s.form && s.polarization) r["polarization_defect"] = pol;
        emit(r);
    } else {
        std::cout << "algebra " << s.label << " (dim " << L.dim() << ")\n" << v.str(L);
        if (s.form) std::cout << "form f = " << form_str(L, *s.form) << "\n";
        if (s.form && s.polarization)
            std::cout << "polarization: " << (pol.empty() ? "ok" : pol) << "\n";
    }
    return v.jacobi_ok && pol.empty() ? ok : validation;
}

int cmd_orbit() {
    Source s = source();
    const auto& L = s.algebra;
    if (!s.form) throw std::invalid_argument(s.label + ": orbit needs a form");
    auto orb = orbit_closure_ideal(L, *s.form);
    std::optional<PukanszkyReport> puk;
    if (s.polarization) puk = pukanszky_affine_check(L, *s.form, *s.polarization);
    if (records()) {
        Record r{{"record", "orbit"}, {"source", s.label}, {"form", vector_strings(*s.form)}};
        r["parameters"] = orb.params;
        r["parametrization"] = strings(orb.parametrization);
        r["ideal"] = basis_strings(orb.ideal);
        r["order"] = opt.order;
        if (puk) {
            r["pukanszky"] = puk->holds;
            r["h_orbit"] = basis_strings(puk->h_orbit);
            r["affine"] = basis_strings(puk->affine);
        }
        emit(r);
    } else {
        std::cout << "f = " << form_str(L, *s.form) << "\n";
        std::cout << "Ad*(exp sum s_i X_i) f:\n";
        for (std::size_t k = 0; k < L.dim(); ++k)
            std::cout << "  xi_" << L.names()[k] << " = " << orb.parametrization[k].str() << "\n";
        std::cout << "orbit closure ideal: " << ideal_str(orb.ideal) << "\n";
        if (puk) {
            std::cout << "H.f closure: " << ideal_str(puk->h_orbit) << "\n";
            std::cout << "f + h^perp:  " << ideal_str(puk->affine) << "\n";
            std::cout << "Pukanszky condition: " << (puk->holds ? "holds" : "fails") << "\n";
        }
    }
    return ok;
}

std::string star_f, star_g;
int star_order = -1;

int cmd_star() {
    Source s = source();
    const auto& L = s.algebra;
    StarAlgebra A(L);
    Poly f = parse_poly(star_f, L.xi_ring()), g = parse_poly(star_g, L.xi_ring());
    Order o;
    if (star_order >= 0) o = star_order;
    auto series = A.star_series(f, g, o);
    if (records()) {
        Record r{{"record", "star"}, {"source", s.label}, {"f", f.str()}, {"g", g.str()}};
        Record terms = Record::array();
        for (std::size_t k = 0; k < series.coeffs().size(); ++k)
            if (!series.coeffs()[k].is_zero()) terms.push_back({{"nu", k}, {"coefficient", series.coeffs()[k].str()}});
        r["terms"] = terms;
        r["truncated_at"] = o ? Record(*o + 1) : Record(nullptr);
        emit(r);
    } else {
        std::cout << "(" << f.str() << ") * (" << g.str() << ") = " << series.str() << "\n";
    }
    return ok;
}

Record ann_record(const std::string& kind, const std::string& label, const AnnResult& a) {
    Record r{{"record", "ann"}, {"kind", kind}, {"source", label}, {"degree", a.degree_bound}};
    if (a.nu_bound >= 0) r["nu_degree"] = a.nu_bound;
    r["verified_order"] = a.verified_order ? Record(*a.verified_order) : Record(nullptr);
    r["generators"] = strings(a.generators);
    r["ideal"] = basis_strings(a.ideal);
    r["order"] = opt.order;
    r["kernel_dim"] = a.kernel.size();
    r["diagnostic"] = a.diagnostic;
    return r;
}

std::string ann_kind;

int cmd_ann() {
    Source s = source();
    AnyRep rep = representation(s);
    AnnResult a = ann_kind == "zero" ? ann_at_zero(rep, opt.degree) : ann_mod_nu(rep, opt.degree, opt.nu_degree);
    if (records()) {
        emit(ann_record(ann_kind, s.label, a));
    } else {
        std::cout << a.str();
        if (opt.order == "lex") std::cout << "lex basis: " << ideal_str(a.ideal) << "\n";
    }
    return ok;
}

bool certified(const VarietyReport& v) {
    const auto& c = v.certs;
    return c.poisson_stable && c.star_closed && c.inclusion_in_VA && c.affine_consistent;
}

int cmd_charvar() {
    Source s = source();
    AnyRep rep = representation(s);
    const auto& L = algebra_of(rep);
    auto vp = variety_report(rep, opt.degree, opt.nu_degree);
    if (records()) {
        for (const auto* v : {&vp.V, &vp.VA}) {
            Record r = ann_record(v->kind == "V" ? "zero" : "modnu", s.label, v->ann);
            r["record"] = "variety";
            r["variety"] = v->kind;
            r["real_generators"] = strings(v->real_gens);
            if (v->affine) r["affine"] = v->affine->str(L);
            r["certifications"] = {{"poisson_stable", v->certs.poisson_stable},
                                   {"star_closed", v->certs.star_closed},
                                   {"inclusion_in_VA", v->certs.inclusion_in_VA},
                                   {"affine_consistent", v->certs.affine_consistent}};
            emit(r);
        }
    } else {
        std::cout << vp.str(L);
        if (opt.order == "lex")
            std::cout << "lex bases: V " << ideal_str(vp.V.ann.ideal) << ", VA " << ideal_str(vp.VA.ann.ideal) << "\n";
    }
    return certified(vp.V) && certified(vp.VA) ? ok : property;
}

std::string rep_action;

int cmd_rep() {
    Source s = source();
    AnyRep rep = representation(s);
    const auto& L = algebra_of(rep);
    if (rep_action == "build") {
        if (records()) {
            Record ops = Record::object();
            std::visit(
                [&](const auto& r) {
                    for (std::size_t i = 0; i < L.dim(); ++i) ops[L.names()[i]] = r.ops[i].str();
                },
                rep);
            emit({{"record", "representation"}, {"source", s.label}, {"operators", ops}});
        } else {
            std::cout << rep_str(rep);
        }
        return ok;
    }
    auto defects = check_any(rep);
    if (records()) {
        Record d = Record::array();
        for (const auto& x : defects) d.push_back({{"law", x.law}, {"detail", x.detail}});
        emit({{"record", "rep_check"}, {"source", s.label}, {"ok", defects.empty()}, {"defects", d}});
    } else if (defects.empty()) {
        std::cout << s.label << ": homomorphism law and formal self-adjointness hold exactly\n";
    } else {
        for (const auto& x : defects) std::cout << x.law << " violated: " << x.detail << "\n";
    }
    return defects.empty() ? ok : property;
}

int cmd_verma() {
    Source s = source();
    if (!s.chevalley) throw std::invalid_argument(s.label + ": no triangular decomposition (use --example verma-sl2)");
    const auto& data = *s.chevalley;
    const auto& L = data.algebra;
    int D = opt.degree;
    auto M = verma_action(data, s.weight, D);
    auto vv = verma_varieties(data, s.weight, D, opt.nu_degree);
    auto matrix_strings = [](const Matrix<ScalarSeries>& m) {
        std::vector<std::vector<std::string>> out;
        for (const auto& row : m) {
            out.emplace_back();
            for (const auto& x : row) out.back().push_back(x.str());
        }
        return out;
    };
    Record rec{{"record", "verma"}, {"source", s.label}, {"lambda", vector_strings(s.weight)}, {"degree", D}};
    rec["basis"] = strings(M.basis(D));
    rec["rows"] = strings(M.row_basis());
    Record act = Record::object();
    std::ostringstream text;
    text << "Verma module, lambda = (";
    for (std::size_t c = 0; c < s.weight.size(); ++c) text << (c ? ", " : "") << rational_str(s.weight[c]);
    text << "), shifted by nu delta, slice degree <= " << D << "\n";
    for (std::size_t i = 0; i < L.dim(); ++i) {
        auto m = matrix_strings(M.matrix(i));
        act[L.names()[i]] = m;
        text << "action of " << L.names()[i] << " (columns: basis up to degree " << D << "):\n";
        for (const auto& row : m) {
            text << " ";
            for (const auto& x : row) text << " [" << x << "]";
            text << "\n";
        }
    }
    rec["action"] = act;
    Record grams = Record::array();
    for (int d = 0; d <= D; ++d) {
        auto g = shapovalov_gram(data, s.weight, d, FormKind::bilinear);
        auto h = shapovalov_gram(data, s.weight, d, FormKind::hermitian);
        Gaussian det1 = gram_determinant_at(g, Rational(1));
        grams.push_back({{"degree", d},
                         {"bilinear", matrix_strings(g)},
                         {"hermitian_form", matrix_strings(h)},
                         {"hermitian", is_hermitian(h)},
                         {"det_at_nu_1", det1.str()}});
        text << "Shapovalov degree " << d << ": bilinear " << Record(matrix_strings(g)).dump() << ", hermitian form "
             << Record(matrix_strings(h)).dump() << (is_hermitian(h) ? " (hermitian)" : " (not hermitian)")
             << ", det at nu=1: " << det1.str() << "\n";
    }
    rec["shapovalov"] = grams;
    rec["V"] = basis_strings(vv.V);
    rec["VA"] = basis_strings(vv.VA);
    rec["casimir_acts_by_scalar"] = vv.casimir_acts_by_scalar;
    rec["diagnostic"] = vv.diagnostic;
    if (records()) {
        emit(rec);
    } else {
        std::cout << text.str() << vv.str();
    }
    return ok;
}

std::vector<int> only;
bool timings = false;

int cmd_run_all() {
    auto ids = only.empty() ? acceptance::criterion_ids() : only;
    bool all = true;
    for (int id : ids) {
        auto r = acceptance::run_criterion(id);
        all = all && r.pass();
        if (records()) {
            Record checks = Record::array();
            for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            Record rec{{"record", "acceptance"}, {"criterion", r.id}, {"title", r.title}, {"pass", r.pass()}};
            rec["checks"] = checks;
            if (!r.error.empty()) rec["error"] = r.error;
            if (timings) rec["seconds"] = r.seconds;
            emit(rec);
        } else {
            std::cout << r.line(timings) << "\n";
            if (!r.pass()) std::cout << r.details();
        }
    }
    return all ? ok : property;
}

int cmd_list() {
    for (const auto& name : catalog_names()) {
        auto p = catalog_params({name, {}});
        if (records()) {
            Record params = Record::object();
            for (const auto& [k, v] : p) params[k] = rational_str(v);
            emit({{"record", "catalog"}, {"name", name}, {"params", params}});
        } else {
            std::cout << name;
            for (const auto& [k, v] : p) std::cout << " " << k << "=" << rational_str(v);
            std::cout << "\n";
        }
    }
    if (records())
        emit({{"record", "catalog"}, {"name", "verma-sl2"}, {"params", {{"lambda", "3"}}}});
    else
        std::cout << "verma-sl2 lambda=3\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic varieties of deformed representations of Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "records"}));
    app.add_option("--order", opt.order, "monomial order for printed bases")->check(CLI::IsMember({"grevlex", "lex"}));
    std::function<int()> run;

    auto* v = app.add_subcommand("validate", "Jacobi identity, central series, polarization");
    add_source_options(v);
    v->callback([&] { run = cmd_validate; });

    auto* o = app.add_subcommand("orbit", "coadjoint orbit closure ideal and Pukanszky check");
    add_source_options(o);
    o->callback([&] { run = cmd_orbit; });

    auto* st = app.add_subcommand("star", "nu-expansion of f * g");
    st->add_option("f", star_f)->required();
    st->add_option("g", star_g)->required();
    add_source_options(st, false);
    st->add_option("--algebra", opt.file, "algebra file (JSON)");
    st->add_option("--nu-degree", star_order, "truncate after nu^K (default: exact)");
    st->callback([&] { run = cmd_star; });

    auto* rp = app.add_subcommand("rep", "build or check a representation");
    rp->add_option("action", rep_action)->required()->check(CLI::IsMember({"build", "check"}));
    add_source_options(rp);
    rp->callback([&] { run = cmd_rep; });

    auto* an = app.add_subcommand("ann", "annihilator at nu = 0 (zero) or mod nu (modnu)");
    an->add_option("kind", ann_kind)->required()->check(CLI::IsMember({"zero", "modnu"}));
    add_source_options(an);
    add_bounds(an, true);
    an->callback([&] { run = cmd_ann; });

    auto* cv = app.add_subcommand("charvar", "characteristic varieties V and VA with certifications");
    add_source_options(cv);
    add_bounds(cv, true);
    cv->callback([&] { run = cmd_charvar; });

    auto* vm = app.add_subcommand("verma", "Verma module action, Shapovalov forms, varieties");
    add_source_options(vm);
    opt.nu_degree = 3;
    add_bounds(vm, true);
    vm->callback([&] { run = cmd_verma; });

    auto* ex = app.add_subcommand("examples", "catalog and acceptance suite");
    ex->require_subcommand(1);
    auto* ra = ex->add_subcommand("run-all", "run the acceptance criteria");
    ra->add_option("--only", only, "criterion numbers")->check(CLI::Range(1, 12));
    ra->add_flag("--timings", timings, "include runtimes (output is then not reproducible)");
    ra->callback([&] { run = cmd_run_all; });
    auto* ls = ex->add_subcommand("list", "catalog entries and default parameters");
    ls->callback([&] { run = cmd_list; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse;
    }
    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const BoundError& e) {
        std::cerr << "bound insufficient: " << e.what() << "\n";
        return bound;
    } catch (const std::domain_error& e) {
        std::cerr << "bound insufficient: " << e.what() << "\n";
        return bound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return validation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
}

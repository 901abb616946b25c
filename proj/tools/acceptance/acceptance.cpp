#include "acceptance.hpp"

#include "oracle.hpp"

#include "dequant/charvar.hpp"
#include "dequant/coadjoint.hpp"
#include "dequant/induce.hpp"
#include "dequant/poisson.hpp"
#include "dequant/starprod.hpp"
#include "dequant/verma.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

namespace dequant::acceptance {

namespace {

using Checks = std::vector<Check>;

Ideal ideal_of(const LieAlgebra& L, std::initializer_list<const char*> gens) {
    std::vector<Poly> g;
    for (auto s : gens) g.push_back(parse_poly(s, L.xi_ring()));
    return Ideal(L.xi_ring(), g);
}

void expect(Checks& out, const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({name, ok, detail});
}

void expect_ideal(Checks& out, const std::string& name, const Ideal& got, const Ideal& want) {
    expect(out, name, ideal_equal(got, want), "got " + got.str() + ", expected " + want.str());
}

bool same_basis(const Ideal& got, const Ideal& want) { return got.groebner() == want.groebner(); }

LinearForm form_of(const AnyRep& rep) {
    return std::visit([](const auto& r) { return r.form.value(); }, rep);
}
Subspace polarization_of(const AnyRep& rep) {
    return std::visit([](const auto& r) { return r.polarization.value(); }, rep);
}

struct Example {
    std::string label;
    CatalogSpec spec;
    int D, K;
};

// Catalog examples of the acceptance table.
std::vector<Example> examples() {
    return {
        {"heisenberg lambda=2", {"heisenberg", {{"lambda", 2}}}, 3, 3},
        {"heisenberg lambda=0", {"heisenberg", {{"lambda", 0}, {"a", 3}}}, 3, 3},
        {"filiform", {"filiform", {}}, 4, 4},
        {"axb +", {"axb", {{"sign", 1}}, "trig", 6}, 3, 3},
        {"axb -", {"axb", {{"sign", -1}}, "trig", 6}, 3, 3},
        {"spiral", {"spiral", {}, "trig", 12}, 3, 3},
        {"diamond", {"diamond", {}}, 3, 3},
        {"motion trig", {"motion", {}, "trig"}, 3, 3},
        {"motion tilde", {"motion", {}, "tilde", 12}, 3, 3},
    };
}

Checks criterion1() {
    Checks c;
    auto rep = catalog({"heisenberg", {{"lambda", 2}}});
    const auto& L = algebra_of(rep);
    auto ann = ann_at_zero(rep, 3);
    expect(c, "ann_at_zero(D=3) reduced basis {Y, Z - 2}", same_basis(ann.ideal, ideal_of(L, {"Y", "Z - 2"})),
           ann.ideal.str());
    auto vr = variety_report(rep, 3, 3);
    bool affine = vr.V.affine && ideal_equal(vanishing_ideal(L.xi_ring(), *vr.V.affine),
                                             affine_ideal(L, form_of(rep), polarization_of(rep)));
    expect(c, "V affine and equal to f + b^perp", affine, vr.V.ann.ideal.str());
    expect_ideal(c, "VA ideal <Z - 2>", vr.VA.ann.ideal, ideal_of(L, {"Z - 2"}));
    auto orbit = orbit_closure_ideal(L, form_of(rep));
    expect_ideal(c, "orbit closure ideal equals VA", orbit.ideal, vr.VA.ann.ideal);
    return c;
}

Checks criterion2() {
    Checks c;
    auto rep = catalog({"heisenberg", {{"lambda", 0}, {"a", 3}}});
    const auto& L = algebra_of(rep);
    Ideal point = ideal_of(L, {"X - 3", "Y", "Z"});
    auto vr = variety_report(rep, 3, 3);
    expect_ideal(c, "V is the point f0 = 3X*", vr.V.ann.ideal, point);
    expect_ideal(c, "VA is the point f0 = 3X*", vr.VA.ann.ideal, point);
    return c;
}

Checks criterion3() {
    Checks c;
    auto rep = catalog({"filiform", {{"l1", 1}, {"l3", 5}}});
    const auto& L = algebra_of(rep);
    auto defects = check_any(rep);
    expect(c, "built rep satisfies the homomorphism law", defects.empty(), defects.empty() ? "" : defects[0].detail);
    expect(c, "pi(v3) = 0 exactly, v3 = X3 - 5 - 1/2 X2^2",
           verify_annihilator(rep, std::vector<Poly>{parse_poly("X3 - 5 - 1/2*X2^2", L.xi_ring())}));
    auto va = ann_mod_nu(rep, 4, 4);
    auto orbit = orbit_closure_ideal(L, form_of(rep));
    expect_ideal(c, "ann_mod_nu(D=4, K=4) equals the orbit closure ideal", va.ideal, orbit.ideal);
    return c;
}

Checks criterion4() {
    Checks c;
    for (int sign : {1, -1}) {
        auto rep = catalog({"axb", {{"sign", sign}}, "trig", 6});
        const auto& L = algebra_of(rep);
        std::string s = sign > 0 ? "+" : "-";
        expect_ideal(c, "pi" + s + " ann_at_zero = <Y " + s + " 1>", ann_at_zero(rep, 3).ideal,
                     ideal_of(L, {sign > 0 ? "Y - 1" : "Y + 1"}));
        auto va = ann_mod_nu(rep, 3, 3);
        expect(c, "pi" + s + " ann_mod_nu(D=3, K=3) finds no element", va.generators.empty(), va.ideal.str());
    }
    return c;
}

Checks criterion5() {
    Checks c;
    auto rep = catalog({"spiral", {{"c0", Rational(3, 5)}, {"s0", Rational(4, 5)}}, "trig", 12});
    const auto& L = algebra_of(rep);
    auto vr = variety_report(rep, 3, 3);
    expect_ideal(c, "ann_at_zero = <X - 3/5, Y - 4/5>", vr.V.ann.ideal, ideal_of(L, {"X - 3/5", "Y - 4/5"}));
    bool affine = vr.V.affine && ideal_equal(vanishing_ideal(L.xi_ring(), *vr.V.affine),
                                             affine_ideal(L, form_of(rep), polarization_of(rep)));
    expect(c, "V = f_theta + b^perp", affine);
    expect(c, "ann_mod_nu(D=3, K=3) finds no element", vr.VA.ann.generators.empty(), vr.VA.ann.ideal.str());
    return c;
}

Checks criterion6() {
    Checks c;
    auto rep = catalog({"diamond", {{"lambda", 1}, {"mu", Rational(1, 2)}}});
    const auto& L = algebra_of(rep);
    const char* C2 = "P^2 + Q^2 - 2*H*E";
    expect_ideal(c, "ann_at_zero(D=3) = <E - 1, Q, C2 + 1>", ann_at_zero(rep, 3).ideal,
                 ideal_of(L, {"E - 1", "Q", "P^2 + Q^2 - 2*H*E + 1"}));
    std::vector<Poly> cas{parse_poly("E - 1", L.xi_ring()), parse_poly(std::string(C2) + " + 1", L.xi_ring())};
    expect(c, "pi(C1 - 1) = pi(C2 + 1) = 0 exactly", verify_annihilator(rep, cas));
    auto vr = variety_report(rep, 3, 3);
    expect(c, "V in VA certified at ideal level", vr.V.certs.inclusion_in_VA, vr.VA.ann.ideal.str());
    StarAlgebra A(L);
    std::string j = A.duflo_jhalf(3).str();
    expect(c, "J^(1/2) = 1 - nu^2/24 d_H^2 + O(nu^4)", j == "1 - 1/24*d_H^2*nu^2 + O(nu^4)", j);
    Poly c1 = parse_poly("E", L.xi_ring()), c2 = parse_poly(C2, L.xi_ring());
    expect(c, "J^(1/2) fixes C1 and C2", A.apply_jhalf(A.lift(c1)) == A.lift(c1) && A.apply_jhalf(A.lift(c2)) == A.lift(c2));
    return c;
}

Checks criterion7() {
    Checks c;
    auto trig = catalog({"motion", {{"r", 3}}, "trig"});
    const auto& L = algebra_of(trig);
    expect_ideal(c, "trig ann_at_zero(D=2) = <H, P^2 + Q^2 - 9>", ann_at_zero(trig, 2).ideal,
                 ideal_of(L, {"H", "P^2 + Q^2 - 9"}));
    expect(c, "pi(P^2 + Q^2 - 9) = 0 exactly in the trig ring",
           verify_annihilator(trig, std::vector<Poly>{parse_poly("P^2 + Q^2 - 9", L.xi_ring())}));
    auto tilde = catalog({"motion", {{"r", 3}}, "tilde"});
    expect_ideal(c, "tilde ann_at_zero = <P, Q + 3>", ann_at_zero(tilde, 3).ideal, ideal_of(L, {"P", "Q + 3"}));
    return c;
}

Checks criterion8() {
    Checks c;
    StarPropertyOptions h3;
    h3.order = std::nullopt;
    h3.samples = 50;
    h3.max_degree = 3;
    h3.seed = 8;
    auto r1 = star_properties(algebras::heisenberg(1), h3);
    for (const auto& ch : r1.checks) expect(c, "h3 " + ch.name + " (exact)", ch.ok, ch.witness);
    LieAlgebra D = algebras::diamond();
    StarPropertyOptions dm;
    dm.order = 6;
    dm.samples = 50;
    dm.max_degree = 3;
    dm.seed = 8;
    dm.casimirs = {parse_poly("E", D.xi_ring()), parse_poly("P^2 + Q^2 - 2*H*E", D.xi_ring())};
    auto r2 = star_properties(D, dm);
    for (const auto& ch : r2.checks) expect(c, "diamond " + ch.name + " (to nu^6)", ch.ok, ch.witness);
    return c;
}

Checks criterion9() {
    Checks c;
    for (const auto& ex : examples()) {
        auto d = check_any(catalog(ex.spec));
        expect(c, ex.label, d.empty(), d.empty() ? "" : d[0].law + " " + d[0].detail);
    }
    auto H2 = algebras::heisenberg(2);
    auto built = build_pi(H2, parse_form(H2, {{"Z", -3}, {"X1", 1}}), span_of_indices(H2, {2, 3, 4}));
    auto d = check_representation(built);
    expect(c, "built heisenberg n=2", d.empty(), d.empty() ? "" : d[0].detail);
    auto F4 = algebras::filiform(4);
    auto built4 = build_pi(F4, parse_form(F4, {{"X1", 2}, {"X3", 1}, {"X4", -1}}), span_of_indices(F4, {0, 1, 2, 3}));
    d = check_representation(built4);
    expect(c, "built filiform n=4", d.empty(), d.empty() ? "" : d[0].detail);
    return c;
}

Checks criterion10() {
    Checks c;
    for (const auto& ex : examples()) {
        auto rep = catalog(ex.spec);
        PoissonContext ctx(algebra_of(rep));
        auto a0 = ann_at_zero(rep, ex.D);
        auto st0 = poisson_stability(ctx, a0.ideal, Stability::subalgebra);
        expect(c, ex.label + " ann_at_zero", st0.stable, st0.stable ? "" : st0.residue.str());
        auto an = ann_mod_nu(rep, ex.D, ex.K);
        auto stn = poisson_stability(ctx, an.ideal, Stability::ideal);
        expect(c, ex.label + " ann_mod_nu", stn.stable, stn.stable ? "" : stn.residue.str());
    }
    return c;
}

Checks criterion11() {
    Checks c;
    auto data = sl2_chevalley();
    const auto& L = data.algebra;
    RVec lambda{3};
    auto vv = verma_varieties(data, lambda, 3, 2);
    expect_ideal(c, "V ideal = <E, H - 3>", vv.V, ideal_of(L, {"E", "H - 3"}));
    for (int d = 0; d <= 3; ++d) {
        auto g = shapovalov_gram(data, lambda, d, FormKind::hermitian);
        std::string entry = g.empty() ? "" : g[0][0].str();
        expect(c, "hermitian Gram at degree " + std::to_string(d), is_hermitian(g), "entry " + entry);
    }
    auto g1 = shapovalov_gram(data, lambda, 1, FormKind::bilinear);
    ScalarSeries three_nu(std::vector<Gaussian>{Gaussian(0), Gaussian(3)}, std::nullopt);
    expect(c, "degree-1 Shapovalov entry 3 nu", g1.size() == 1 && g1[0][0] == three_nu, g1.empty() ? "" : g1[0][0].str());
    // U_nu relations on vectors whose images stay in the slice
    auto M = verma_action(data, lambda, 3);
    auto& A = M.algebra();
    bool rel = true;
    std::string witness;
    for (const auto& v : M.basis(2))
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) {
                Poly lhs = M.act(i, M.act(j, v)) - M.act(j, M.act(i, v));
                Poly rhs(A.ring());
                for (std::size_t k = 0; k < L.dim(); ++k)
                    if (sgn(L.c(i, j, k)) != 0) rhs += M.act(k, v) * Gaussian(L.c(i, j, k));
                if (lhs != A.nu() * rhs && rel) {
                    rel = false;
                    witness = "[" + L.names()[i] + ", " + L.names()[j] + "] on " + v.str();
                }
            }
    expect(c, "action satisfies the U_nu relations on the slice", rel, witness);
    return c;
}

Checks criterion12() {
    Checks c;
    for (const auto& ex : examples()) {
        auto cmp = oracle::compare_ann_at_zero(catalog(ex.spec), 3);
        expect(c, ex.label, cmp.agree, cmp.detail);
    }
    return c;
}

struct Criterion {
    std::string title;
    double limit;
    std::function<Checks()> run;
};

const std::map<int, Criterion>& table() {
    static const std::map<int, Criterion> t = {
        {1, {"Heisenberg lambda=2: Ann_0, V = f + b^perp, VA = orbit", 1, criterion1}},
        {2, {"Heisenberg lambda=0: V = VA = point", 1, criterion2}},
        {3, {"Filiform g3: homomorphism, v3 annihilates, VA = orbit", 10, criterion3}},
        {4, {"ax+b: Ann_0 = <Y -+ 1>, no mod-nu element", 5, criterion4}},
        {5, {"Spiral: Ann_0, V = f_theta + b^perp, no mod-nu element", 5, criterion5}},
        {6, {"Diamond: Ann_0, Casimirs annihilate, V in VA, Duflo", 10, criterion6}},
        {7, {"Motion group: trig and tilde models", 5, criterion7}},
        {8, {"Star product property suite", 60, criterion8}},
        {9, {"Representation suite: homomorphism and self-adjointness", 5, criterion9}},
        {10, {"Poisson stability of every annihilator ideal", 10, criterion10}},
        {11, {"Verma sl2 lambda(H)=3: V, Shapovalov, relations", 5, criterion11}},
        {12, {"Oracle equivalence of ann_at_zero kernels at D=3", 30, criterion12}},
    };
    return t;
}

std::string seconds_str(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

}  // namespace

bool CriterionResult::pass() const {
    if (!error.empty() || checks.empty() || seconds > limit_seconds) return false;
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string CriterionResult::line(bool timing) const {
    std::ostringstream os;
    os << (pass() ? "PASS " : "FAIL ") << (id < 10 ? " " : "") << id << " " << title;
    if (timing) os << " (" << seconds_str(seconds) << " s, limit " << limit_seconds << " s)";
    return os.str();
}

std::string CriterionResult::details() const {
    std::ostringstream os;
    if (!error.empty()) os << "    error: " << error << "\n";
    if (seconds > limit_seconds) os << "    runtime above the limit\n";
    for (const auto& c : checks) {
        os << "    " << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.ok && !c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

std::vector<int> criterion_ids() {
    std::vector<int> ids;
    for (const auto& [id, s] : table()) ids.push_back(id);
    return ids;
}

CriterionResult run_criterion(int id) {
    const auto& t = table();
    auto it = t.find(id);
    if (it == t.end()) throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
    CriterionResult r;
    r.id = id;
    r.title = it->second.title;
    r.limit_seconds = it->second.limit;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.checks = it->second.run();
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id : criterion_ids()) out.push_back(run_criterion(id));
    return out;
}

}  // namespace dequant::acceptance

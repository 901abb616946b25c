#include "dequant/charvar.hpp"
#include "dequant/poisson.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace dequant;

namespace {

Ideal ideal_of(const LieAlgebra& L, std::initializer_list<const char*> gens) {
    std::vector<Poly> g;
    for (auto s : gens) g.push_back(parse_poly(s, L.xi_ring()));
    return Ideal(L.xi_ring(), g);
}

std::vector<Poly> polys(const LieAlgebra& L, std::initializer_list<const char*> gens) {
    std::vector<Poly> g;
    for (auto s : gens) g.push_back(parse_poly(s, L.xi_ring()));
    return g;
}

struct Entry {
    CatalogSpec spec;
    int D, K;
};

std::vector<Entry> entries() {
    return {
        {{"heisenberg", {{"lambda", 2}}}, 3, 3},
        {{"heisenberg", {{"lambda", 0}, {"a", 3}}}, 3, 3},
        {{"heisenberg", {{"n", 2}, {"lambda", -1}}}, 2, 2},
        {{"filiform", {}}, 3, 3},
        {{"axb", {{"sign", -1}}, "trig", 8}, 3, 3},
        {{"spiral", {}, "trig", 12}, 3, 3},
        {{"diamond", {}}, 3, 3},
        {{"motion", {}, "trig"}, 3, 3},
        {{"motion", {}, "tilde"}, 3, 3},
    };
}

}  // namespace

TEST(Monomials, CountAndOrder) {
    auto m = monomials_up_to(3, 3);
    EXPECT_EQ(m.size(), 20u);
    EXPECT_EQ(m.front(), Exponent({0, 0, 0}));
    for (std::size_t k = 1; k < m.size(); ++k) {
        int a = 0, b = 0;
        for (auto x : m[k - 1]) a += static_cast<int>(x);
        for (auto x : m[k]) b += static_cast<int>(x);
        EXPECT_LE(a, b);
    }
}

TEST(MinimalGenerators, DropsRedundant) {
    auto r = make_ring({"x", "y"});
    auto g = minimal_generators({parse_poly("x", r), parse_poly("x^2 + x*y", r), parse_poly("y - 1", r),
                                 parse_poly("x*y - x", r)},
                                r);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0], parse_poly("x", r));
    EXPECT_EQ(g[1], parse_poly("y - 1", r));
}

TEST(AnnAtZero, Examples) {
    auto h3 = catalog({"heisenberg", {{"lambda", 2}}});
    const auto& H = algebra_of(h3);
    auto a = ann_at_zero(h3, 3);
    EXPECT_EQ(a.ideal.groebner(), ideal_of(H, {"Y", "Z - 2"}).groebner()) << a.ideal.str();
    EXPECT_EQ(a.degree_bound, 3);
    EXPECT_FALSE(a.verified_order);

    auto dia = catalog({"diamond", {{"lambda", 1}, {"mu", Rational(1, 2)}}});
    const auto& Dm = algebra_of(dia);
    EXPECT_TRUE(ideal_equal(ann_at_zero(dia, 3).ideal, ideal_of(Dm, {"E - 1", "Q", "P^2 + Q^2 - 2*H*E + 1"})));

    auto mot = catalog({"motion", {{"r", 3}}, "trig"});
    EXPECT_TRUE(ideal_equal(ann_at_zero(mot, 2).ideal, ideal_of(algebra_of(mot), {"H", "P^2 + Q^2 - 9"})));

    EXPECT_THROW(ann_at_zero(h3, 0), std::invalid_argument);
}

TEST(AnnModNu, Examples) {
    auto h3 = catalog({"heisenberg", {{"lambda", 2}}});
    auto a = ann_mod_nu(h3, 3, 2);
    EXPECT_TRUE(ideal_equal(a.ideal, ideal_of(algebra_of(h3), {"Z - 2"}))) << a.ideal.str();
    EXPECT_EQ(a.nu_bound, 2);

    auto fil = catalog({"filiform", {{"l1", 1}, {"l3", 5}}});
    auto f = ann_mod_nu(fil, 4, 4);
    EXPECT_TRUE(member(parse_poly("X3 - 5 - 1/2*X2^2", algebra_of(fil).xi_ring()), f.ideal)) << f.ideal.str();

    auto axb = catalog({"axb", {{"sign", 1}}, "trig", 6});
    auto z = ann_mod_nu(axb, 3, 3);
    EXPECT_TRUE(z.generators.empty());
    EXPECT_TRUE(z.ideal.is_zero_ideal());
    EXPECT_NE(z.diagnostic.find("no nonzero element"), std::string::npos) << z.diagnostic;
    EXPECT_EQ(z.verified_order, Order(6));
}

TEST(AnnModNu, TruncationBelowBoundIsRejected) {
    auto axb = catalog({"axb", {{"sign", 1}}, "trig", 4});
    EXPECT_THROW(ann_mod_nu(axb, 3, 3), BoundError);
    EXPECT_NO_THROW(ann_mod_nu(axb, 2, 2));
}

TEST(VerifyAnnihilator, Examples) {
    auto fil = catalog({"filiform", {{"l1", 1}, {"l3", 5}}});
    EXPECT_TRUE(verify_annihilator(fil, polys(algebra_of(fil), {"X3 - 5 - 1/2*X2^2", "X1 - 1"})));

    auto dia = catalog({"diamond", {}});
    EXPECT_TRUE(verify_annihilator(dia, polys(algebra_of(dia), {"P^2 + Q^2 - 2*H*E + 1", "E - 1"})));
    EXPECT_FALSE(verify_annihilator(dia, polys(algebra_of(dia), {"Q"})));

    auto h3 = catalog({"heisenberg", {{"lambda", 2}}});
    EXPECT_FALSE(verify_annihilator(h3, polys(algebra_of(h3), {"Y"})));
    EXPECT_TRUE(verify_annihilator(h3, polys(algebra_of(h3), {"Z - 2"})));
}

TEST(VerifyAnnihilator, ApplyPbwOnTheNegativeControl) {
    auto h3 = catalog({"heisenberg", {{"lambda", 2}}});
    const auto& rep = std::get<PolyRep>(h3);
    StarAlgebra A(rep.algebra);
    auto op = apply_pbw(rep, A.tau(parse_poly("Y", rep.algebra.xi_ring())));
    EXPECT_EQ(op, rep.ops[1]);
    EXPECT_EQ(op.str(), "2*i*t*nu");
}

TEST(VarietyReport, Examples) {
    auto h3 = catalog({"heisenberg", {{"lambda", 2}}});
    const auto& H = algebra_of(h3);
    auto vp = variety_report(h3);
    ASSERT_TRUE(vp.V.affine);
    EXPECT_EQ(vp.V.affine->base, (std::vector<Gaussian>{Gaussian(0), Gaussian(0), Gaussian(2)}));
    EXPECT_EQ(vp.V.affine->directions.size(), 1u);
    EXPECT_TRUE(ideal_equal(vp.VA.ann.ideal, ideal_of(H, {"Z - 2"})));
    EXPECT_NE(vp.str(H).find("up to D=3"), std::string::npos);

    auto dia = catalog({"diamond", {}});
    auto dv = variety_report(dia);
    EXPECT_TRUE(member(parse_poly("P^2 + Q^2 - 2*H*E + 1", algebra_of(dia).xi_ring()), dv.V.ann.ideal));
    EXPECT_TRUE(dv.V.certs.inclusion_in_VA);
    EXPECT_FALSE(dv.V.affine);  // a line on the paraboloid, cut by a quadric

    auto tilde = catalog({"motion", {{"r", 3}}, "tilde"});
    auto tv = variety_report(tilde);
    EXPECT_TRUE(ideal_equal(tv.V.ann.ideal, ideal_of(algebra_of(tilde), {"Q + 3", "P"})));
    ASSERT_TRUE(tv.V.affine);
}

TEST(VarietyReport, InvariantsOnCatalog) {
    for (const auto& e : entries()) {
        auto rep = catalog(e.spec);
        const auto& L = algebra_of(rep);
        auto vp = variety_report(rep, e.D, e.K);
        SCOPED_TRACE(e.spec.name);
        // Ann_0 contains the mod-nu image
        for (const auto& g : vp.VA.ann.generators) EXPECT_TRUE(member(g, vp.V.ann.ideal)) << g.str();
        EXPECT_TRUE(vp.V.certs.inclusion_in_VA);
        for (const auto* v : {&vp.V, &vp.VA}) {
            EXPECT_TRUE(v->certs.star_closed) << v->ann.ideal.str();
            EXPECT_TRUE(v->certs.poisson_stable) << v->ann.ideal.str();
            EXPECT_TRUE(v->certs.affine_consistent);
            for (const auto& g : v->real_gens) EXPECT_TRUE(g.is_real()) << g.str();
            EXPECT_TRUE(ideal_equal(Ideal(L.xi_ring(), v->real_gens), v->ann.ideal));
        }
        // the generators found really annihilate (exactly, or to the truncation order)
        EXPECT_TRUE(verify_annihilator(rep, vp.VA.ann.generators, vp.VA.ann.verified_order));
    }
}

TEST(Oracle, AgreesWithKernelAtLowDegree) {
    for (const auto& e : entries())
        for (int D : {1, 2}) {
            auto cmp = oracle::compare_ann_at_zero(catalog(e.spec), D);
            EXPECT_TRUE(cmp.agree) << e.spec.name << " D=" << D << ": " << cmp.detail;
        }
}

TEST(Oracle, BruteKernelOfHeisenbergDegreeOne) {
    // the oracle kernel of h3 at D=1 is spanned by Y and Z - 2
    auto bk = oracle::brute_force_kernel(catalog({"heisenberg", {{"lambda", 2}}}), 1);
    EXPECT_EQ(bk.monomials.size(), 4u);
    EXPECT_EQ(bk.basis.size(), 2u);
}

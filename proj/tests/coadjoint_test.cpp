#include "dequant/charvar.hpp"
#include "dequant/coadjoint.hpp"
#include "dequant/poisson.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace dequant;

namespace {

// Ad*(exp X) xi evaluated as v -> xi(exp(-ad X) v), with the bracket only.
RVec coad_oracle(const LieAlgebra& L, const RVec& X, const RVec& xi) {
    std::size_t n = L.dim();
    RVec out(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        RVec term = L.basis_vector(j), sum = term;
        for (int k = 1; k <= static_cast<int>(n); ++k) {
            term = L.bracket(X, term);
            for (auto& t : term) t = -t / Rational(k);
            for (std::size_t m = 0; m < n; ++m) sum[m] += term[m];
        }
        out[j] = pair(xi, sum);
    }
    return out;
}

PolyVec constants(const RingPtr& r, const RVec& v) {
    PolyVec out;
    for (const auto& x : v) out.push_back(Poly(r, Gaussian(x)));
    return out;
}

Ideal ideal_of(const LieAlgebra& L, std::initializer_list<const char*> gens) {
    std::vector<Poly> g;
    for (auto s : gens) g.push_back(parse_poly(s, L.xi_ring()));
    return Ideal(L.xi_ring(), g);
}

}  // namespace

TEST(CoadExp, HeisenbergByHand) {
    auto L = algebras::heisenberg(1);
    auto r = L.xi_ring();
    for (long b : {-2L, 1L, 3L}) {
        auto got = coad_exp(L, constants(r, {0, b, 0}), constants(r, {0, 0, 2}));
        EXPECT_EQ(got, constants(r, {2 * b, 0, 2})) << "b = " << b;
    }
    auto xi = constants(r, {1, -1, 5});
    EXPECT_EQ(coad_exp(L, constants(r, {0, 0, 0}), xi), xi);
}

TEST(CoadExp, SymbolicParameterMatchesOracle) {
    auto L = algebras::filiform(3);
    auto r = make_ring({"s"});
    Poly s = Poly::var(r, 0);
    PolyVec X{Poly(r), Poly(r), Poly(r), s};
    RVec f{1, 0, 5, 0};
    auto got = coad_exp(L, X, constants(r, f));
    for (long sv = -3; sv <= 3; ++sv) {
        auto want = coad_oracle(L, {0, 0, 0, Rational(sv)}, f);
        for (std::size_t k = 0; k < L.dim(); ++k)
            EXPECT_EQ(got[k].evaluate(0, Gaussian(sv)).constant_term(), Gaussian(want[k])) << "s=" << sv << " k=" << k;
    }
    // flag coordinates move polynomially: X1 fixed, X2 linear, X3 quadratic
    EXPECT_EQ(got[0].total_degree(), 0);
    EXPECT_EQ(got[1].total_degree(), 1);
    EXPECT_EQ(got[2].total_degree(), 2);
}

TEST(CoadExp, RandomElementsMatchOracle) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-3, 3);
    for (auto L : {algebras::heisenberg(2), algebras::filiform(3), algebras::filiform(4)}) {
        auto r = L.xi_ring();
        for (int trial = 0; trial < 10; ++trial) {
            RVec X(L.dim()), xi(L.dim());
            for (auto& x : X) x = Rational(c(rng), 1 + std::abs(c(rng)));
            for (auto& x : xi) x = Rational(c(rng));
            EXPECT_EQ(coad_exp(L, constants(r, X), constants(r, xi)), constants(r, coad_oracle(L, X, xi)));
        }
    }
}

TEST(CoadExp, RejectsNonNilpotent) {
    auto L = algebras::diamond();
    auto r = L.xi_ring();
    EXPECT_THROW(coad_exp(L, constants(r, {1, 0, 0, 0}), constants(r, {0, 0, 0, 1})), std::invalid_argument);
}

TEST(OrbitIdeal, Examples) {
    auto H = algebras::heisenberg(1);
    auto o = orbit_closure_ideal(H, {0, 0, 2});
    EXPECT_TRUE(ideal_equal(o.ideal, ideal_of(H, {"Z - 2"}))) << o.ideal.str();
    EXPECT_TRUE(o.vanishes_on_parametrization());
    EXPECT_EQ(o.params, 3u);

    auto point = orbit_closure_ideal(H, {3, 0, 0});
    EXPECT_TRUE(ideal_equal(point.ideal, ideal_of(H, {"X - 3", "Y", "Z"}))) << point.ideal.str();

    auto F = algebras::filiform(3);
    auto fo = orbit_closure_ideal(F, {1, 0, 5, 0});
    EXPECT_TRUE(ideal_equal(fo.ideal, ideal_of(F, {"X1 - 1", "X3 - 5 - 1/2*X2^2"}))) << fo.ideal.str();
    EXPECT_TRUE(fo.vanishes_on_parametrization());
}

TEST(OrbitIdeal, ParameterNamesAvoidBasisNames) {
    LieAlgebra L({"s1", "s2", "s3"}, {{0, 1, {{2, Rational(1)}}}});
    auto o = orbit_closure_ideal(L, {0, 0, 1});
    EXPECT_TRUE(ideal_equal(o.ideal, ideal_of(L, {"s3 - 1"}))) << o.ideal.str();
    EXPECT_EQ(o.param_ring->size(), 6u);
}

TEST(OrbitIdeal, PoissonIdeal) {
    std::vector<std::pair<LieAlgebra, LinearForm>> cases{
        {algebras::heisenberg(1), {0, 0, 2}},      {algebras::heisenberg(1), {3, 0, 0}},
        {algebras::heisenberg(2), {1, 0, 0, 2, -3}}, {algebras::filiform(3), {1, 0, 5, 0}},
        {algebras::filiform(4), {2, 0, 1, -1, 0}},
    };
    for (const auto& [L, f] : cases) {
        auto o = orbit_closure_ideal(L, f);
        EXPECT_TRUE(o.vanishes_on_parametrization());
        EXPECT_TRUE(poisson_stable(PoissonContext(L), o.ideal, Stability::ideal)) << o.ideal.str();
    }
}

// VA of the induced representation is the orbit closure.
TEST(OrbitIdeal, EqualsModNuAnnihilatorOfBuiltRep) {
    struct Case {
        LieAlgebra L;
        LinearForm f;
        std::vector<std::size_t> h;
        int D, K;
    };
    std::vector<Case> cases{
        {algebras::heisenberg(1), {0, 0, 2}, {1, 2}, 3, 3},
        {algebras::heisenberg(1), {0, 0, -1}, {0, 2}, 2, 2},
        {algebras::filiform(3), {1, 0, 5, 0}, {0, 1, 2}, 4, 4},
        {algebras::filiform(3), {2, 1, 0, 0}, {0, 1, 2}, 3, 3},
    };
    for (const auto& c : cases) {
        auto rep = build_pi(c.L, c.f, span_of_indices(c.L, c.h));
        auto va = ann_mod_nu(rep, c.D, c.K);
        auto o = orbit_closure_ideal(c.L, c.f);
        EXPECT_TRUE(ideal_equal(va.ideal, o.ideal)) << va.ideal.str() << " vs " << o.ideal.str();
    }
}

TEST(Pukanszky, Examples) {
    auto H = algebras::heisenberg(1);
    auto r = pukanszky_affine_check(H, {0, 0, 2}, span_of_indices(H, {1, 2}));
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(ideal_equal(r.affine, ideal_of(H, {"Y", "Z - 2"})));

    auto F = algebras::filiform(3);
    EXPECT_TRUE(pukanszky_affine_check(F, {1, 0, 5, 0}, span_of_indices(F, {0, 1, 2})).holds);

    // point orbit with h = g
    auto p = pukanszky_affine_check(H, {3, 0, 0}, span_of_indices(H, {0, 1, 2}));
    EXPECT_TRUE(p.holds);
    EXPECT_TRUE(ideal_equal(p.affine, ideal_of(H, {"X - 3", "Y", "Z"})));

    EXPECT_THROW(pukanszky_affine_check(H, {0, 0, 2}, span_of_indices(H, {2})), std::invalid_argument);
}

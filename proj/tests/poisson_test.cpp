#include "dequant/poisson.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace dequant;

TEST(Poisson, LinearFormsReproduceBracket) {
    PoissonContext ctx(algebras::heisenberg(1));
    auto r = ctx.ring();
    EXPECT_EQ(ctx.bracket(parse_poly("X", r), parse_poly("Y", r)), parse_poly("Z", r));
    Poly f = parse_poly("X^2*Y + 3*Z", r);
    EXPECT_TRUE(ctx.bracket(f, f).is_zero());
}

TEST(Poisson, DiamondExample) {
    PoissonContext ctx(algebras::diamond());
    auto r = ctx.ring();
    EXPECT_EQ(ctx.bracket(parse_poly("H", r), parse_poly("P^2", r)), parse_poly("-2*P*Q", r));
}

TEST(Poisson, Casimirs) {
    PoissonContext d(algebras::diamond());
    EXPECT_TRUE(is_casimir(d, parse_poly("E", d.ring())));
    EXPECT_TRUE(is_casimir(d, parse_poly("P^2 + Q^2 - 2*E*H", d.ring())));
    PoissonContext m(algebras::motion());
    EXPECT_TRUE(is_casimir(m, parse_poly("P^2 + Q^2", m.ring())));
    PoissonContext h(algebras::heisenberg(1));
    EXPECT_FALSE(is_casimir(h, parse_poly("X", h.ring())));
}

TEST(Poisson, Stability) {
    PoissonContext h(algebras::heisenberg(1));
    auto r = h.ring();
    EXPECT_TRUE(poisson_stable(h, Ideal(r, {parse_poly("Z - 2", r), parse_poly("Y", r)}), Stability::subalgebra));
    EXPECT_FALSE(poisson_stable(h, Ideal(r, {parse_poly("Z - 2", r), parse_poly("Y", r)}), Stability::ideal));
    EXPECT_TRUE(poisson_stable(h, Ideal(r, {parse_poly("Z - 2", r)})));
    auto rep = poisson_stability(h, Ideal(r, {parse_poly("X", r)}), Stability::ideal);
    EXPECT_FALSE(rep.stable);
    EXPECT_FALSE(rep.residue.is_zero());
    PoissonContext d(algebras::diamond());
    auto rd = d.ring();
    EXPECT_TRUE(poisson_stable(d, Ideal(rd, {parse_poly("E - 1", rd), parse_poly("P^2 + Q^2 - 2*E*H + 1", rd)})));
}

TEST(Poisson, JacobiAndLeibnizRandom) {
    std::mt19937 rng(23);
    for (const auto& L : {algebras::heisenberg(1), algebras::diamond(), algebras::sl2(), algebras::filiform(3)}) {
        PoissonContext ctx(L);
        auto r = ctx.ring();
        for (int trial = 0; trial < 30; ++trial) {
            Poly f = testutil::random_poly(rng, r, 3, 3), g = testutil::random_poly(rng, r, 3, 3),
                 h = testutil::random_poly(rng, r, 3, 3);
            Poly jac = ctx.bracket(f, ctx.bracket(g, h)) + ctx.bracket(g, ctx.bracket(h, f)) + ctx.bracket(h, ctx.bracket(f, g));
            ASSERT_TRUE(jac.is_zero());
            ASSERT_EQ(ctx.bracket(f, g * h), ctx.bracket(f, g) * h + g * ctx.bracket(f, h));
            ASSERT_EQ(ctx.bracket(f, g), -ctx.bracket(g, f));
        }
    }
}

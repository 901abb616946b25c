#include "dequant/groebner.hpp"
#include "dequant/linalg.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace dequant;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }
Poly P(const char* s, const RingPtr& r) { return parse_poly(s, r); }

std::vector<Exponent> monomials_up_to(std::size_t n, unsigned deg) {
    std::vector<Exponent> out{Exponent(n, 0)};
    for (unsigned d = 1; d <= deg; ++d) {
        std::vector<Exponent> layer;
        for (const auto& e : out) {
            if (total_degree(e) != d - 1) continue;
            for (std::size_t i = 0; i < n; ++i) {
                Exponent f = e;
                ++f[i];
                layer.push_back(f);
            }
        }
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// Membership by linear algebra: p in I iff p lies in the span of m*g over
// monomials m with deg(m*g) <= bound.
bool member_by_linear_algebra(const Poly& p, const std::vector<Poly>& gens, unsigned bound) {
    std::size_t n = p.ring()->size();
    std::vector<Poly> span;
    for (const auto& g : gens)
        for (const auto& m : monomials_up_to(n, bound))
            if (static_cast<int>(total_degree(m)) + g.total_degree() <= static_cast<int>(bound))
                span.push_back(Poly::monomial(p.ring(), m) * g);
    std::map<Exponent, std::size_t> row;
    auto idx = [&](const Exponent& e) {
        auto it = row.find(e);
        if (it != row.end()) return it->second;
        std::size_t k = row.size();
        row[e] = k;
        return k;
    };
    for (const auto& s : span)
        for (const auto& [e, c] : s.terms()) idx(e);
    for (const auto& [e, c] : p.terms()) idx(e);
    Matrix<Gaussian> a(row.size(), std::vector<Gaussian>(span.size()));
    std::vector<Gaussian> b(row.size());
    for (std::size_t j = 0; j < span.size(); ++j)
        for (const auto& [e, c] : span[j].terms()) a[row[e]][j] = c;
    for (const auto& [e, c] : p.terms()) b[row[e]] = c;
    if (span.empty()) return p.is_zero();
    return solve(a, b).has_value();
}

}  // namespace

TEST(Groebner, AlreadyReduced) {
    auto r = xyz();
    auto gb = groebner_basis({P("x", r), P("y", r)}, r, MonomialOrder::grevlex());
    EXPECT_EQ(gb, (std::vector<Poly>{P("y", r), P("x", r)}));
    auto h = make_ring({"X", "Y", "Z"});
    auto gb2 = Ideal(h, {P("Z - 2", h), P("Y", h)}).groebner();
    ASSERT_EQ(gb2.size(), 2u);
    EXPECT_TRUE(std::count(gb2.begin(), gb2.end(), P("Z - 2", h)));
    EXPECT_TRUE(std::count(gb2.begin(), gb2.end(), P("Y", h)));
}

TEST(Groebner, TwistedCubic) {
    auto r = xyz();
    auto gb = groebner_basis({P("x^2 - y", r), P("x^3 - z", r)}, r, MonomialOrder::lex());
    EXPECT_TRUE(std::count(gb.begin(), gb.end(), P("y^3 - z^2", r)));
    for (const auto& g : gb) EXPECT_TRUE(member(g, Ideal(r, {P("x^2 - y", r), P("x^3 - z", r)})));
}

TEST(Groebner, DegenerateIdeals) {
    auto r = xyz();
    EXPECT_TRUE(groebner_basis({}, r, MonomialOrder::grevlex()).empty());
    EXPECT_TRUE(Ideal(r, {P("x", r), P("x - 1", r)}).is_unit_ideal());
    EXPECT_EQ(Ideal(r, {P("x*y - 1", r), P("x", r)}).groebner(), std::vector<Poly>{Poly(r, Gaussian(1))});
}

TEST(Groebner, Membership) {
    auto h = make_ring({"X", "Y", "Z"});
    Ideal I(h, {P("Z - 2", h), P("Y", h)});
    EXPECT_TRUE(member(P("Z - 2", h), I));
    EXPECT_TRUE(member(P("Z*Y", h), I));
    EXPECT_FALSE(member(P("X", h), I));
}

TEST(Groebner, IdealEquality) {
    auto r = xyz();
    EXPECT_TRUE(ideal_equal(Ideal(r, {P("x", r)}), Ideal(r, {P("2*x", r)})));
    EXPECT_TRUE(ideal_equal(Ideal(r, {P("x + y", r), P("y", r)}), Ideal(r, {P("x", r), P("y", r)})));
    EXPECT_FALSE(ideal_equal(Ideal(r, {P("x^2", r)}), Ideal(r, {P("x", r)})));
}

TEST(Groebner, Eliminate) {
    auto r = make_ring({"s", "a", "b"});
    Ideal I(r, {P("a - s", r), P("b - s^2", r)});
    Ideal J = eliminate(I, {"s"});
    auto r2 = J.ring();
    ASSERT_EQ(r2->names, (std::vector<std::string>{"a", "b"}));
    EXPECT_TRUE(ideal_equal(J, Ideal(r2, {P("b - a^2", r2)})));
    Ideal K = eliminate(Ideal(r, {P("a - 3", r)}), {});
    EXPECT_TRUE(ideal_equal(K, Ideal(r, {P("a - 3", r)})));
}

TEST(Groebner, RealGenerators) {
    auto h = make_ring({"X", "Y", "Z"});
    auto rg = real_generators(Ideal(h, {P("Z - 2", h), P("Y", h)}));
    EXPECT_TRUE(ideal_equal(Ideal(h, rg), Ideal(h, {P("Z - 2", h), P("Y", h)})));
    for (const auto& g : rg) EXPECT_TRUE(g.is_real());
    auto r = xyz();
    EXPECT_THROW(real_generators(Ideal(r, {P("x + i*y", r)})), std::domain_error);
    auto rg2 = real_generators(Ideal(r, {P("x + i*y", r), P("x - i*y", r)}));
    EXPECT_TRUE(ideal_equal(Ideal(r, rg2), Ideal(r, {P("x", r), P("y", r)})));
}

TEST(Groebner, BuchbergerCriterionRandom) {
    std::mt19937 rng(29);
    auto r = xyz();
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Poly> gens;
            for (int k = 0; k < 3; ++k) gens.push_back(testutil::random_poly(rng, r, 2, 3, false));
            auto gb = groebner_basis(gens, r, order);
            for (std::size_t i = 0; i < gb.size(); ++i)
                for (std::size_t j = i + 1; j < gb.size(); ++j)
                    ASSERT_TRUE(normal_form(s_polynomial(gb[i], gb[j], order), gb, order).is_zero());
            // reduced: no term of g is divisible by another leading monomial
            for (std::size_t i = 0; i < gb.size(); ++i) {
                EXPECT_EQ(leading_coefficient(gb[i], order), Gaussian(1));
                for (std::size_t j = 0; j < gb.size(); ++j) {
                    if (i == j) continue;
                    Exponent lm = leading_monomial(gb[j], order);
                    for (const auto& [e, c] : gb[i].terms()) {
                        bool div = true;
                        for (std::size_t v = 0; v < e.size(); ++v) div = div && e[v] >= lm[v];
                        ASSERT_FALSE(div);
                    }
                }
            }
        }
    }
}

TEST(Groebner, DeterministicUnderGeneratorOrder) {
    std::mt19937 rng(31);
    auto r = xyz();
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Poly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(testutil::random_poly(rng, r, 2, 3));
        auto a = groebner_basis(gens, r, MonomialOrder::grevlex());
        std::reverse(gens.begin(), gens.end());
        gens.push_back(gens[0] * gens[1]);
        EXPECT_EQ(a, groebner_basis(gens, r, MonomialOrder::grevlex()));
    }
}

TEST(Groebner, MembershipMatchesLinearAlgebra) {
    // Ideals generated by quadrics and cubics; candidates of degree <= 3.
    std::mt19937 rng(37);
    auto r = make_ring({"x", "y"});
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Poly> gens{testutil::random_poly(rng, r, 2, 2, false), testutil::random_poly(rng, r, 3, 2, false)};
        if (gens[0].is_zero() || gens[1].is_zero()) continue;
        Ideal I(r, gens);
        for (int c = 0; c < 6; ++c) {
            Poly p = c % 2 ? testutil::random_poly(rng, r, 3, 3, false)
                           : gens[0] * testutil::random_poly(rng, r, 1, 2, false) + gens[1] * testutil::random_poly(rng, r, 0, 1, false);
            bool la = member_by_linear_algebra(p, gens, 6);
            // Linear algebra at a finite degree bound only certifies membership.
            if (la) ASSERT_TRUE(member(p, I));
            if (!member(p, I)) ASSERT_FALSE(la);
            ASSERT_TRUE(reduce(reduce(p, I), I) == reduce(p, I));
            ASSERT_EQ(member(p, I), reduce(p, I).is_zero());
        }
    }
}

TEST(Groebner, EliminationContainedAndVariableFree) {
    std::mt19937 rng(41);
    auto r = make_ring({"s", "x", "y"});
    for (int trial = 0; trial < 10; ++trial) {
        Ideal I(r, {P("x", r) - testutil::random_poly(rng, r, 2, 2, false), P("y", r) - testutil::random_poly(rng, r, 2, 2, false)});
        Ideal J = eliminate(I, {"s"});
        for (const auto& g : J.groebner()) EXPECT_TRUE(member(g.embed(r), I));
    }
}

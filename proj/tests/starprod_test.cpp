#include "dequant/poisson.hpp"
#include "dequant/starprod.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <deque>

using namespace dequant;

namespace {

// Independent PBW normal form: repeatedly find the first descent in a word
// and replace ...ab... (a > b) by ...ba... + nu [a, b].
Poly oracle_word(const LieAlgebra& L, const RingPtr& R, std::vector<std::size_t> word) {
    std::size_t nu_at = L.dim();
    Poly out(R);
    std::deque<std::pair<std::vector<std::size_t>, Poly>> todo;
    todo.emplace_back(std::move(word), Poly(R, Gaussian(1)));
    while (!todo.empty()) {
        auto [w, c] = std::move(todo.front());
        todo.pop_front();
        std::size_t k = 0;
        while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
        if (k + 1 >= w.size()) {
            Exponent e(R->size(), 0);
            for (auto x : w) ++e[x];
            out += Poly::monomial(R, e) * c;
            continue;
        }
        std::size_t a = w[k], b = w[k + 1];
        auto swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        todo.emplace_back(swapped, c);
        for (std::size_t m = 0; m < L.dim(); ++m) {
            if (sgn(L.c(a, b, m)) == 0) continue;
            std::vector<std::size_t> shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            shorter.push_back(m);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
            todo.emplace_back(shorter, c * Poly::var(R, nu_at) * Gaussian(L.c(a, b, m)));
        }
    }
    return out;
}

// Symmetrization as the literal average over all orderings of the letters.
Poly oracle_symmetrize_monomial(const LieAlgebra& L, const RingPtr& R, const Exponent& alpha) {
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (unsigned m = 0; m < alpha[i]; ++m) word.push_back(i);
    Poly sum(R);
    long count = 0;
    do {
        sum += oracle_word(L, R, word);
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return sum * Gaussian(Rational(1, count));
}

Poly P(const char* s, const RingPtr& r) { return parse_poly(s, r); }

}  // namespace

TEST(Pbw, NormalizeExamples) {
    StarAlgebra h(algebras::heisenberg(1));
    auto R = h.ring();
    EXPECT_EQ(h.pbw_word({1, 0}), P("X*Y - nu*Z", R));
    LieAlgebra abelian({"A", "B", "C"}, {});
    StarAlgebra a(abelian);
    EXPECT_EQ(a.pbw_word({2, 0, 1, 0}), P("A^2*B*C", a.ring()));
    StarAlgebra s(algebras::sl2());
    EXPECT_EQ(s.pbw_word({2, 0}), P("F*E + nu*H", s.ring()));
}

TEST(Pbw, AgreesWithWordRewritingOracle) {
    std::mt19937 rng(43);
    for (const auto& L : {algebras::heisenberg(1), algebras::filiform(3), algebras::diamond(), algebras::sl2(), algebras::spiral()}) {
        StarAlgebra A(L);
        std::uniform_int_distribution<int> letter(0, static_cast<int>(L.dim()) - 1), len(0, 5);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::size_t> w(static_cast<std::size_t>(len(rng)));
            for (auto& x : w) x = static_cast<std::size_t>(letter(rng));
            ASSERT_EQ(A.pbw_word(w), oracle_word(L, A.ring(), w));
        }
    }
}

TEST(Pbw, AssociativeOnCatalog) {
    std::mt19937 rng(47);
    for (const auto& L : {algebras::heisenberg(1), algebras::diamond(), algebras::sl2()}) {
        StarAlgebra A(L);
        for (int trial = 0; trial < 20; ++trial) {
            Poly a = testutil::random_poly(rng, A.ring(), 3, 3), b = testutil::random_poly(rng, A.ring(), 3, 3),
                 c = testutil::random_poly(rng, A.ring(), 2, 3);
            ASSERT_EQ(A.pbw_mul(A.pbw_mul(a, b), c), A.pbw_mul(a, A.pbw_mul(b, c)));
        }
    }
}

TEST(Symmetrize, Examples) {
    StarAlgebra h(algebras::heisenberg(1));
    auto R = h.ring();
    EXPECT_EQ(h.symmetrize(P("X", R)), P("X", R));
    EXPECT_EQ(h.symmetrize(P("X*Y", R)), P("X*Y - 1/2*nu*Z", R));
}

TEST(Symmetrize, MatchesPermutationAverage) {
    for (const auto& L : {algebras::heisenberg(1), algebras::diamond(), algebras::sl2()}) {
        StarAlgebra A(L);
        auto R = A.ring();
        std::size_t n = L.dim();
        // every monomial of degree <= 4
        std::vector<Exponent> mons{Exponent(R->size(), 0)};
        for (int d = 0; d < 4; ++d) {
            std::vector<Exponent> next;
            for (const auto& e : mons)
                for (std::size_t i = 0; i < n; ++i) {
                    Exponent f = e;
                    ++f[i];
                    next.push_back(f);
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            for (const auto& e : next) {
                ASSERT_EQ(A.symmetrize(Poly::monomial(R, e)), oracle_symmetrize_monomial(L, R, e));
            }
            mons = next;
        }
    }
}

TEST(Symmetrize, InverseRandom) {
    std::mt19937 rng(53);
    for (const auto& L : {algebras::heisenberg(1), algebras::diamond(), algebras::sl2(), algebras::filiform(3)}) {
        StarAlgebra A(L);
        for (int trial = 0; trial < 30; ++trial) {
            Poly p = testutil::random_poly(rng, A.ring(), 3, 4);
            ASSERT_EQ(A.unsymmetrize(A.symmetrize(p)), p);
            ASSERT_EQ(A.symmetrize(A.unsymmetrize(p)), p);
        }
    }
}

TEST(Duflo, LogSinhcCoefficients) {
    auto a = log_sinhc_coefficients(3);
    EXPECT_EQ(a[0], Rational(1, 6));
    EXPECT_EQ(a[1], Rational(-1, 180));
    EXPECT_EQ(a[2], Rational(1, 2835));
}

TEST(Duflo, NilpotentIsIdentity) {
    for (const auto& L : {algebras::heisenberg(1), algebras::heisenberg(2), algebras::filiform(3)}) {
        StarAlgebra A(L);
        auto op = A.duflo_jhalf(6);
        EXPECT_EQ(op.series.coeffs().size(), 1u);
        EXPECT_EQ(op.series.coeff(0), Poly(op.ring, Gaussian(1)));
    }
}

TEST(Duflo, DiamondMatchesClosedForm) {
    StarAlgebra A(algebras::diamond());
    auto op = A.duflo_jhalf(6);
    auto r = op.ring;
    // sin(nu a / 2) / (nu a / 2) = 1 - (nu a)^2/24 + (nu a)^4/1920 - (nu a)^6/322560
    EXPECT_EQ(op.series.coeff(1), Poly(r));
    EXPECT_EQ(op.series.coeff(2), P("-1/24*d_H^2", r));
    EXPECT_EQ(op.series.coeff(4), P("1/1920*d_H^4", r));
    EXPECT_EQ(op.series.coeff(6), P("-1/322560*d_H^6", r));
    EXPECT_EQ(A.duflo_jhalf(3).str(), "1 - 1/24*d_H^2*nu^2 + O(nu^4)");
    auto R = A.ring();
    EXPECT_EQ(A.apply_jhalf(P("E", R)), P("E", R));
    EXPECT_EQ(A.apply_jhalf(P("P^2 + Q^2 - 2*E*H", R)), P("P^2 + Q^2 - 2*E*H", R));
    EXPECT_EQ(A.apply_jhalf(P("H^2", R)), P("H^2 - 1/12*nu^2", R));
    Poly p = P("H^4 + H^2*P - 3*E*H^3", R);
    EXPECT_EQ(A.apply_jhalf(A.apply_jhalf(p, 1), -1), p);
}

TEST(Star, HeisenbergExamples) {
    StarAlgebra A(algebras::heisenberg(1));
    auto R = A.ring();
    EXPECT_EQ(A.star(P("X", R), P("Y", R)), P("X*Y + 1/2*nu*Z", R));
    EXPECT_EQ(A.star(P("X", R), P("Y", R)) - A.star(P("Y", R), P("X", R)), P("nu*Z", R));
    auto s = A.star_series(P("X", R), P("Y", R));
    EXPECT_EQ(s.str(), "X*Y + 1/2*Z*nu");
}

TEST(Star, DiamondCentral) {
    StarAlgebra A(algebras::diamond());
    auto R = A.ring();
    Poly c1 = P("E", R), c2 = P("P^2 + Q^2 - 2*E*H", R);
    EXPECT_EQ(A.star(c1, c2), c1 * c2);
    EXPECT_EQ(A.star(c2, c2), c2 * c2);
    std::mt19937 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        Poly q = testutil::random_poly(rng, R, 3, 3);
        q = q.evaluate(A.nu_index(), Gaussian(0));
        ASSERT_EQ(A.star(c2, q), A.star(q, c2));
    }
}

TEST(Star, PropertySuiteHeisenbergExact) {
    StarPropertyOptions opts;
    opts.order = std::nullopt;
    opts.samples = 15;
    auto rep = star_properties(algebras::heisenberg(1), opts);
    EXPECT_TRUE(rep.ok()) << rep.str();
}

TEST(Star, PropertySuiteDiamond) {
    StarPropertyOptions opts;
    opts.samples = 10;
    auto R = algebras::diamond().xi_ring();
    opts.casimirs = {P("E", R), P("P^2 + Q^2 - 2*E*H", R)};
    auto rep = star_properties(algebras::diamond(), opts);
    EXPECT_TRUE(rep.ok()) << rep.str();
}

TEST(Star, CorruptedBracketBreaksAssociativity) {
    // Jacobi fails for this table.
    LieAlgebra bad({"X", "Y", "Z"}, {{0, 1, {{2, 1}}}, {0, 2, {{1, 1}}}, {1, 2, {{1, 1}}}});
    StarPropertyOptions opts;
    opts.samples = 20;
    opts.order = std::nullopt;
    auto rep = star_properties(bad, opts);
    EXPECT_FALSE(rep.checks[0].ok);
}

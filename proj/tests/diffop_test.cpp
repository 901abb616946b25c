#include "dequant/diffop.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace dequant;

namespace {

RingPtr t_ring() { return make_ring({"t"}); }
PolySeries S(const Poly& p) { return PolySeries(p); }
PolySeries nu_times(const Poly& p) { return PolySeries(std::vector<Poly>{Poly(), p}, std::nullopt); }

PolyOperator D(const RingPtr& r, std::size_t k = 0, unsigned m = 1) { return PolyOperator::derivative(r, k, m); }
PolyOperator M(const RingPtr& r, const PolySeries& c) { return PolyOperator::multiplication(r, c); }

const Gaussian I = Gaussian::i();
const Gaussian mI = Gaussian(Rational(0), Rational(-1));

PolyOperator random_operator(std::mt19937& rng, const RingPtr& r) {
    std::uniform_int_distribution<int> ord(0, 2), nu(0, 2);
    PolyOperator A(r);
    for (int k = 0; k < 3; ++k) {
        MultiIndex a(r->size(), 0);
        for (auto& x : a) x = static_cast<std::uint32_t>(ord(rng) % 2);
        std::vector<Poly> cs;
        int n = nu(rng);
        for (int m = 0; m <= n; ++m) cs.push_back(testutil::random_poly(rng, r, 2, 2));
        A.add_term(a, PolySeries(cs, std::nullopt));
    }
    return A;
}

}  // namespace

TEST(DiffOp, ComposeLeibniz) {
    auto r = t_ring();
    Poly t = Poly::var(r, 0);
    EXPECT_EQ(D(r) * M(r, S(t)), M(r, S(t)) * D(r) + PolyOperator::scalar(r, 1));
    PolyOperator a = mI * D(r), b = M(r, nu_times(t * Gaussian(Rational(0), Rational(2))));
    PolyOperator expected = M(r, nu_times(t * Gaussian(2))) * D(r) + M(r, nu_times(Poly(r, Gaussian(2))));
    EXPECT_EQ(a * b, expected);
}

TEST(DiffOp, TrigCompose) {
    auto r = make_trig_ring();
    TrigSeries c(TrigPoly::cos(r)), s(TrigPoly::sin(r));
    TrigOperator dth = TrigOperator::derivative(r, 0);
    EXPECT_EQ(dth * TrigOperator::multiplication(r, c), TrigOperator::multiplication(r, c) * dth - TrigOperator::multiplication(r, s));
}

TEST(DiffOp, Commutators) {
    auto r = t_ring();
    Poly t = Poly::var(r, 0);
    PolyOperator p = mI * D(r), q = M(r, nu_times(t * I));
    EXPECT_EQ(p.commutator(q), M(r, nu_times(Poly(r, Gaussian(1)))));
    EXPECT_TRUE(p.commutator(p).is_zero());
    auto tr = make_trig_ring();
    TrigOperator H = TrigOperator::monomial(tr, {1}, TrigSeries(std::vector<TrigPoly>{TrigPoly(), TrigPoly(-1)}, std::nullopt));
    TrigOperator P = TrigOperator::multiplication(tr, TrigSeries(TrigPoly::sin(tr) * TrigPoly(-3)));
    TrigSeries expected(std::vector<TrigPoly>{TrigPoly(), TrigPoly::cos(tr) * TrigPoly(3)}, std::nullopt);
    EXPECT_EQ(H.commutator(P), TrigOperator::multiplication(tr, expected));
}

TEST(DiffOp, Apply) {
    auto r = t_ring();
    Poly t = Poly::var(r, 0);
    EXPECT_EQ((M(r, S(t)) * D(r)).apply(t * t), S(t * t * Gaussian(2)));
    EXPECT_EQ(D(r, 0, 2).apply(t.pow(3)), S(t * Gaussian(6)));
    auto tr = make_trig_ring();
    TrigOperator H = TrigOperator::monomial(tr, {1}, TrigSeries(std::vector<TrigPoly>{TrigPoly(), TrigPoly(-1)}, std::nullopt));
    EXPECT_EQ(H.apply(TrigPoly::cos(tr)), TrigSeries(std::vector<TrigPoly>{TrigPoly(), TrigPoly::sin(tr)}, std::nullopt));
}

TEST(DiffOp, FormalAdjointExamples) {
    auto r = t_ring();
    Poly t = Poly::var(r, 0);
    PolyOperator p = mI * D(r);
    EXPECT_EQ(p.formal_adjoint(), p);
    PolyOperator q = M(r, nu_times(t * Gaussian(Rational(0), Rational(3))));
    EXPECT_EQ(q.formal_adjoint(), q);
    PolyOperator td = M(r, S(t)) * D(r);
    EXPECT_EQ(td.formal_adjoint(), -(M(r, S(t)) * D(r)) - PolyOperator::scalar(r, 1));
    // imaginary coordinate: d is formally self-adjoint
    auto ri = make_ring({"u"}, {true});
    EXPECT_EQ(D(ri).formal_adjoint(), D(ri));
}

TEST(DiffOp, PrinterIsDeterministic) {
    auto r = t_ring();
    Poly t = Poly::var(r, 0);
    PolyOperator a = mI * D(r);
    EXPECT_EQ(a.str(), "-i*d_t");
    PolyOperator b = M(r, nu_times(t * Gaussian(Rational(0), Rational(2))));
    EXPECT_EQ(b.str(), "2*i*t*nu");
    PolyOperator c = Gaussian(Rational(-1, 2)) * D(r, 0, 2) + M(r, PolySeries(std::vector<Poly>{Poly(Gaussian(Rational(1, 2))), Poly(), t * t * Gaussian(Rational(-1, 2))}, std::nullopt));
    EXPECT_EQ(c.str(), "1/2 - 1/2*t^2*nu^2 - 1/2*d_t^2");
}

TEST(DiffOp, AlgebraPropertiesRandom) {
    std::mt19937 rng(61);
    auto r = make_ring({"t", "u"});
    for (int trial = 0; trial < 40; ++trial) {
        PolyOperator a = random_operator(rng, r), b = random_operator(rng, r), c = random_operator(rng, r);
        ASSERT_EQ((a * b) * c, a * (b * c));
        PolyOperator jac = a.commutator(b.commutator(c)) + b.commutator(c.commutator(a)) + c.commutator(a.commutator(b));
        ASSERT_TRUE(jac.is_zero());
        PolySeries phi(testutil::random_poly(rng, r, 4, 4));
        ASSERT_EQ((a * b).apply(phi), a.apply(b.apply(phi)));
        ASSERT_EQ(a.formal_adjoint().formal_adjoint(), a);
        ASSERT_EQ((a * b).formal_adjoint(), b.formal_adjoint() * a.formal_adjoint());
    }
}

TEST(DiffOp, TrigLeibnizRandom) {
    std::mt19937 rng(67);
    auto r = make_trig_ring({"x"});
    for (int trial = 0; trial < 30; ++trial) {
        TrigOperator a(r), b(r);
        for (int k = 0; k < 2; ++k) {
            a.add_term({static_cast<std::uint32_t>(k), 0}, TrigSeries(TrigPoly(testutil::random_poly(rng, r, 2, 2))));
            b.add_term({0, static_cast<std::uint32_t>(k)}, TrigSeries(TrigPoly(testutil::random_poly(rng, r, 2, 2))));
        }
        TrigSeries phi(TrigPoly(testutil::random_poly(rng, r, 3, 3)));
        ASSERT_EQ((a * b).apply(phi), a.apply(b.apply(phi)));
        ASSERT_EQ((a * b).formal_adjoint(), b.formal_adjoint() * a.formal_adjoint());
    }
}

TEST(DiffOp, TruncationPropagates) {
    auto r = t_ring();
    Poly t = Poly::var(r, 0);
    PolyOperator a = M(r, PolySeries(std::vector<Poly>{Poly(1), t}, 1));
    PolyOperator b = M(r, PolySeries(std::vector<Poly>{Poly(1), -t}, std::nullopt));
    EXPECT_EQ((a * b).order(), Order(1));
    EXPECT_EQ((a * b), M(r, PolySeries(Poly(r, Gaussian(1)), 1)));
    EXPECT_THROW(a.substitute_nu(Gaussian(1)), std::domain_error);
    EXPECT_EQ(b.substitute_nu(Gaussian(2)), M(r, S(Poly(r, Gaussian(1)) - t * Gaussian(2))));
}

#include "dequant/nuseries.hpp"
#include "dequant/poly.hpp"
#include "dequant/trigpoly.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace dequant;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

}  // namespace

TEST(Gaussian, ParsePrintRoundTrip) {
    for (const char* s : {"0", "3/2", "-1/2", "i", "-i", "3/4*i", "1/2+3/4*i", "-1/2-i", "7-2/3*i"}) {
        Gaussian g = Gaussian::parse(s);
        EXPECT_EQ(Gaussian::parse(g.str()), g) << s;
    }
    EXPECT_EQ(Gaussian::parse("6/4").str(), "3/2");
    EXPECT_EQ(Gaussian::parse("1/2+3/4*i").str(), "1/2+3/4*i");
    EXPECT_THROW(Gaussian::parse("1/0"), ParseError);
    EXPECT_THROW(Gaussian::parse("abc"), ParseError);
}

TEST(Gaussian, FieldOps) {
    Gaussian a(Rational(1, 2), Rational(3)), b(Rational(-2), Rational(1, 3));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(Gaussian::i() * Gaussian::i(), Gaussian(-1));
    EXPECT_EQ(a.conj().conj(), a);
}

TEST(Poly, DifferenceOfSquares) {
    auto r = xyz();
    Poly x = Poly::var(r, 0), y = Poly::var(r, 1);
    EXPECT_EQ((x + y) * (x - y), x * x - y * y);
    EXPECT_EQ(((x + y) * (x - y)).str(), "x^2 - y^2");
}

TEST(Poly, ParsePrintRoundTrip) {
    auto r = xyz();
    for (const char* s : {"x^2 - y^2", "(1/2+i)*x*y + 3*z - 7/3", "-i*x + i*y", "x^3*y - 2*z^2 + 1", "0"}) {
        Poly p = parse_poly(s, r);
        EXPECT_EQ(parse_poly(p.str(), r), p) << s;
        EXPECT_EQ(parse_poly(p.str(), r).str(), p.str());
    }
    EXPECT_EQ(parse_poly("(x+y)^2", r).str(), "x^2 + 2*x*y + y^2");
    EXPECT_THROW(parse_poly("x + w", r), ParseError);
    EXPECT_THROW(parse_poly("x / y", r), ParseError);
}

TEST(Poly, GradedLexPrintOrder) {
    auto r = xyz();
    EXPECT_EQ(parse_poly("1 + z + y + x + x*z + y^2", r).str(), "x*z + y^2 + x + y + z + 1");
}

TEST(Poly, RingAxiomsRandom) {
    std::mt19937 rng(7);
    auto r = xyz();
    for (int trial = 0; trial < 1000; ++trial) {
        Poly a = testutil::random_poly(rng, r, 3, 3), b = testutil::random_poly(rng, r, 3, 3), c = testutil::random_poly(rng, r, 3, 3);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
    }
}

TEST(Poly, InvolutionIsAntiAutomorphism) {
    std::mt19937 rng(11);
    auto r = xyz();
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = testutil::random_poly(rng, r, 3, 4), b = testutil::random_poly(rng, r, 3, 4);
        ASSERT_EQ((a * b).conj(), b.conj() * a.conj());
        ASSERT_EQ(a.conj().conj(), a);
    }
}

TEST(Poly, SelfAdjointSplit) {
    auto r = xyz();
    Poly f = parse_poly("x + i*y", r);
    EXPECT_EQ(f.real_part(), parse_poly("x", r));
    EXPECT_EQ(f.imag_part(), parse_poly("y", r));
    Poly g = parse_poly("(2+3*i)*x", r);
    EXPECT_EQ(g.real_part(), parse_poly("2*x", r));
    EXPECT_EQ(g.imag_part(), parse_poly("3*x", r));
    Poly h = parse_poly("x^2 - 3*y", r);
    EXPECT_EQ(h.real_part(), h);
    EXPECT_TRUE(h.imag_part().is_zero());
}

TEST(NuSeries, TruncatedProduct) {
    auto r = xyz();
    Poly x = Poly::var(r, 0);
    PolySeries a(std::vector<Poly>{Poly(1), x}, 1), b(std::vector<Poly>{Poly(1), -x}, 1);
    EXPECT_EQ(a * b, PolySeries(Poly(1), 1));
    PolySeries ea(std::vector<Poly>{Poly(1), x}, std::nullopt), eb(std::vector<Poly>{Poly(1), -x}, std::nullopt);
    EXPECT_EQ((ea * eb).coeff(2), -(x * x));
}

TEST(NuSeries, OrderIsMinimum) {
    ScalarSeries a(std::vector<Gaussian>{1, 2, 3, 4}, 3), b(std::vector<Gaussian>{1, 1}, 1);
    EXPECT_EQ((a + b).order(), Order(1));
    EXPECT_EQ((a * b).order(), Order(1));
    ScalarSeries e(std::vector<Gaussian>{1, 1}, std::nullopt);
    EXPECT_EQ((a * e).order(), Order(3));
}

TEST(NuSeries, TruncatedAgreesWithExact) {
    std::mt19937 rng(3);
    auto r = xyz();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Poly> ca, cb;
        for (int k = 0; k < 5; ++k) {
            ca.push_back(testutil::random_poly(rng, r, 2, 2));
            cb.push_back(testutil::random_poly(rng, r, 2, 2));
        }
        PolySeries a(ca, std::nullopt), b(cb, std::nullopt);
        for (int N : {0, 2, 4, 6}) {
            ASSERT_EQ(a.truncated(N) * b.truncated(N), (a * b).truncated(N));
            ASSERT_EQ(a.truncated(N) + b.truncated(N), (a + b).truncated(N));
        }
    }
}

TEST(NuSeries, Involution) {
    auto r = xyz();
    Poly x = Poly::var(r, 0), y = Poly::var(r, 1);
    PolySeries ix(x * Gaussian::i());
    EXPECT_EQ(ix.conj(), PolySeries(x * Gaussian(Rational(0), Rational(-1))));
    PolySeries f(std::vector<Poly>{y * Gaussian::i(), x}, std::nullopt);  // i y + nu x
    PolySeries expected(std::vector<Poly>{y * Gaussian(Rational(0), Rational(-1)), -x}, std::nullopt);
    EXPECT_EQ(f.conj(), expected);
    EXPECT_EQ(f.conj().conj(), f);
    PolySeries p(parse_poly("x^2 - 2*y", r));
    EXPECT_EQ(p.conj(), p);
}

TEST(NuSeries, InvolutionRandomAntiAutomorphism) {
    std::mt19937 rng(5);
    auto r = xyz();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Poly> ca, cb;
        for (int k = 0; k < 4; ++k) {
            ca.push_back(testutil::random_poly(rng, r, 2, 2));
            cb.push_back(testutil::random_poly(rng, r, 2, 2));
        }
        PolySeries a(ca, std::nullopt), b(cb, std::nullopt);
        ASSERT_EQ((a * b).conj(), b.conj() * a.conj());
        ASSERT_EQ(a.conj().conj(), a);
    }
}

TEST(NuSeries, Substitute) {
    auto r = xyz();
    Poly x = Poly::var(r, 0), y = Poly::var(r, 1), z = Poly::var(r, 2);
    PolySeries a(std::vector<Poly>{Poly(1), x}, std::nullopt);
    EXPECT_EQ(a.substitute(Gaussian::i()), Poly(1) + x * Gaussian::i());
    PolySeries b = PolySeries::nu_power(2);
    EXPECT_EQ(b.substitute(Gaussian(2)), Poly(4));
    PolySeries c(std::vector<Poly>{x, y, z}, std::nullopt);
    EXPECT_EQ(c.substitute(Gaussian(Rational(0), Rational(-1))), x - y * Gaussian::i() - z);
    EXPECT_THROW(a.truncated(3).substitute(Gaussian(1)), std::domain_error);
}

TEST(NuSeries, ExpSeries) {
    auto r = make_ring({"x"});
    Poly x = Poly::var(r, 0);
    PolySeries e = exp_series(Gaussian::i(), x, 4);
    EXPECT_EQ(e.coeff(0), Poly(1));
    EXPECT_EQ(e.coeff(1), x * Gaussian::i());
    EXPECT_EQ(e.coeff(2), x * x * Gaussian(Rational(-1, 2)));
    // exp(a) exp(-a) = 1 to order 4
    EXPECT_EQ(e * exp_series(Gaussian(Rational(0), Rational(-1)), x, 4), PolySeries(Poly(1), 4));
    // cosh^2 - sinh^2 = 1
    PolySeries ch = cosh_series(Gaussian(1), x, 6), sh = sinh_series(Gaussian(1), x, 6);
    EXPECT_EQ(ch * ch - sh * sh, PolySeries(Poly(1), 6));
    PolySeries co = cos_series(Gaussian(1), x, 6), si = sin_series(Gaussian(1), x, 6);
    EXPECT_EQ(co * co + si * si, PolySeries(Poly(1), 6));
}

TEST(TrigPoly, DefiningRelation) {
    auto r = make_trig_ring();
    TrigPoly c = TrigPoly::cos(r), s = TrigPoly::sin(r);
    EXPECT_EQ(s * s * c, c - c * c * c);
    EXPECT_EQ((c * c + s * s), TrigPoly(Gaussian(1)));
}

TEST(TrigPoly, DerivationLeibniz) {
    auto r = make_trig_ring();
    TrigPoly c = TrigPoly::cos(r), s = TrigPoly::sin(r);
    EXPECT_EQ(c.dtheta(), -s);
    EXPECT_EQ(s.dtheta(), c);
    EXPECT_TRUE((c * c + s * s).dtheta().is_zero());
    std::mt19937 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        TrigPoly f(testutil::random_poly(rng, r, 4, 4)), g(testutil::random_poly(rng, r, 4, 4));
        ASSERT_EQ((f * g).dtheta(), f.dtheta() * g + f * g.dtheta());
    }
}

TEST(TrigPoly, NormalFormHasLowSDegree) {
    std::mt19937 rng(13);
    auto r = make_trig_ring();
    for (int trial = 0; trial < 100; ++trial) {
        TrigPoly f(testutil::random_poly(rng, r, 6, 5));
        for (const auto& [e, c] : f.poly().terms()) ASSERT_LE(e[1], 1u);
    }
}

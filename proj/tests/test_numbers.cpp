#include <gtest/gtest.h>

#include "omeasure/puiseux.hpp"

using namespace omeasure;

namespace {

const PuiseuxScalar t = PuiseuxScalar::t();

PuiseuxScalar tp(Rational e, Rational c = 1) { return PuiseuxScalar::monomial(std::move(c), std::move(e)); }

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational(""));
}

TEST(Rational, FloorCeilAndPowers) {
  EXPECT_EQ(floor(Rational(-3, 2)), -2);
  EXPECT_EQ(ceil(Rational(-3, 2)), -1);
  EXPECT_EQ(ceil(Rational(4)), 4);
  EXPECT_EQ(ipow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(ipow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(iroot(Integer(1000), 3), 10);
  EXPECT_EQ(iroot(Integer(999), 3), 9);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
}

TEST(ExtRational, InfinityOrdersLast) {
  EXPECT_TRUE(ExtRational::infinity().is_infinite());
  EXPECT_LT(ExtRational(Rational(100)), ExtRational::infinity());
  EXPECT_EQ(ExtRational::infinity() + ExtRational(Rational(-5)), ExtRational::infinity());
  EXPECT_EQ(ExtRational::infinity().str(), "inf");
}

TEST(Interval, ArithmeticEnclosesPointwiseResults) {
  Interval a(Rational(-1), Rational(2)), b(Rational(3), Rational(4));
  EXPECT_EQ(a + b, Interval(Rational(2), Rational(6)));
  EXPECT_EQ(a - b, Interval(Rational(-5), Rational(-1)));
  EXPECT_EQ(a * b, Interval(Rational(-4), Rational(8)));
  EXPECT_THROW(Interval(Rational(2), Rational(1)), Error);
}

TEST(Interval, PowerEnclosureCertifiesRoots) {
  // independent oracle: lo^2 <= 2 <= hi^2
  Interval r = power_enclosure(Rational(2), Rational(1, 2));
  EXPECT_LE(r.lo * r.lo, 2);
  EXPECT_GE(r.hi * r.hi, 2);
  EXPECT_LE(r.width(), Rational(1, 1000000000));
  EXPECT_EQ(power_enclosure(Rational(9, 4), Rational(3, 2)), Interval(Rational(27, 8)));
}

TEST(Puiseux, Addition) {
  EXPECT_TRUE((t + (-t)).is_zero());
  EXPECT_EQ((2 + tp(Rational(1, 2))) + tp(Rational(1, 2)), 2 + tp(Rational(1, 2), 2));
  PuiseuxScalar sum = t + t * t;
  EXPECT_EQ(sum.terms().size(), 2u);
  EXPECT_EQ(sum.str(), "t + t^2");
}

TEST(Puiseux, Multiplication) {
  EXPECT_EQ(tp(Rational(1, 2)) * tp(Rational(1, 2)), t);
  EXPECT_EQ((1 + t) * (1 - t), 1 - t * t);
  EXPECT_TRUE((PuiseuxScalar() * (3 + t)).is_zero());
}

TEST(Puiseux, Comparison) {
  EXPECT_LT(t, PuiseuxScalar(Rational(1, 2)));
  EXPECT_LT(t * t, t);
  EXPECT_GT(2 + t, PuiseuxScalar(2));
  EXPECT_LT(-t, PuiseuxScalar());
  EXPECT_GT(tp(-1), PuiseuxScalar(1000000));
}

TEST(Puiseux, ValuationAndStandardPart) {
  EXPECT_EQ((tp(Rational(1, 2), 3) + t).valuation(), ExtRational(Rational(1, 2)));
  EXPECT_TRUE(PuiseuxScalar().valuation().is_infinite());
  EXPECT_EQ(PuiseuxScalar(5).valuation(), ExtRational(Rational(0)));
  EXPECT_EQ((2 + t).standard_part(), 2);
  EXPECT_EQ(tp(Rational(1, 3)).standard_part(), 0);
  EXPECT_THROW(tp(-1).standard_part(), Error);
}

TEST(Puiseux, MonomialPowers) {
  EXPECT_EQ(monomial_power(tp(2, 4), Rational(1, 2)).exact(), tp(1, 2));
  EXPECT_EQ(monomial_power(t, Rational(3, 2)).exact(), tp(Rational(3, 2)));
  auto root = monomial_power(tp(1, 2), Rational(1, 2));
  EXPECT_FALSE(root.is_exact());
  EXPECT_EQ(root.exponent, Rational(1, 2));
  EXPECT_LE(root.coefficient.lo * root.coefficient.lo, 2);
  EXPECT_GE(root.coefficient.hi * root.coefficient.hi, 2);
  EXPECT_LE(root.coefficient.width(), Rational(1, 1000000));
  EXPECT_THROW(monomial_power(1 + t, Rational(1, 2)), Error);
}

TEST(Puiseux, PowerBoundsBracketTheTrueValue) {
  // (1 + t)^(1/2) lies between the returned single-term bounds
  auto [lo, hi] = power_bounds(1 + t, Rational(1, 2));
  EXPECT_LE(lo * lo, 1 + t);
  EXPECT_GE(hi * hi, 1 + t);
  EXPECT_THROW(power_bounds(-t, Rational(1, 2)), Error);
}

TEST(Puiseux, DivisionByMonomials) {
  EXPECT_EQ((t + t * t).divided_by(t), 1 + t);
  EXPECT_EQ(PuiseuxScalar(1).divided_by(tp(2, 2)), tp(-2, Rational(1, 2)));
}

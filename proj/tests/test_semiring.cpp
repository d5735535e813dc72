#include <gtest/gtest.h>

#include "omeasure/semiring.hpp"

using namespace omeasure;

namespace {

const PuiseuxScalar t = PuiseuxScalar::t();
MeasureValue Z() { return MeasureValue::zero(); }
MeasureValue I(Rational q) { return MeasureValue::inf(std::move(q)); }
MeasureValue S(Rational q) { return MeasureValue::std_size(std::move(q)); }
TropicalValue L(Rational q) { return {ExtRational(std::move(q))}; }

}  // namespace

TEST(Cls, ReadsOffTheClass) {
  EXPECT_EQ(cls(PuiseuxScalar()), Z());
  EXPECT_EQ(cls(PuiseuxScalar::monomial(1, Rational(3, 2))), I(Rational(3, 2)));
  EXPECT_EQ(cls(2 + 5 * t), S(2));
  EXPECT_THROW(cls(-3 * t), Error);
  EXPECT_THROW(cls(PuiseuxScalar::monomial(1, -1)), Error);
}

TEST(MeasureValue, Addition) {
  EXPECT_EQ(S(Rational(1, 2)) + I(5), S(Rational(1, 2)));
  EXPECT_EQ(I(1) + I(2), I(1));
  EXPECT_EQ(Z() + I(3), I(3));
  EXPECT_EQ(S(1) + S(Rational(1, 2)), S(Rational(3, 2)));
}

TEST(MeasureValue, Multiplication) {
  EXPECT_EQ(I(1) * I(Rational(1, 2)), I(Rational(3, 2)));
  EXPECT_EQ(S(3) * I(2), I(2));
  EXPECT_EQ(S(2) * S(3), S(6));
  EXPECT_EQ(Z() * S(3), Z());
}

TEST(MeasureValue, Order) {
  EXPECT_EQ(v_leq(I(2), I(1)), Tri::True);
  EXPECT_EQ(v_leq(I(100), S(Rational(1, 1000))), Tri::True);
  EXPECT_EQ(v_leq(S(1), I(0)), Tri::False);
  EXPECT_EQ(v_leq(Z(), I(1000)), Tri::True);
}

TEST(MeasureValue, OverlappingIntervalsAreIndistinguishable) {
  MeasureValue a = MeasureValue::std_size(Interval(Rational(1), Rational(2)));
  MeasureValue b = MeasureValue::std_size(Interval(Rational(3, 2), Rational(3)));
  EXPECT_EQ(v_leq(a, b), Tri::Indistinguishable);
  EXPECT_EQ(v_leq(a, S(5)), Tri::True);
}

TEST(MeasureValue, RejectsInvalidValues) {
  EXPECT_THROW(I(-1), Error);
  EXPECT_THROW(S(0), Error);
  EXPECT_EQ(MeasureValue::inf(ExtRational::infinity()), Z());
}

TEST(MeasureValue, Printing) {
  EXPECT_EQ(Z().str(), "Zero");
  EXPECT_EQ(I(Rational(3, 2)).str(), "Inf(3/2)");
  EXPECT_EQ(S(Rational(1, 4)).str(), "Std(1/4)");
}

TEST(Tropical, FromMeasureValues) {
  EXPECT_EQ(to_tropical(I(Rational(3, 2))), L(Rational(3, 2)));
  EXPECT_EQ(to_tropical(S(7)), L(0));
  EXPECT_EQ(to_tropical(Z()), TropicalValue::zero());
}

TEST(Tropical, Operations) {
  EXPECT_EQ(t_add(L(1), L(2)), L(1));
  EXPECT_EQ(t_mul(L(1), L(-2)), L(-1));
  EXPECT_EQ(t_mul(TropicalValue::zero(), L(-5)), TropicalValue::zero());
  EXPECT_TRUE(t_leq(L(3), L(1)));
  EXPECT_FALSE(t_leq(L(1), L(3)));
}

// cls is a semiring homomorphism on the finite elements; checked on a grid
// of scalars.
TEST(Cls, Congruence) {
  std::vector<PuiseuxScalar> xs{PuiseuxScalar(), Rational(1, 3), 2 + t, t, 3 * t * t, t - t * t,
                                PuiseuxScalar::monomial(Rational(5, 2), Rational(1, 2)), 1 - t};
  for (const auto& x : xs)
    for (const auto& y : xs) {
      EXPECT_EQ(cls(x) * cls(y), cls(x * y)) << x << " * " << y;
      EXPECT_EQ(cls(x) + cls(y), cls(x + y)) << x << " + " << y;
    }
}

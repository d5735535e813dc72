#include <gtest/gtest.h>

#include "omeasure/corpus.hpp"
#include "omeasure/transforms.hpp"

using namespace omeasure;
using corpus::t_pow;
using corpus::x;

namespace {

const PuiseuxScalar t = PuiseuxScalar::t();

}  // namespace

TEST(Apply, ShearOfABox) {
  MonomialCell image = apply(ShearMap{1, x(0)}, make_box({{0, t}, {0, t * t}}));
  EXPECT_EQ(image[0].thickness.constant_value(), t);
  EXPECT_EQ(image[1].low, x(0));
  EXPECT_EQ(image[1].thickness.constant_value(), t * t);
}

TEST(Apply, InverseShearRestoresTheBox) {
  MonomialCell box = make_box({{0, t}, {0, t * t}}, Region::Orthant);
  MonomialCell image = apply(ShearMap{1, x(0)}, box);
  EXPECT_EQ(apply(ShearMap{1, x(0), true}, image), box);
}

TEST(Apply, DiagonalScaling) {
  MonomialCell image = apply(AffineMap::diag({t, t_pow(-1)}), make_box({{0, 1}, {0, t}}));
  EXPECT_EQ(image, make_box({{0, t}, {0, 1}}, Region::Orthant));
  IsoPipeline map{{AffineMap::diag({t, t_pow(-1)})}};
  EXPECT_EQ(map.determinant(), PuiseuxScalar(1));
  EXPECT_TRUE(map.is_unit());
}

TEST(Apply, SwapActsOnBoxesOnly) {
  MonomialCell swapped = apply(SwapMap{0, 1}, make_box({{0, t}, {0, t * t}}));
  EXPECT_EQ(swapped, make_box({{0, t * t}, {0, t}}, Region::Orthant));
  MonomialCell tri({Coordinate::thick(0, t), Coordinate::thick(0, x(0))});
  try {
    apply(SwapMap{0, 1}, tri);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedImage);
  }
}

TEST(Apply, ShearRefusesToReparametrizeDependentBounds) {
  MonomialCell tri({Coordinate::thick(0, t), Coordinate::thick(0, x(0))});
  EXPECT_THROW(apply(ShearMap{0, MonomialFn(t)}, tri), Error);
  EXPECT_THROW(apply(ShearMap{1, x(1)}, tri), Error);  // addend uses the sheared coordinate
}

TEST(Apply, TranslationKeepsBoundsInClass) {
  MonomialCell image = apply(AffineMap::translate({PuiseuxScalar(Rational(1, 2)), PuiseuxScalar()}),
                             make_box({{0, t}, {0, t}}));
  EXPECT_EQ(image[0].low.constant_value(), PuiseuxScalar(Rational(1, 2)));
}

TEST(Pipeline, DeterminantIsTheProductOfSteps) {
  IsoPipeline map{{AffineMap::diag({PuiseuxScalar(2), PuiseuxScalar(3)}), ShearMap{1, x(0)}, SwapMap{0, 1},
                   AffineMap::diag({t, PuiseuxScalar(1)})}};
  EXPECT_EQ(map.determinant(), -6 * t);
  EXPECT_FALSE(map.is_unit());
}

TEST(Invariance, CorpusPairs) {
  for (const auto& cs : corpus::invariance_cases()) {
    InvarianceReport r = check_invariance(cs.map, cs.set);
    EXPECT_TRUE(r.unit) << cs.name;
    EXPECT_EQ(r.equal, Tri::True) << cs.name << ": " << r.before << " vs " << r.after;
  }
}

TEST(Invariance, StandardScalingMultipliesByTheDeterminant) {
  DefinableSet tri = MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0))});
  InvarianceReport r = check_invariance(IsoPipeline{{AffineMap::diag({PuiseuxScalar(2), PuiseuxScalar(3)})}}, tri);
  EXPECT_FALSE(r.unit);
  EXPECT_EQ(r.after, MeasureValue::inf(2));
  EXPECT_EQ(r.equal, Tri::True);
  DefinableSet square = make_box({{0, Rational(1, 2)}, {0, Rational(1, 2)}});
  r = check_invariance(IsoPipeline{{AffineMap::diag({PuiseuxScalar(Rational(1, 2)), PuiseuxScalar(1)})}}, square);
  EXPECT_EQ(r.after, MeasureValue::std_size(Rational(1, 8)));
  EXPECT_EQ(r.before, MeasureValue::std_size(Rational(1, 8)));
}

TEST(Invariance, InfinitesimalDeterminantIsRejected) {
  DefinableSet box = make_box({{0, t}});
  EXPECT_THROW(check_invariance(IsoPipeline{{AffineMap::diag({t})}}, box), Error);
}

TEST(Invariance, ValuesEqual) {
  EXPECT_EQ(values_equal(MeasureValue::inf(2), MeasureValue::inf(2)), Tri::True);
  EXPECT_EQ(values_equal(MeasureValue::inf(2), MeasureValue::inf(3)), Tri::False);
  EXPECT_EQ(values_equal(MeasureValue::std_size(Interval(Rational(1), Rational(2))), MeasureValue::std_size(Rational(3, 2))),
            Tri::Indistinguishable);
}

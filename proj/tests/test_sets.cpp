#include <gtest/gtest.h>

#include "omeasure/corpus.hpp"
#include "omeasure/sets.hpp"

using namespace omeasure;
using corpus::t_pow;
using corpus::x;

namespace {

const PuiseuxScalar t = PuiseuxScalar::t();

MonomialCell triangle() { return MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0))}); }

}  // namespace

TEST(MonomialFn, PosynomialClass) {
  EXPECT_TRUE((x(0) + t * x(1, 2)).is_posynomial());
  EXPECT_FALSE((x(0) - MonomialFn(t)).is_posynomial());
  EXPECT_TRUE(MonomialFn(t - t * t).is_posynomial());  // positive scalar coefficient
  EXPECT_TRUE(x(0).depends_on(0));
  EXPECT_FALSE(x(0).depends_on(1));
  EXPECT_EQ(x(1).arity(), 2u);
}

TEST(MonomialFn, TropicalEvaluation) {
  MonomialFn f = x(0, 2) + MonomialFn(t) * x(1);
  EXPECT_EQ(f.trop({Rational(1), Rational(0)}), ExtRational(Rational(1)));
  EXPECT_EQ(f.trop({Rational(1, 4), Rational(3)}), ExtRational(Rational(1, 2)));
}

// Corner bounds checked against exact evaluation at sample points.
TEST(MonomialFn, BoundsEncloseValuesOnTheBox) {
  MonomialFn f = x(0, 2) * x(1) + MonomialFn(PuiseuxScalar(Rational(1, 2)) * t) + x(1, 3);
  std::vector<PuiseuxScalar> lo{t, Rational(1, 4)}, hi{Rational(1, 2), Rational(3, 4) + t};
  PuiseuxScalar upper = f.upper_bound(lo, hi), lower = f.lower_bound(lo, hi);
  for (const PuiseuxScalar& a : std::vector<PuiseuxScalar>{t, t + t * t, Rational(1, 3), Rational(1, 2)})
    for (const auto& b : {PuiseuxScalar(Rational(1, 4)), PuiseuxScalar(Rational(1, 2)), Rational(3, 4) + t}) {
      PuiseuxScalar value = a * a * b + PuiseuxScalar(Rational(1, 2)) * t + b * b * b;
      EXPECT_LE(lower, value);
      EXPECT_LE(value, upper);
    }
}

TEST(MakeBox, ThickThinAndProducts) {
  MonomialCell interval = make_box({{0, t}});
  EXPECT_EQ(interval.dimension(), 1u);
  EXPECT_TRUE(interval[0].is_thick());
  MonomialCell point = make_box({{Rational(1, 4), Rational(1, 4)}});
  EXPECT_TRUE(point[0].is_thin());
  MonomialCell box = make_box({{0, t}, {0, t_pow(Rational(1, 2))}});
  EXPECT_EQ(box.dimension(), 2u);
  EXPECT_TRUE(box.is_box());
  EXPECT_THROW(make_box({{0, 2}}), Error);
  EXPECT_NO_THROW(make_box({{0, 2}}, Region::Orthant));
}

TEST(MonomialCell, ClassChecks) {
  EXPECT_THROW(MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(1))}), Error);  // self dependency
  EXPECT_THROW(MonomialCell({Coordinate::thick(0, x(1))}), Error);                           // forward dependency
  EXPECT_THROW(MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0) - MonomialFn(t))}), Error);
  try {
    MonomialCell({Coordinate::thick(0, 1), Coordinate::thick(0, x(0) - MonomialFn(t))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClassViolation);
  }
}

TEST(MonomialCell, Containment) {
  MonomialCell tri = triangle();
  const PuiseuxScalar half = Rational(1, 2), quarter = Rational(1, 4);
  EXPECT_EQ(tri.contains({half * t, quarter * t}), Tri::True);
  EXPECT_EQ(tri.contains({quarter * t, half * t}), Tri::False);
  EXPECT_EQ(tri.contains({t * t, t * t * t}), Tri::True);
  EXPECT_EQ(tri.contains({2 * t, t}), Tri::False);
}

TEST(MonomialCell, EnclosureOfTheHyperbolicCell) {
  MonomialCell c({Coordinate::thick(t * t, t - t * t), Coordinate::thick(0, MonomialFn::term(t * t, Exponents::unit(0, -1)))});
  Enclosure e = c.enclosure();
  EXPECT_EQ(e.hi[0], t);
  EXPECT_EQ(e.hi[1], PuiseuxScalar(1));
}

TEST(Interior, HasInterior) {
  EXPECT_TRUE(has_interior(make_box({{0, t}, {0, t * t}})));
  EXPECT_FALSE(has_interior(make_box({{Rational(1, 4), Rational(1, 4)}, {0, 1}})));
  DefinableSet u(2);
  u.add(make_box({{Rational(1, 4), Rational(1, 4)}, {0, 1}}));
  u.add(make_box({{Rational(1, 2), Rational(3, 4)}, {0, t}}));
  EXPECT_TRUE(has_interior(u));
}

TEST(Interior, HasStdInterior) {
  EXPECT_TRUE(has_std_interior(make_box({{0, Rational(1, 2)}, {0, Rational(1, 3)}})));
  EXPECT_FALSE(has_std_interior(make_box({{0, t}, {0, 1}})));
  EXPECT_TRUE(has_std_interior(MonomialCell({Coordinate::thick(0, Rational(1, 2)), Coordinate::thick(0, x(0, 2) + MonomialFn(t))})));
}

TEST(StdPart, DropsInfinitesimalTerms) {
  StdCell box = std_part(make_box({{0, Rational(1, 2) + t}}));
  EXPECT_EQ(box.coords[0].thickness.constant_value(), Interval(Rational(1, 2)));
  StdCell cell = std_part(MonomialCell({Coordinate::thick(0, Rational(1, 2)), Coordinate::thick(0, x(0, 2) + MonomialFn(t))}));
  EXPECT_TRUE(cell.coords[1].thickness.is_single_term());
  try {
    std_part(make_box({{0, t}, {0, t}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoStdInterior);
  }
}

TEST(DefinableSet, RejectsOverlappingBoxes) {
  DefinableSet u(1);
  u.add(make_box({{0, Rational(1, 2)}}));
  EXPECT_THROW(u.add(make_box({{Rational(1, 4), Rational(3, 4)}})), Error);
  EXPECT_NO_THROW(u.add(make_box({{Rational(1, 2), Rational(3, 4)}})));
  EXPECT_THROW(u.add(make_box({{0, t}, {0, t}})), Error);  // dimension mismatch
}

TEST(Split, CoordinatePiecesTileTheInterval) {
  DefinableSet parts = split_coordinate(make_box({{0, 1}}), 0, {t, Rational(1, 2), t});
  ASSERT_EQ(parts.cells().size(), 3u);
  EXPECT_EQ(parts.cells()[0][0].high().constant_value(), t);
  EXPECT_EQ(parts.cells()[1][0].low.constant_value(), t);
  EXPECT_EQ(parts.cells()[2][0].high().constant_value(), PuiseuxScalar(1));
  EXPECT_THROW(split_coordinate(triangle(), 1, {t}), Error);
}

TEST(Split, ThicknessHalves) {
  DefinableSet parts = split_thickness(triangle(), 1, Rational(1, 3));
  ASSERT_EQ(parts.cells().size(), 2u);
  EXPECT_EQ(parts.cells()[0][1].thickness, MonomialFn(Rational(1, 3)) * x(0));
  EXPECT_EQ(parts.cells()[1][1].low, MonomialFn(Rational(1, 3)) * x(0));
}

TEST(Restrict, TriangleAtLevelOne) {
  DefinableSet pieces = restrict_by_thickness_level(triangle(), 1, 1);
  ASSERT_FALSE(pieces.empty());
  // every kept base piece consists of points comparable to t
  for (const auto& c : pieces.cells()) {
    PuiseuxScalar lo = c[0].low.constant_value();
    ASSERT_FALSE(lo.is_zero());
    EXPECT_LE(lo.valuation(), ExtRational(Rational(1)));
  }
}

TEST(Restrict, BelowTheMinimalLevelIsEmpty) {
  EXPECT_TRUE(restrict_by_thickness_level(triangle(), 1, Rational(1, 2)).empty());
}

TEST(Product, RenumbersVariables) {
  MonomialCell p = product(triangle(), make_box({{0, t}}));
  EXPECT_EQ(p.dimension(), 3u);
  MonomialCell q = product(make_box({{0, t}}), triangle());
  EXPECT_EQ(q[2].thickness, x(1));
  EXPECT_THROW(product(product(triangle(), triangle()), make_box({{0, t}})), Error);  // beyond the dimension cap
}

TEST(Scaling, ScaleAndTranslate) {
  MonomialCell scaled = scale_cell(triangle(), {PuiseuxScalar(2), PuiseuxScalar(3)}, Region::Orthant);
  EXPECT_EQ(scaled[0].thickness.constant_value(), 2 * t);
  EXPECT_EQ(scaled[1].thickness, MonomialFn(Rational(3, 2)) * x(0));
  MonomialCell moved = translate_cell(make_box({{0, t}, {0, t}}), {PuiseuxScalar(Rational(1, 2)), PuiseuxScalar()});
  EXPECT_EQ(moved[0].low.constant_value(), PuiseuxScalar(Rational(1, 2)));
  EXPECT_EQ(exponent_denominator_lcm(MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0, Rational(2, 3)))})), 3);
}

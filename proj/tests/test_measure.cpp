#include <gtest/gtest.h>

#include "omeasure/corpus.hpp"
#include "omeasure/lebesgue.hpp"
#include "omeasure/measure.hpp"

using namespace omeasure;
using corpus::t_pow;
using corpus::x;

namespace {

const PuiseuxScalar t = PuiseuxScalar::t();
MeasureValue I(Rational q) { return MeasureValue::inf(std::move(q)); }
MeasureValue S(Rational q) { return MeasureValue::std_size(std::move(q)); }
bool leq(const MeasureValue& a, const MeasureValue& b) { return v_leq(a, b) == Tri::True; }

/// Geometric-partition oracle for {lo < x1 < hi, 0 < x2 < c t^g x1^a}
/// with lo = 0 or lo = t^p and hi = t^q: the base is cut at t^{q + j delta}
/// and each strip contributes cls(length) * cls(min or max of h), summed in
/// the semiring. Lower and upper sums enclose the measure.
std::pair<MeasureValue, MeasureValue> partition_oracle(std::optional<Rational> p, const Rational& q, const Rational& c,
                                                       const Rational& g, const Rational& a, const Rational& delta) {
  auto h_at = [&](const Rational& e) { return cls(PuiseuxScalar::monomial(c, g + a * e)); };
  Rational stop = p ? *p : q + 8;
  MeasureValue lower = MeasureValue::zero(), upper = MeasureValue::zero();
  Rational e = q;
  while (e < stop) {
    Rational next = std::min(e + delta, stop);
    MeasureValue length = cls(t_pow(e) - t_pow(next));
    MeasureValue h_lo = a >= 0 ? h_at(next) : h_at(e), h_hi = a >= 0 ? h_at(e) : h_at(next);
    lower = lower + length * h_lo;
    upper = upper + length * h_hi;
    e = next;
  }
  if (!p) upper = upper + cls(t_pow(stop)) * h_at(stop);  // the strip (0, t^stop), only for a >= 0
  return {lower, upper};
}

}  // namespace

TEST(MeasureUnit, CorpusValues) {
  for (const auto& entry : corpus::unit_sets()) {
    ASSERT_TRUE(entry.expected.has_value());
    EXPECT_EQ(measure_unit(entry.set), *entry.expected) << entry.name;
  }
}

TEST(MeasureUnit, ReferenceValues) {
  EXPECT_EQ(measure_unit(make_box({{0, t}})), I(1));
  EXPECT_EQ(measure_unit(make_box({{0, t}, {0, t_pow(Rational(1, 2))}})), I(Rational(3, 2)));
  EXPECT_EQ(measure_unit(make_box({{Rational(1, 4), Rational(3, 4)}, {Rational(1, 4), Rational(3, 4)}})),
            S(Rational(1, 4)));
  EXPECT_EQ(measure_unit(MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0))})), I(2));
  EXPECT_EQ(measure_unit(DefinableSet(2)), MeasureValue::zero());
  EXPECT_THROW(measure_unit(make_box({{0, 2}}, Region::Orthant)), Error);
}

TEST(MeasureUnit, AgreesWithThePartitionOracle) {
  struct Case {
    MonomialCell cell;
    std::optional<Rational> p;
    Rational q, c, g, a;
  };
  std::vector<Case> cases{
      {MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0))}), std::nullopt, 1, 1, 0, 1},
      {MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, MonomialFn(t) * x(0, Rational(1, 2)))}),
       std::nullopt, 1, 1, 1, Rational(1, 2)},
      {MonomialCell({Coordinate::thick(0, t_pow(Rational(1, 3))), Coordinate::thick(0, MonomialFn(Rational(1, 2)) * x(0, 3))}),
       std::nullopt, Rational(1, 3), Rational(1, 2), 0, 3},
      {MonomialCell({Coordinate::thick(t * t, t - t * t),
                     Coordinate::thick(0, MonomialFn::term(t * t, Exponents::unit(0, -1)))}),
       Rational(2), 1, 1, 2, -1},
      {MonomialCell({Coordinate::thick(t_pow(3), t - t_pow(3)),
                     Coordinate::thick(0, MonomialFn::term(t_pow(4), Exponents::unit(0, -1)))}),
       Rational(3), 1, 1, 4, -1},
  };
  for (const auto& cs : cases) {
    MeasureValue value = measure_unit(cs.cell);
    for (Rational delta : {Rational(1, 4), Rational(1, 16)}) {
      auto [lower, upper] = partition_oracle(cs.p, cs.q, cs.c, cs.g, cs.a, delta);
      EXPECT_TRUE(leq(lower, value) && leq(value, upper))
          << cs.cell << ": " << value << " outside [" << lower << ", " << upper << "]";
    }
  }
}

TEST(Bracket, BaseCaseIsExact) {
  for (Rational delta : {Rational(1, 2), Rational(1, 8), Rational(1, 32)}) {
    LevelBracket b = bracket_measure(make_box({{0, t}}), delta);
    EXPECT_EQ(b.lower, I(1));
    EXPECT_EQ(b.upper, I(1));
  }
}

TEST(Bracket, ConstantThicknessIsExact) {
  MonomialCell c({Coordinate::thick(0, t), Coordinate::thick(0, t * t)});
  for (Rational delta : {Rational(1, 4), Rational(1, 16)}) {
    LevelBracket b = bracket_measure(c, delta);
    EXPECT_EQ(b.lower, I(3));
    EXPECT_EQ(b.upper, I(3));
  }
}

TEST(Bracket, SoundNestedAndNarrowing) {
  MonomialCell hyperbolic({Coordinate::thick(t * t, t - t * t),
                           Coordinate::thick(0, MonomialFn::term(t * t, Exponents::unit(0, -1)))});
  MonomialCell root({Coordinate::thick(0, t), Coordinate::thick(0, MonomialFn(t) * x(0, Rational(1, 2)))});
  for (const auto& cell : {hyperbolic, root}) {
    MeasureValue exact = measure_unit(cell);
    std::optional<LevelBracket> previous;
    for (Rational delta : {Rational(1, 4), Rational(1, 8), Rational(1, 16), Rational(1, 32)}) {
      LevelBracket b = bracket_measure(cell, delta);
      EXPECT_TRUE(leq(b.lower, exact) && leq(exact, b.upper)) << cell << " " << b.str();
      // the gap is at most 2 delta in level
      EXPECT_LE(b.lower.level() - b.upper.level(), 2 * delta) << b.str();
      if (previous) EXPECT_TRUE(leq(previous->lower, b.lower) && leq(b.upper, previous->upper)) << b.str();
      previous = b;
    }
  }
}

TEST(Bracket, RejectsStandardCells) {
  EXPECT_THROW(bracket_measure(make_box({{0, Rational(1, 2)}}), Rational(1, 8)), Error);
  EXPECT_THROW(bracket_measure(make_box({{0, t}}), Rational(0)), Error);
}

TEST(CellLevel, ReportsTheBracketWhenRefinementStops) {
  EngineConfig config;
  config.max_refine = 1;
  config.node_budget = 3;
  MonomialCell hyperbolic({Coordinate::thick(t * t, t - t * t),
                           Coordinate::thick(0, MonomialFn::term(t * t, Exponents::unit(0, -1)))});
  try {
    cell_level(hyperbolic, config);
    FAIL() << "expected a bracket";
  } catch (const BracketDiverged& e) {
    EXPECT_EQ(e.code(), ErrorCode::BracketDiverged);
    EXPECT_TRUE(leq(e.bracket().lower, I(2)) && leq(I(2), e.bracket().upper)) << e.bracket().str();
  }
}

TEST(Config, Validation) {
  EngineConfig config;
  config.delta0 = 0;
  EXPECT_THROW(config.validate(), Error);
  config = {};
  config.leb_tol = -1;
  EXPECT_THROW(config.validate(), Error);
}

TEST(Lebesgue, ExactCases) {
  EXPECT_EQ(lebesgue(std_part(make_box({{0, Rational(1, 2)}, {0, Rational(1, 3)}})), Rational(1, 1000000)),
            Interval(Rational(1, 6)));
  EXPECT_EQ(lebesgue(std_part(MonomialCell({Coordinate::thick(0, 1), Coordinate::thick(0, x(0, 2))})), Rational(1, 1000000)),
            Interval(Rational(1, 3)));
}

TEST(Lebesgue, IrrationalCaseMeetsTheTolerance) {
  // (2/3)(1/2)^(3/2) = sqrt(2)/6
  Interval r = lebesgue(std_part(MonomialCell({Coordinate::thick(0, Rational(1, 2)),
                                               Coordinate::thick(0, x(0, Rational(1, 2)))})),
                        Rational(1, 1000000));
  EXPECT_LE(r.width(), Rational(1, 1000000));
  EXPECT_LE(36 * r.lo * r.lo, 2);
  EXPECT_GE(36 * r.hi * r.hi, 2);
}

// Riemann sums of a monotone thickness enclose the integral.
TEST(Lebesgue, AgreesWithRiemannSums) {
  MonomialCell cell({Coordinate::thick(Rational(1, 8), Rational(1, 2)),
                     Coordinate::thick(x(0, 2), MonomialFn(Rational(1, 3)) * x(0) + x(0, 3))});
  Interval r = lebesgue(std_part(cell), Rational(1, 1000000));
  const int n = 400;
  Rational lower = 0, upper = 0, step = Rational(1, 2) / n;
  auto h = [](const Rational& u) { return u / 3 + u * u * u; };
  for (int i = 0; i < n; ++i) {
    Rational a = Rational(1, 8) + step * i;
    lower += step * h(a);
    upper += step * h(a + step);
  }
  EXPECT_TRUE(r.overlaps(Interval(lower, upper))) << r.str();
}

TEST(MeasureSb, ReferenceValues) {
  EXPECT_EQ(measure_sb(make_box({{0, 2 * t}}, Region::Orthant)), I(1));
  EXPECT_EQ(measure_sb(make_box({{1, 3}, {1, 2}}, Region::Orthant)), S(2));
  EXPECT_THROW(measure_sb(make_box({{0, t_pow(-1)}}, Region::Orthant)), Error);
  for (const auto& entry : corpus::bounded_sets()) EXPECT_EQ(measure_sb(entry.set), *entry.expected) << entry.name;
}

TEST(MeasureSb, ExplicitNormalization) {
  DefinableSet x = make_box({{0, 2 * t}}, Region::Orthant);
  EXPECT_EQ(measure_sb_with(x, {PuiseuxScalar(Rational(1, 2))}, {PuiseuxScalar()}), I(1));
  EXPECT_THROW(measure_sb_with(x, {t}, {PuiseuxScalar()}), Error);  // lambda must be standard
}

TEST(MeasureNu, ReferenceValues) {
  DefinableSet big = make_box({{0, t_pow(-1)}, {0, t * t}}, Region::Orthant);
  EXPECT_EQ(measure_nu(big), TropicalValue{ExtRational(Rational(1))});
  EXPECT_EQ(measure_nu_with(big, t, {PuiseuxScalar(), PuiseuxScalar()}), TropicalValue{ExtRational(Rational(1))});
  EXPECT_EQ(measure_nu(make_box({{1, 3}, {1, 2}}, Region::Orthant)), TropicalValue::one());
  DefinableSet thin = make_box({{0, 5}, {0, t}}, Region::Orthant);
  EXPECT_EQ(measure_nu(thin), to_tropical(measure_sb(thin)));
}

TEST(Product, ReferenceValues) {
  auto m = [](std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>> a, std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>> b) {
    return measure_product(make_box(a), make_box(b));
  };
  EXPECT_EQ(m({{0, t}}, {{0, t}}), I(2));
  EXPECT_EQ(m({{0, Rational(1, 2)}}, {{0, t}}), I(1));
  EXPECT_EQ(m({{0, Rational(1, 2)}}, {{0, Rational(1, 3)}}), S(Rational(1, 6)));
}

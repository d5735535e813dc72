#pragma once

#include <random>
#include <string>
#include <vector>

#include "measure.hpp"
#include "sets.hpp"
#include "transforms.hpp"

namespace omeasure::corpus {

inline PuiseuxScalar t_pow(const Rational& e, const Rational& c = 1) { return PuiseuxScalar::monomial(c, e); }
inline MonomialFn x(std::size_t i, const Rational& e = 1) { return MonomialFn::term(PuiseuxScalar(1), Exponents::unit(i, e)); }

/// A named set with its known value (nullopt when only relations are tested).
struct NamedSet {
  std::string name;
  DefinableSet set;
  std::optional<MeasureValue> expected;
};

/// Sets inside [0,1]^n. Expected values are derived by hand from the
/// iterated integral (for example the cell over (0,t) with thickness
/// t*x1^(1/2) has volume (2/3) t^(5/2)).
inline std::vector<NamedSet> unit_sets() {
  const PuiseuxScalar t = PuiseuxScalar::t();
  std::vector<NamedSet> out;
  auto add = [&](std::string name, DefinableSet s, std::optional<MeasureValue> v) {
    out.push_back({std::move(name), std::move(s), std::move(v)});
  };
  add("interval (0,t)", make_box({{0, t}}), MeasureValue::inf(1));
  add("interval (1/4,3/4)", make_box({{Rational(1, 4), Rational(3, 4)}}), MeasureValue::std_size(Rational(1, 2)));
  add("box (0,t)x(0,t^(1/2))", make_box({{0, t}, {0, t_pow(Rational(1, 2))}}), MeasureValue::inf(Rational(3, 2)));
  add("triangle", MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0))}), MeasureValue::inf(2));
  add("hyperbolic cell t^2/x1",
      MonomialCell({Coordinate::thick(t * t, t - t * t), Coordinate::thick(0, MonomialFn::term(t * t, Exponents::unit(0, -1)))}),
      MeasureValue::inf(2));
  add("sheared box", MonomialCell({Coordinate::thick(0, t), Coordinate::thick(x(0), t * t)}), MeasureValue::inf(3));
  add("std square", make_box({{Rational(1, 4), Rational(3, 4)}, {Rational(1, 4), Rational(3, 4)}}),
      MeasureValue::std_size(Rational(1, 4)));
  add("std parabola", MonomialCell({Coordinate::thick(0, 1), Coordinate::thick(0, x(0, 2))}),
      MeasureValue::std_size(Rational(1, 3)));
  add("mixed box", make_box({{0, Rational(1, 2)}, {0, t}}), MeasureValue::inf(1));
  add("root cell", MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, MonomialFn::term(t, Exponents::unit(0, Rational(1, 2))))}),
      MeasureValue::inf(Rational(5, 2)));
  add("3-box", make_box({{0, t}, {0, Rational(1, 2)}, {0, t * t}}), MeasureValue::inf(3));
  add("3-cell x1*x2",
      MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, t), Coordinate::thick(0, MonomialFn::term(1, Exponents({1, 1})))}),
      MeasureValue::inf(4));
  add("std 3-cell x1+x2",
      MonomialCell({Coordinate::thick(0, Rational(1, 2)), Coordinate::thick(0, Rational(1, 2)), Coordinate::thick(0, x(0) + x(1))}),
      MeasureValue::std_size(Rational(1, 8)));
  {
    DefinableSet u(2);
    u.add(make_box({{0, t}, {0, t}}));
    u.add(make_box({{Rational(1, 2), Rational(1, 2) + t}, {0, t * t}}));
    add("union of two boxes", u, MeasureValue::inf(2));
  }
  add("std cell x1^2+t", MonomialCell({Coordinate::thick(0, Rational(1, 2)), Coordinate::thick(0, x(0, 2) + MonomialFn(t))}),
      MeasureValue::std_size(Rational(1, 24)));
  add("thin segment", make_box({{Rational(1, 4), Rational(1, 4)}, {0, 1}}), MeasureValue::zero());
  add("offset wedge", MonomialCell({Coordinate::thick(t, t), Coordinate::thick(x(0, 2), MonomialFn::term(t, Exponents::unit(0)))}),
      MeasureValue::inf(3));
  add("deep corner", MonomialCell({Coordinate::thick(0, t_pow(Rational(1, 3))), Coordinate::thick(0, x(0, 3))}),
      MeasureValue::inf(Rational(4, 3)));
  return out;
}

/// Sets in V^n (bounded, possibly outside [0,1]^n).
inline std::vector<NamedSet> bounded_sets() {
  const PuiseuxScalar t = PuiseuxScalar::t();
  std::vector<NamedSet> out = unit_sets();
  out.push_back({"interval (0,2t)", make_box({{0, 2 * t}}, Region::Orthant), MeasureValue::inf(1)});
  out.push_back({"box (1,3)x(1,2)", make_box({{1, 3}, {1, 2}}, Region::Orthant), MeasureValue::std_size(Rational(2))});
  out.push_back({"box (0,3/2)x(0,t)", make_box({{0, Rational(3, 2)}, {0, t}}, Region::Orthant), MeasureValue::inf(1)});
  out.push_back({"cell over (0,2) thick x1^2", DefinableSet(MonomialCell({Coordinate::thick(0, 2), Coordinate::thick(0, x(0, 2))}, Region::Orthant)),
                 MeasureValue::std_size(Rational(8, 3))});
  out.push_back({"cell over (0,3t) thick x1", DefinableSet(MonomialCell({Coordinate::thick(0, 3 * t), Coordinate::thick(0, x(0))}, Region::Orthant)),
                 MeasureValue::inf(2)});
  return out;
}

// ---------------------------------------------------------------- random generation

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long long max_num = 9, long long max_den = 8) {
  return Rational(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

inline Rational random_exponent(Rng& rng) {
  static const Rational grid[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 2),
                                  Rational(2), Rational(5, 2), Rational(3)};
  return grid[uniform(rng, 0, 7)];
}

/// Non-negative scalar with v >= 0: zero or a positive sum of 1-3 terms.
inline PuiseuxScalar random_finite_scalar(Rng& rng) {
  if (uniform(rng, 0, 9) == 0) return PuiseuxScalar();
  std::vector<PuiseuxScalar::Term> terms;
  int count = static_cast<int>(uniform(rng, 1, 3));
  for (int i = 0; i < count; ++i) {
    Rational e = uniform(rng, 0, 2) == 0 ? Rational(0) : random_exponent(rng);
    Rational c(uniform(rng, -5, 9), uniform(rng, 1, 6));
    terms.push_back({e, c});
  }
  PuiseuxScalar x = PuiseuxScalar::from_terms(terms);
  if (x.sign() < 0) x = -x;
  return x;
}

/// Side of a random box: a standard length, an infinitesimal one, or a
/// standard length perturbed by an infinitesimal.
struct Side {
  PuiseuxScalar lo, hi;
};

inline Side random_side(Rng& rng) {
  const PuiseuxScalar t = PuiseuxScalar::t();
  switch (uniform(rng, 0, 3)) {
    case 0: {
      Rational a(uniform(rng, 0, 3), 8);
      Rational len(uniform(rng, 1, 4), 8);
      return {a, a + len};
    }
    case 1: {
      Rational a(uniform(rng, 0, 6), 8);
      PuiseuxScalar len = t_pow(random_exponent(rng), random_rational(rng, 4, 4));
      return {a, a + len};
    }
    case 2: {
      PuiseuxScalar a = uniform(rng, 0, 1) ? PuiseuxScalar() : t_pow(Rational(3), 1);
      PuiseuxScalar len = t_pow(random_exponent(rng), 1) + t_pow(Rational(4), random_rational(rng, 3, 3));
      return {a, a + len};
    }
    default: {
      Rational a(uniform(rng, 0, 3), 8);
      Rational len(uniform(rng, 1, 4), 8);
      return {a + t_pow(Rational(2), 1), a + len};
    }
  }
}

inline MonomialCell random_box(Rng& rng, std::size_t dim) {
  std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>> bounds;
  for (std::size_t i = 0; i < dim; ++i) {
    Side s = random_side(rng);
    bounds.emplace_back(s.lo, s.hi);
  }
  return make_box(bounds);
}

/// A random 1-D or 2-D set: a box, a cell with monomial thickness over a
/// constant base, or a union of two disjoint boxes. Standard cells use
/// integer exponents so that their volumes are rational.
inline DefinableSet random_small_set(Rng& rng, std::size_t dim) {
  const PuiseuxScalar t = PuiseuxScalar::t();
  int kind = static_cast<int>(uniform(rng, 0, dim == 1 ? 1 : 3));
  if (kind == 0) return random_box(rng, dim);
  if (dim == 1) {
    DefinableSet u(1);
    u.add(make_box({{0, t_pow(random_exponent(rng))}}));
    u.add(make_box({{Rational(1, 2), Rational(1, 2) + t_pow(random_exponent(rng), random_rational(rng, 3, 4))}}));
    return u;
  }
  if (kind == 1) {
    // infinitesimal base, monomial thickness c t^g x1^e
    PuiseuxScalar b = t_pow(random_exponent(rng));
    Rational e = random_exponent(rng);
    PuiseuxScalar c = t_pow(Rational(uniform(rng, 0, 2)), random_rational(rng, 1, 2));
    return MonomialCell({Coordinate::thick(0, b), Coordinate::thick(0, MonomialFn::term(c, Exponents::unit(0, e)))});
  }
  if (kind == 2) {
    // standard base with integer-exponent thickness, maybe plus an infinitesimal term
    Rational b(uniform(rng, 1, 4), 4);
    long long e = uniform(rng, 0, 3);
    MonomialFn h = MonomialFn::term(PuiseuxScalar(Rational(1, uniform(rng, 2, 4))), Exponents::unit(0, Rational(e)));
    if (uniform(rng, 0, 1)) h = h + MonomialFn(t_pow(random_exponent(rng)));
    return MonomialCell({Coordinate::thick(0, b), Coordinate::thick(0, h)});
  }
  DefinableSet u(2);
  u.add(random_box(rng, 2));
  u.add(make_box({{Rational(15, 16), Rational(15, 16) + t}, {0, t_pow(random_exponent(rng))}}));
  return u;
}

// ---------------------------------------------------------------- invariance corpus

struct MapCase {
  std::string name;
  IsoPipeline map;
  DefinableSet set;
};

inline std::vector<MapCase> invariance_cases() {
  const PuiseuxScalar t = PuiseuxScalar::t();
  const PuiseuxScalar inv_t = t_pow(-1);
  std::vector<MapCase> out;
  auto box = [](std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>> b) { return DefinableSet(make_box(b)); };
  auto shear = [](std::size_t k, MonomialFn f, bool inverse = false) { return MapStep(ShearMap{k, std::move(f), inverse}); };
  auto diag = [](std::vector<PuiseuxScalar> l) { return MapStep(AffineMap::diag(std::move(l))); };
  auto translate = [](std::vector<PuiseuxScalar> b) { return MapStep(AffineMap::translate(std::move(b))); };
  auto swap = [](std::size_t i, std::size_t j) { return MapStep(SwapMap{i, j}); };
  DefinableSet tri = MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0))});
  DefinableSet sq = box({{Rational(1, 4), Rational(3, 4)}, {Rational(1, 4), Rational(3, 4)}});
  DefinableSet thin_box = box({{0, t}, {0, t * t}});

  out.push_back({"shear x2+x1 on (0,t)x(0,t^2)", {{shear(1, x(0))}}, thin_box});
  out.push_back({"shear x2+x1^(1/2) on (0,t)x(0,t^2)", {{shear(1, x(0, Rational(1, 2)))}}, thin_box});
  out.push_back({"shear x2+x1 on triangle", {{shear(1, x(0))}}, tri});
  out.push_back({"shear then unshear on triangle", {{shear(1, x(0, 2)), shear(1, x(0, 2), true)}}, tri});
  out.push_back({"diag (t,1/t) on (0,1)x(0,t)", {{diag({t, inv_t})}}, box({{0, 1}, {0, t}})});
  out.push_back({"diag (1/t,t) on (0,t)x(0,1)", {{diag({inv_t, t})}}, box({{0, t}, {0, 1}})});
  out.push_back({"diag (2,1/2) on (0,1/2)x(0,1)", {{diag({2, Rational(1, 2)})}}, box({{0, Rational(1, 2)}, {0, 1}})});
  out.push_back({"diag (t^(1/2),t^(-1/2)) on (0,1)x(0,t)", {{diag({t_pow(Rational(1, 2)), t_pow(Rational(-1, 2))})}},
                 box({{0, 1}, {0, t}})});
  out.push_back({"diag (1,t,1/t) on 3-box", {{diag({1, t, inv_t})}}, box({{0, t}, {0, 1}, {0, t}})});
  out.push_back({"translate (1/4,t) on std square", {{translate({Rational(1, 4), t})}}, sq});
  out.push_back({"translate (1/4,t) on (0,t)x(0,t)", {{translate({Rational(1, 4), t})}}, box({{0, t}, {0, t}})});
  out.push_back({"translate (0,1/2) on triangle", {{translate({0, Rational(1, 2)})}}, tri});
  out.push_back({"translate (t^2) on (0,t)", {{translate({t * t})}}, box({{0, t}})});
  out.push_back({"swap 1 2 on (0,t)x(0,1/2)", {{swap(0, 1)}}, box({{0, t}, {0, Rational(1, 2)}})});
  out.push_back({"swap 1 3 on 3-box", {{swap(0, 2)}}, box({{0, t}, {0, Rational(1, 3)}, {0, t * t}})});
  out.push_back({"swap on std square", {{swap(0, 1)}}, sq});
  out.push_back({"diag (t,1/t) then shear", {{diag({t, inv_t}), shear(1, x(0))}}, box({{0, 1}, {0, t}})});
  out.push_back({"shear then translate", {{shear(1, x(0)), translate({0, t})}}, thin_box});
  out.push_back({"swap then diag (1/t,t)", {{swap(0, 1), diag({inv_t, t})}}, box({{0, 1}, {0, t}})});
  out.push_back({"shear on std parabola", {{shear(1, x(0))}},
                 DefinableSet(MonomialCell({Coordinate::thick(0, Rational(1, 2)), Coordinate::thick(0, x(0, 2))}))});
  out.push_back({"shear 3rd coordinate by x1*x2", {{shear(2, MonomialFn::term(1, Exponents({1, 1})))}},
                 box({{0, t}, {0, t}, {0, t}})});
  out.push_back({"diag (t,1/t) on union", {{diag({t, inv_t})}}, [&] {
                   DefinableSet u(2);
                   u.add(make_box({{0, Rational(1, 2)}, {0, t}}));
                   u.add(make_box({{Rational(1, 2), 1}, {0, t * t}}));
                   return u;
                 }()});
  return out;
}

}  // namespace omeasure::corpus

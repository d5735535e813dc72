#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "measure.hpp"
#include "transforms.hpp"

namespace omeasure::selftest {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
  double limit_seconds;
};

namespace detail {

using corpus::Rng;
using corpus::uniform;

/// Collects failures; reports the first few.
class Checker {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what());
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failures";
    for (const auto& m : messages_) out << "; " << m;
    return out.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> messages_;
};

inline std::vector<Rational> level_grid() {
  return {0, Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4),
          1, Rational(5, 4), Rational(4, 3), Rational(3, 2), Rational(5, 3), 2, Rational(9, 4), Rational(5, 2),
          3, Rational(7, 2), 4, 5, 7};
}

inline std::vector<Rational> size_grid() {
  return {Rational(1, 9), Rational(1, 8), Rational(1, 5), Rational(1, 4), Rational(1, 3), Rational(2, 5), Rational(1, 2),
          Rational(3, 5), Rational(2, 3), Rational(3, 4), 1, Rational(5, 4), Rational(4, 3), Rational(3, 2),
          2, Rational(5, 2), 3, 4, 6, 10};
}

inline bool leq(const MeasureValue& a, const MeasureValue& b) { return v_leq(a, b) == Tri::True; }

inline void check_semiring_triple(Checker& c, const MeasureValue& a, const MeasureValue& b, const MeasureValue& d) {
  auto name = [&] { return "(" + a.str() + ", " + b.str() + ", " + d.str() + ")"; };
  c.check((a + b) + d == a + (b + d), [&] { return "+ associativity " + name(); });
  c.check((a * b) * d == a * (b * d), [&] { return "* associativity " + name(); });
  c.check(a * (b + d) == a * b + a * d, [&] { return "distributivity " + name(); });
  if (leq(a, b)) {
    c.check(leq(a + d, b + d), [&] { return "+ order compatibility " + name(); });
    c.check(leq(a * d, b * d), [&] { return "* order compatibility " + name(); });
  }
}

inline void check_semiring_pair(Checker& c, const MeasureValue& a, const MeasureValue& b) {
  auto name = [&] { return "(" + a.str() + ", " + b.str() + ")"; };
  c.check(a + b == b + a, [&] { return "+ commutativity " + name(); });
  c.check(a * b == b * a, [&] { return "* commutativity " + name(); });
  Tri ab = v_leq(a, b), ba = v_leq(b, a);
  c.check(ab == Tri::True || ba == Tri::True, [&] { return "totality " + name(); });
  if (ab == Tri::True && ba == Tri::True) c.check(a == b, [&] { return "antisymmetry " + name(); });
  c.check(to_tropical(a + b) == t_add(to_tropical(a), to_tropical(b)), [&] { return "to_tropical(+) " + name(); });
  c.check(to_tropical(a * b) == t_mul(to_tropical(a), to_tropical(b)), [&] { return "to_tropical(*) " + name(); });
}

inline void check_tropical_triple(Checker& c, const TropicalValue& a, const TropicalValue& b, const TropicalValue& d) {
  auto name = [&] { return "(" + a.str() + ", " + b.str() + ", " + d.str() + ")"; };
  c.check(t_add(t_add(a, b), d) == t_add(a, t_add(b, d)), [&] { return "min associativity " + name(); });
  c.check(t_mul(t_mul(a, b), d) == t_mul(a, t_mul(b, d)), [&] { return "+ associativity " + name(); });
  c.check(t_mul(a, t_add(b, d)) == t_add(t_mul(a, b), t_mul(a, d)), [&] { return "tropical distributivity " + name(); });
  c.check(t_add(a, b) == t_add(b, a) && t_mul(a, b) == t_mul(b, a), [&] { return "tropical commutativity " + name(); });
  if (t_leq(a, b)) {
    c.check(t_leq(t_add(a, d), t_add(b, d)), [&] { return "tropical + order " + name(); });
    c.check(t_leq(t_mul(a, d), t_mul(b, d)), [&] { return "tropical * order " + name(); });
  }
}

inline MeasureValue random_value(Rng& rng) {
  switch (corpus::uniform(rng, 0, 2)) {
    case 0: return MeasureValue::zero();
    case 1: return MeasureValue::inf(Rational(corpus::uniform(rng, 0, 40), corpus::uniform(rng, 1, 12)));
    default: return MeasureValue::std_size(Rational(corpus::uniform(rng, 1, 40), corpus::uniform(rng, 1, 12)));
  }
}

inline TropicalValue random_tropical(Rng& rng) {
  if (corpus::uniform(rng, 0, 7) == 0) return TropicalValue::zero();
  return {ExtRational(Rational(corpus::uniform(rng, -30, 30), corpus::uniform(rng, 1, 12)))};
}

/// Random decomposition of a cell: constant coordinates are cut at random
/// points (standard fractions and monomial points t^s, t^s/2), the others
/// are split along their thickness.
inline DefinableSet random_decomposition(Rng& rng, const MonomialCell& cell) {
  std::vector<MonomialCell> pieces{cell};
  for (std::size_t k = 0; k < cell.dimension(); ++k) {
    if (cell[k].is_thin()) continue;
    int cuts = static_cast<int>(corpus::uniform(rng, 0, cell.dimension() == 3 ? 3 : 5));
    if (cuts == 0) continue;
    std::vector<MonomialCell> next;
    for (const auto& piece : pieces) {
      if (piece[k].is_constant()) {
        PuiseuxScalar a = piece[k].low.constant_value();
        PuiseuxScalar b = piece[k].high().constant_value();
        std::vector<PuiseuxScalar> points;
        for (int i = 0; i < cuts; ++i) {
          PuiseuxScalar p;
          if (corpus::uniform(rng, 0, 1) == 0) {
            Rational u(corpus::uniform(rng, 1, 15), 16);
            p = a + (b - a) * PuiseuxScalar(u);
          } else {
            Rational s(corpus::uniform(rng, 0, 24), 8);
            p = corpus::t_pow(s, corpus::uniform(rng, 0, 1) ? Rational(1) : Rational(1, 2));
          }
          if (a < p && p < b) points.push_back(p);
        }
        DefinableSet split = split_coordinate(piece, k, points);
        next.insert(next.end(), split.cells().begin(), split.cells().end());
      } else {
        std::vector<MonomialCell> current{piece};
        for (int i = 0; i < std::min(cuts, 2); ++i) {
          std::vector<MonomialCell> split;
          for (const auto& c : current) {
            DefinableSet halves = split_thickness(c, k, Rational(corpus::uniform(rng, 1, 7), 8));
            split.insert(split.end(), halves.cells().begin(), halves.cells().end());
          }
          current = split;
        }
        next.insert(next.end(), current.begin(), current.end());
      }
    }
    pieces = next;
  }
  DefinableSet out(cell.dimension());
  for (auto& p : pieces) out.add(std::move(p));
  return out;
}

/// Admissible standard scalings lambda = r^d (so lambda^e stays rational)
/// with lambda * extent <= 1.
inline std::vector<Rational> admissible_scalings(const DefinableSet& x, std::size_t count) {
  Integer d = 1;
  for (const auto& c : x.cells()) d = lcm(d, exponent_denominator_lcm(c));
  PuiseuxScalar extent;
  for (const auto& c : x.cells())
    for (const auto& hi : c.enclosure().hi) extent = std::max(extent, hi);
  std::vector<Rational> out;
  for (Rational r : {Rational(1), Rational(3, 4), Rational(2, 3), Rational(1, 2), Rational(2, 5), Rational(1, 3),
                     Rational(1, 4), Rational(1, 5), Rational(1, 6), Rational(1, 7), Rational(1, 8)}) {
    Rational lambda = ipow(r, to_small_int(d, "denominator"));
    if (extent * PuiseuxScalar(lambda) <= PuiseuxScalar(1)) out.push_back(lambda);
    if (out.size() == count) break;
  }
  return out;
}

/// Translation vector that keeps the scaled set inside [0,1]^n, moving only
/// coordinates nothing else depends on.
inline std::vector<PuiseuxScalar> admissible_translation(const DefinableSet& x, const Rational& lambda,
                                                         const Rational& amount) {
  std::vector<PuiseuxScalar> b(x.dimension());
  for (std::size_t k = 0; k < x.dimension(); ++k) {
    bool ok = true;
    for (const auto& c : x.cells()) {
      for (std::size_t j = k + 1; j < c.dimension(); ++j)
        if (c[j].low.depends_on(k) || c[j].thickness.depends_on(k)) ok = false;
      if (c.enclosure().hi[k] * PuiseuxScalar(lambda) + PuiseuxScalar(amount) > PuiseuxScalar(1)) ok = false;
    }
    if (ok) b[k] = PuiseuxScalar(amount);
  }
  return b;
}

template <class Fn>
CriterionResult timed(int id, std::string name, double limit, Fn fn) {
  auto start = std::chrono::steady_clock::now();
  Checker c;
  std::string extra;
  try {
    extra = fn(c);
  } catch (const std::exception& e) {
    c.check(false, [&] { return std::string("exception: ") + e.what(); });
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = seconds <= limit;
  std::string detail = c.summary();
  if (!extra.empty()) detail += "; " + extra;
  if (!in_time) detail += "; exceeded time limit";
  return {id, std::move(name), c.ok() && in_time && c.checks() > 0, detail, seconds, limit};
}

}  // namespace detail

inline CriterionResult criterion1() {
  return detail::timed(1, "Semiring law suite", 5.0, [](detail::Checker& c) {
    std::vector<MeasureValue> values{MeasureValue::zero()};
    for (const auto& g : detail::level_grid()) values.push_back(MeasureValue::inf(g));
    for (const auto& r : detail::size_grid()) values.push_back(MeasureValue::std_size(r));
    for (const auto& a : values) {
      c.check(a + MeasureValue::zero() == a && a * MeasureValue::one() == a, [&] { return "identities " + a.str(); });
      c.check(a * MeasureValue::zero() == MeasureValue::zero(), [&] { return "annihilation " + a.str(); });
      for (const auto& b : values) {
        detail::check_semiring_pair(c, a, b);
        for (const auto& d : values) detail::check_semiring_triple(c, a, b, d);
      }
    }
    std::vector<TropicalValue> levels{TropicalValue::zero()};
    for (const auto& g : detail::level_grid()) {
      levels.push_back({ExtRational(g)});
      if (g != 0) levels.push_back({ExtRational(Rational(-g))});
    }
    for (const auto& a : levels)
      for (const auto& b : levels)
        for (const auto& d : levels) detail::check_tropical_triple(c, a, b, d);
    detail::Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
      auto a = detail::random_value(rng), b = detail::random_value(rng), d = detail::random_value(rng);
      detail::check_semiring_pair(c, a, b);
      detail::check_semiring_triple(c, a, b, d);
      detail::check_tropical_triple(c, detail::random_tropical(rng), detail::random_tropical(rng),
                                    detail::random_tropical(rng));
    }
    return std::string();
  });
}

inline CriterionResult criterion2() {
  return detail::timed(2, "cls congruence", 5.0, [](detail::Checker& c) {
    detail::Rng rng(2);
    for (int i = 0; i < 10000; ++i) {
      PuiseuxScalar x = corpus::random_finite_scalar(rng), y = corpus::random_finite_scalar(rng);
      c.check(cls(x) + cls(y) == cls(x + y), [&] { return "cls(x)+cls(y) for x=" + x.str() + ", y=" + y.str(); });
      c.check(cls(x) * cls(y) == cls(x * y), [&] { return "cls(x)cls(y) for x=" + x.str() + ", y=" + y.str(); });
    }
    return std::string();
  });
}

inline CriterionResult criterion3(const EngineConfig& config = {}) {
  return detail::timed(3, "Box base case", 10.0, [&](detail::Checker& c) {
    detail::Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
      std::size_t dim = static_cast<std::size_t>(corpus::uniform(rng, 1, 3));
      MonomialCell box = corpus::random_box(rng, dim);
      MeasureValue expected = MeasureValue::one();
      for (std::size_t k = 0; k < dim; ++k) expected = expected * cls(box[k].thickness.constant_value());
      MeasureValue got = measure_unit(box, config);
      c.check(got == expected, [&] { return box.str() + ": got " + got.str() + ", expected " + expected.str(); });
    }
    return std::string();
  });
}

inline CriterionResult criterion4(const EngineConfig& config = {}) {
  return detail::timed(4, "Bracketing convergence (triangle, hyperbolic cell)", 4.0, [&](detail::Checker& c) {
    auto sets = corpus::unit_sets();
    std::string info;
    for (const char* name : {"triangle", "hyperbolic cell t^2/x1"}) {
      auto start = std::chrono::steady_clock::now();
      const auto& entry = *std::find_if(sets.begin(), sets.end(), [&](const auto& s) { return s.name == name; });
      const MonomialCell& cell = entry.set.cells().front();
      std::optional<LevelBracket> previous;
      for (Rational delta : {Rational(1, 8), Rational(1, 16), Rational(1, 32)}) {
        LevelBracket b = bracket_measure(cell, delta);
        info += std::string(name) + " @" + to_string(delta) + " " + b.lower.str() + ".." + b.upper.str() + "; ";
        c.check(detail::leq(b.lower, b.upper), [&] { return std::string(name) + " bracket out of order"; });
        c.check(detail::leq(b.lower, *entry.expected) && detail::leq(*entry.expected, b.upper),
                [&] { return std::string(name) + " bracket misses the value"; });
        if (previous) {
          c.check(detail::leq(previous->lower, b.lower) && detail::leq(b.upper, previous->upper),
                  [&] { return std::string(name) + " brackets not nested at delta " + to_string(delta); });
        }
        previous = b;
      }
      MeasureValue v = measure_unit(entry.set, config);
      c.check(v == *entry.expected, [&] { return std::string(name) + " recovered " + v.str(); });
      double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      c.check(seconds < 2.0, [&] { return std::string(name) + " took " + std::to_string(seconds) + " s"; });
    }
    return info;
  });
}

inline CriterionResult criterion5(const EngineConfig& config = {}) {
  return detail::timed(5, "Additivity and decomposition independence", 60.0, [&](detail::Checker& c) {
    detail::Rng rng(5);
    auto sets = corpus::unit_sets();
    std::size_t decompositions = 0, total_parts = 0;
    while (decompositions < 120) {
      for (const auto& entry : sets) {
        if (decompositions >= 120) break;
        MeasureValue whole = measure_unit(entry.set, config);
        DefinableSet parts(entry.set.dimension());
        for (const auto& cell : entry.set.cells())
          {
          DefinableSet pieces = detail::random_decomposition(rng, cell);
          for (const auto& p : pieces.cells()) parts.add(p);
        }
        MeasureValue sum = MeasureValue::zero();
        total_parts += parts.cells().size();
        for (const auto& p : parts.cells()) sum = sum + measure_unit(p, config);
        c.check(sum == whole, [&] {
          return entry.name + ": sum over " + std::to_string(parts.cells().size()) + " parts " + sum.str() +
                 " vs whole " + whole.str();
        });
        ++decompositions;
      }
    }
    return std::to_string(decompositions) + " decompositions into " + std::to_string(total_parts) + " cells";
  });
}

inline CriterionResult criterion6(const EngineConfig& config = {}) {
  return detail::timed(6, "Positivity", 5.0, [&](detail::Checker& c) {
    detail::Rng rng(6);
    const PuiseuxScalar t = PuiseuxScalar::t();
    std::size_t with_interior = 0;
    for (int i = 0; i < 50; ++i) {
      std::size_t dim = static_cast<std::size_t>(corpus::uniform(rng, 1, 3));
      DefinableSet x(dim);
      int kind = static_cast<int>(corpus::uniform(rng, 0, 2));
      auto random_mixed_box = [&] {
        std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>> bounds;
        for (std::size_t k = 0; k < dim; ++k) {
          corpus::Side s = corpus::random_side(rng);
          if (corpus::uniform(rng, 0, 2) == 0) s.hi = s.lo;
          bounds.emplace_back(s.lo, s.hi);
        }
        return make_box(bounds);
      };
      if (kind == 0) {
        x.add(random_mixed_box());
      } else if (kind == 1) {
        // a thin piece next to a possibly thick one, separated in x1
        std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>> thin(dim, {0, t});
        thin[0] = {Rational(15, 16), Rational(15, 16)};
        x.add(make_box(thin));
        std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>> other(dim, {0, t});
        if (corpus::uniform(rng, 0, 1)) other[dim - 1] = {t, t};
        x.add(make_box(other));
      } else {
        // cells over a box with a graph or a band as last coordinate
        std::vector<Coordinate> coords;
        for (std::size_t k = 0; k + 1 < dim; ++k) coords.push_back(Coordinate::thick(0, t));
        MonomialFn f = dim > 1 ? corpus::x(0) : MonomialFn(t);
        coords.push_back(corpus::uniform(rng, 0, 1) ? Coordinate::thin(f) : Coordinate::thick(f, MonomialFn(t * t)));
        x.add(MonomialCell(coords));
      }
      MeasureValue v = measure_unit(x, config);
      bool positive = !(v == MeasureValue::zero());
      with_interior += has_interior(x);
      c.check(positive == has_interior(x), [&] { return x.str() + " measured " + v.str(); });
    }
    return std::to_string(with_interior) + "/50 with interior";
  });
}

inline CriterionResult criterion7(const EngineConfig& config = {}) {
  return detail::timed(7, "Product formula", 30.0, [&](detail::Checker& c) {
    detail::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
      DefinableSet x = corpus::random_small_set(rng, static_cast<std::size_t>(corpus::uniform(rng, 1, 2)));
      DefinableSet y = corpus::random_small_set(rng, static_cast<std::size_t>(corpus::uniform(rng, 1, 2)));
      MeasureValue lhs = measure_product(x, y, config);
      MeasureValue rhs = measure_unit(x, config) * measure_unit(y, config);
      c.check(lhs == rhs, [&] { return x.str() + " x " + y.str() + ": " + lhs.str() + " vs " + rhs.str(); });
    }
    return std::string();
  });
}

inline CriterionResult criterion8(const EngineConfig& config = {}) {
  return detail::timed(8, "Isomorphism invariance", 30.0, [&](detail::Checker& c) {
    auto cases = corpus::invariance_cases();
    for (const auto& cs : cases) {
      InvarianceReport r = check_invariance(cs.map, cs.set, config);
      c.check(r.unit && r.equal == Tri::True,
              [&] { return cs.name + ": " + r.before.str() + " vs " + r.after.str(); });
    }
    return std::to_string(cases.size()) + " (map, set) pairs";
  });
}

inline CriterionResult criterion9(const EngineConfig& config = {}) {
  return detail::timed(9, "Normalization well-definedness", 10.0, [&](detail::Checker& c) {
    for (const auto& entry : corpus::bounded_sets()) {
      const DefinableSet& x = entry.set;
      auto scalings = detail::admissible_scalings(x, 5);
      c.check(scalings.size() >= 5, [&] { return entry.name + ": fewer than 5 admissible scalings"; });
      MeasureValue reference = measure_sb(x, config);
      std::size_t i = 0;
      for (const auto& lambda : scalings) {
        auto b = detail::admissible_translation(x, lambda, i % 2 ? Rational(0) : Rational(1, 16));
        MeasureValue v = measure_sb_with(x, std::vector<PuiseuxScalar>(x.dimension(), PuiseuxScalar(lambda)), b, config);
        c.check(v == reference, [&] { return entry.name + ": lambda " + to_string(lambda) + " gives " + v.str() + " vs " + reference.str(); });
        ++i;
      }
      TropicalValue nu_ref = measure_nu(x, config);
      i = 0;
      for (const auto& lambda : scalings) {
        Rational s(static_cast<long long>(i), 2);
        PuiseuxScalar l = PuiseuxScalar::monomial(lambda, s);
        auto b = detail::admissible_translation(x, lambda, 0);
        TropicalValue v = measure_nu_with(x, l, b, config);
        c.check(v == nu_ref, [&] { return entry.name + ": nu with lambda " + l.str() + " gives " + v.str(); });
        ++i;
      }
    }
    return std::string();
  });
}

inline CriterionResult criterion10(const EngineConfig& config = {}) {
  return detail::timed(10, "nu compatibility", 10.0, [&](detail::Checker& c) {
    std::size_t infinitesimal = 0, standard = 0;
    for (const auto& entry : corpus::bounded_sets()) {
      TropicalValue nu = measure_nu(entry.set, config);
      if (has_std_interior(entry.set)) {
        ++standard;
        c.check(nu == TropicalValue::one(), [&] { return entry.name + ": nu = " + nu.str(); });
      } else {
        ++infinitesimal;
        TropicalValue mu = to_tropical(measure_sb(entry.set, config));
        c.check(mu == nu, [&] { return entry.name + ": " + mu.str() + " vs " + nu.str(); });
      }
    }
    const PuiseuxScalar t = PuiseuxScalar::t();
    DefinableSet big = make_box({{0, PuiseuxScalar::monomial(1, -1)}, {0, t * t}}, Region::Orthant);
    TropicalValue nu = measure_nu(big, config);
    c.check(nu == TropicalValue{ExtRational(1)}, [&] { return "nu((0,1/t)x(0,t^2)) = " + nu.str(); });
    return std::to_string(infinitesimal) + " infinitesimal and " + std::to_string(standard) + " standard sets";
  });
}

inline CriterionResult criterion11(const EngineConfig& config = {}) {
  return detail::timed(11, "Standard-regime Lebesgue", 5.0, [&](detail::Checker& c) {
    auto half = Rational(1, 2);
    MeasureValue square = measure_unit(make_box({{Rational(1, 4), Rational(3, 4)}, {Rational(1, 4), Rational(3, 4)}}), config);
    c.check(square == MeasureValue::std_size(Rational(1, 4)), [&] { return "square " + square.str(); });
    MeasureValue root = measure_unit(MonomialCell({Coordinate::thick(0, 1), Coordinate::thick(0, corpus::x(0, half))}), config);
    c.check(root == MeasureValue::std_size(Rational(2, 3)), [&] { return "root cell " + root.str(); });
    // (2/3)(1/2)^(3/2) = sqrt(2)/6: certify 36 lo^2 <= 2 <= 36 hi^2.
    MeasureValue root_half =
        measure_unit(MonomialCell({Coordinate::thick(0, half), Coordinate::thick(0, corpus::x(0, half))}), config);
    const Interval& a = root_half.size();
    c.check(a.width() <= config.leb_tol && 36 * a.lo * a.lo <= 2 && 2 <= 36 * a.hi * a.hi,
            [&] { return "root over (0,1/2) " + a.str(); });
    // (3/4)(1/2)^(4/3): certify (4 lo / 3)^3 <= 1/16 <= (4 hi / 3)^3.
    MeasureValue cube =
        measure_unit(MonomialCell({Coordinate::thick(0, half), Coordinate::thick(0, corpus::x(0, Rational(1, 3)))}), config);
    const Interval& b = cube.size();
    auto cubed = [](const Rational& q) { return q * q * q; };
    c.check(b.width() <= config.leb_tol && cubed(4 * b.lo / 3) <= Rational(1, 16) && Rational(1, 16) <= cubed(4 * b.hi / 3),
            [&] { return "cube root over (0,1/2) " + b.str(); });
    return std::string();
  });
}

inline std::vector<CriterionResult> run_all(const EngineConfig& config = {}) {
  return {criterion1(),        criterion2(),        criterion3(config),  criterion4(config),
          criterion5(config),  criterion6(config),  criterion7(config),  criterion8(config),
          criterion9(config),  criterion10(config), criterion11(config)};
}

inline std::string format(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " (" << std::fixed;
  out.precision(2);
  out << r.seconds << " s, limit " << r.limit_seconds << " s) - " << r.detail;
  return out.str();
}

}  // namespace omeasure::selftest

#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "lebesgue.hpp"
#include "semiring.hpp"
#include "sets.hpp"

namespace omeasure {

struct EngineConfig {
  Rational delta0{1, 8};
  int max_refine = 20;
  std::optional<Integer> denom_cap;  // default: lcm of exponent denominators times 64
  Rational leb_tol{1, 1000000};
  std::size_t node_budget = 200000;
  std::size_t leb_budget = 20000;

  void validate() const {
    if (delta0 <= 0) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
    if (max_refine <= 0) throw Error(ErrorCode::InvalidArgument, "max_refine must be positive");
    if (leb_tol <= 0) throw Error(ErrorCode::InvalidArgument, "leb_tol must be positive");
    if (denom_cap && *denom_cap <= 0) throw Error(ErrorCode::InvalidArgument, "denom_cap must be positive");
  }
};

/// Two-sided enclosure of a measure. In the infinitesimal regime
/// lower = Inf(a), upper = Inf(b) with b <= a.
struct LevelBracket {
  MeasureValue lower;
  MeasureValue upper;
  Rational delta;
  int refinement_depth = 0;

  bool is_exact() const { return lower == upper; }
  std::string str() const {
    return "[" + lower.str() + ", " + upper.str() + "] (delta " + to_string(delta) + ")";
  }
};

class BracketDiverged : public Error {
 public:
  BracketDiverged(LevelBracket bracket, const std::string& message)
      : Error(ErrorCode::BracketDiverged, message + ": " + bracket.str()), bracket_(std::move(bracket)) {}
  const LevelBracket& bracket() const { return bracket_; }

 private:
  LevelBracket bracket_;
};

/// Level of a thick cell without standard interior.
///
/// Shearing coordinate k by its lower bound turns x_k into an offset
/// y_k in (0, h_k). Points whose offsets have valuations s_k occupy a region
/// of size t^(s_1 + ... + s_n), where s_k cannot be smaller than v(h_k) at
/// the base point and x_k has valuation min(s_k, v(f_k)). The level of the
/// cell is therefore the minimum of the piecewise-linear
///   F(s) = sum_k max(s_k, trop h_k(w_<k), 0),  w_k = min(s'_k, trop f_k(w_<k)),
/// over s in Q^(n-1)_{>=0}, with the last offset taking its full thickness.
class LevelObjective {
 public:
  explicit LevelObjective(const MonomialCell& cell) : cell_(cell) {
    if (!cell.is_full_dimensional()) throw Error(ErrorCode::InvalidArgument, "level objective needs a thick cell");
    Rational f0 = value(std::vector<Rational>(dims(), Rational(0)));
    bound_ = Rational(ceil(f0));
  }

  std::size_t dims() const { return cell_.dimension() - 1; }
  /// Minimizers lie in [0, bound]^dims since F(s) >= sum s_k.
  const Rational& bound() const { return bound_; }

  Rational value(const std::vector<Rational>& s) const {
    std::vector<Rational> w;
    Rational total = 0;
    for (std::size_t k = 0; k < cell_.dimension(); ++k) {
      Rational h = cell_[k].thickness.trop(w).value();
      Rational sk = k < dims() ? s[k] : Rational(0);
      Rational sp = std::max({sk, h, Rational(0)});
      total += sp;
      ExtRational f = cell_[k].low.trop(w);
      w.push_back(f.is_infinite() ? sp : std::min(sp, f.value()));
    }
    return total;
  }

  /// Lower bound of F over the box [a, b].
  Rational lower_bound(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    std::vector<Rational> wlo, whi;
    Rational total = 0;
    for (std::size_t k = 0; k < cell_.dimension(); ++k) {
      TropRange h = cell_[k].thickness.trop_range(wlo, whi);
      Rational ak = k < dims() ? a[k] : Rational(0);
      Rational bk = k < dims() ? b[k] : Rational(0);
      Rational splo = std::max({ak, h.lo.value(), Rational(0)});
      Rational sphi = std::max({bk, h.hi.value(), Rational(0)});
      total += splo;
      TropRange f = cell_[k].low.trop_range(wlo, whi);
      wlo.push_back(f.lo.is_infinite() ? splo : std::min(splo, f.lo.value()));
      whi.push_back(f.hi.is_infinite() ? sphi : std::min(sphi, f.hi.value()));
    }
    return total;
  }

 private:
  MonomialCell cell_;
  Rational bound_;
};

namespace detail {

inline MeasureValue inf_level(const Rational& level) { return MeasureValue::inf(std::max(level, Rational(0))); }

/// Enumerates grid points j * delta in [0, bound] along each axis.
template <class Fn>
void for_each_grid_index(std::size_t dims, long long steps, Fn fn) {
  std::vector<long long> idx(dims, 0);
  while (true) {
    fn(idx);
    std::size_t j = 0;
    while (j < dims && ++idx[j] > steps) idx[j++] = 0;
    if (j == dims) break;
  }
}

/// The unique reduced fraction p/q with q <= cap inside [lo, hi], if any.
inline std::optional<Rational> unique_small_fraction(const Rational& lo, const Rational& hi, const Integer& cap) {
  std::optional<Rational> found;
  long long limit = to_small_int(cap, "denominator cap");
  for (long long q = 1; q <= limit; ++q) {
    Integer first = ceil(lo * q);
    Integer last = floor(hi * q);
    for (Integer p = first; p <= last; ++p) {
      if (gcd(p, Integer(q)) != 1) continue;
      if (found) return std::nullopt;
      found = Rational(p, Integer(q));
    }
  }
  return found;
}

}  // namespace detail

/// Bracket of the level on a uniform valuation grid of step delta: the upper
/// value comes from F at grid points (each one a realizable subregion), the
/// lower value from interval bounds of F over every grid cell. Halving delta
/// refines both grids, so brackets are nested.
inline LevelBracket bracket_measure(const MonomialCell& cell, const Rational& delta) {
  if (delta <= 0) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  if (!cell.is_full_dimensional()) return {MeasureValue::zero(), MeasureValue::zero(), delta, 0};
  if (has_std_interior(cell)) throw Error(ErrorCode::InvalidArgument, "cell has standard interior");
  LevelObjective objective(cell);
  const std::size_t dims = objective.dims();
  if (dims == 0) {
    auto v = detail::inf_level(objective.value({}));
    return {v, v, delta, 0};
  }
  Rational steps_q = objective.bound() / delta;
  long long steps = to_small_int(ceil(steps_q), "grid size");
  Rational best_point = objective.value(std::vector<Rational>(dims, Rational(0)));
  Rational best_cell = best_point;
  detail::for_each_grid_index(dims, steps, [&](const std::vector<long long>& idx) {
    std::vector<Rational> a(dims), b(dims);
    bool interior = true;
    for (std::size_t i = 0; i < dims; ++i) {
      a[i] = delta * idx[i];
      b[i] = a[i] + delta;
      if (idx[i] == steps) interior = false;
    }
    best_point = std::min(best_point, objective.value(a));
    if (interior) best_cell = std::min(best_cell, objective.lower_bound(a, b));
  });
  // The last layer [steps*delta, ...) lies beyond the bound and cannot hold minimizers.
  return {detail::inf_level(best_point), detail::inf_level(best_cell), delta, 0};
}

/// Exact level of a thick cell without standard interior: best-first
/// branch-and-bound on F, stopping when the bounds meet or when a single
/// rational with denominator <= denom_cap remains in the bracket.
inline Rational cell_level(const MonomialCell& cell, const EngineConfig& config = {}) {
  LevelObjective objective(cell);
  const std::size_t dims = objective.dims();
  if (dims == 0) return std::max(objective.value({}), Rational(0));
  Integer cap = config.denom_cap ? *config.denom_cap : all_denominator_lcm(cell) * 64;

  struct Node {
    std::vector<Rational> a, b;
    Rational lb;
    int depth;
    bool operator<(const Node& o) const { return lb > o.lb; }  // min-heap on lb
  };
  const Rational S = objective.bound();
  Rational upper = objective.value(std::vector<Rational>(dims, Rational(0)));
  if (S == 0) return upper;
  // Depth budget: widths down to delta0 / 2^max_refine per axis.
  int max_depth = static_cast<int>(dims) * (config.max_refine + 1);
  for (Rational w = S; w > config.delta0; w /= 2) max_depth += static_cast<int>(dims);

  std::priority_queue<Node> queue;
  queue.push({std::vector<Rational>(dims, Rational(0)), std::vector<Rational>(dims, S),
              objective.lower_bound(std::vector<Rational>(dims, Rational(0)), std::vector<Rational>(dims, S)), 0});
  std::size_t evaluations = 0;
  int deepest = 0;
  while (true) {
    Node node = queue.top();
    if (node.lb >= upper) return upper;
    if (auto q = detail::unique_small_fraction(node.lb, upper, cap)) return *q;
    if (node.depth >= max_depth || evaluations >= config.node_budget) {
      Rational width = 0;
      for (std::size_t i = 0; i < dims; ++i) width = std::max(width, node.b[i] - node.a[i]);
      LevelBracket bracket{detail::inf_level(upper), detail::inf_level(node.lb), width, deepest};
      throw BracketDiverged(bracket, "level refinement stopped before a unique rational remained");
    }
    queue.pop();
    std::size_t axis = 0;
    for (std::size_t i = 1; i < dims; ++i)
      if (node.b[i] - node.a[i] > node.b[axis] - node.a[axis]) axis = i;
    Rational mid = (node.a[axis] + node.b[axis]) / 2;
    for (int side = 0; side < 2; ++side) {
      Node child{node.a, node.b, 0, node.depth + 1};
      (side == 0 ? child.b : child.a)[axis] = mid;
      std::vector<Rational> centre(dims);
      for (std::size_t i = 0; i < dims; ++i) centre[i] = (child.a[i] + child.b[i]) / 2;
      upper = std::min({upper, objective.value(child.a), objective.value(centre)});
      child.lb = objective.lower_bound(child.a, child.b);
      deepest = std::max(deepest, child.depth);
      evaluations += 3;
      if (child.lb < upper) queue.push(std::move(child));
    }
    if (queue.empty()) return upper;
  }
}

/// Measure of a set inside [0,1]^n.
inline MeasureValue measure_unit(const DefinableSet& x, const EngineConfig& config = {}) {
  config.validate();
  for (const auto& c : x.cells()) {
    auto enc = c.enclosure();
    for (const auto& hi : enc.hi)
      if (hi > PuiseuxScalar(1)) throw Error(ErrorCode::OutOfRange, "set leaves [0,1]^n: " + c.str());
  }
  std::vector<StdCell> standard;
  for (const auto& c : x.cells())
    if (has_std_interior(c)) standard.push_back(std_part(c));
  if (!standard.empty()) return MeasureValue::std_size(lebesgue(standard, config.leb_tol, config.leb_budget));

  MeasureValue total = MeasureValue::zero();
  MeasureValue lower = MeasureValue::zero(), upper = MeasureValue::zero();
  bool diverged = false;
  int depth = 0;
  Rational delta = 0;
  for (const auto& c : x.cells()) {
    if (!c.is_full_dimensional()) continue;
    try {
      MeasureValue v = detail::inf_level(cell_level(c, config));
      total = total + v;
      lower = lower + v;
      upper = upper + v;
    } catch (const BracketDiverged& e) {
      diverged = true;
      lower = lower + e.bracket().lower;
      upper = upper + e.bracket().upper;
      depth = std::max(depth, e.bracket().refinement_depth);
      delta = std::max(delta, e.bracket().delta);
    }
  }
  if (diverged) throw BracketDiverged({lower, upper, delta, depth}, "measure not recovered exactly");
  return total;
}

inline MeasureValue measure_unit(const MonomialCell& c, const EngineConfig& config = {}) {
  return measure_unit(DefinableSet(c), config);
}

/// Bracket of a whole set at a fixed grid step (exact for standard sets).
inline LevelBracket bracket_measure(const DefinableSet& x, const Rational& delta, const EngineConfig& config = {}) {
  if (has_std_interior(x)) {
    auto v = measure_unit(x, config);
    return {v, v, delta, 0};
  }
  LevelBracket total{MeasureValue::zero(), MeasureValue::zero(), delta, 0};
  for (const auto& c : x.cells()) {
    auto b = bracket_measure(c, delta);
    total.lower = total.lower + b.lower;
    total.upper = total.upper + b.upper;
  }
  return total;
}

inline MeasureValue measure_product(const DefinableSet& x, const DefinableSet& y, const EngineConfig& config = {}) {
  return measure_unit(product(x, y), config);
}

namespace detail {

inline DefinableSet transform_set(const DefinableSet& x, const std::vector<PuiseuxScalar>& lambda,
                                  const std::vector<PuiseuxScalar>& b) {
  DefinableSet out(x.dimension());
  for (const auto& c : x.cells()) {
    MonomialCell scaled = scale_cell(c, lambda, Region::Orthant);
    out.add(translate_cell(scaled, b, Region::UnitCube));
  }
  return out;
}

inline Integer set_denominator_lcm(const DefinableSet& x) {
  Integer d = 1;
  for (const auto& c : x.cells()) d = lcm(d, exponent_denominator_lcm(c));
  return d;
}

/// Largest coordinate bound over all cells.
inline PuiseuxScalar set_extent(const DefinableSet& x) {
  PuiseuxScalar m;
  for (const auto& c : x.cells())
    for (const auto& hi : c.enclosure().hi) m = std::max(m, hi);
  return m;
}

/// Smallest k >= 1 with m = k^d >= bound.
inline Integer scale_for(const PuiseuxScalar& bound, const Integer& d) {
  Integer k = 1;
  while (PuiseuxScalar(Rational(ipow(k, static_cast<unsigned long>(to_small_int(d, "denominator"))))) < bound) ++k;
  return ipow(k, static_cast<unsigned long>(to_small_int(d, "denominator")));
}

inline PuiseuxScalar determinant(const std::vector<PuiseuxScalar>& lambda) {
  PuiseuxScalar det(1);
  for (const auto& l : lambda) det *= l;
  return det;
}

}  // namespace detail

/// mu on a set in V^n for an explicit admissible normalization x -> diag(lambda) x + b
/// (standard lambda_i, image inside [0,1]^n): the value cls(1/det) * mu(TX).
inline MeasureValue measure_sb_with(const DefinableSet& x, const std::vector<PuiseuxScalar>& lambda,
                                    const std::vector<PuiseuxScalar>& b, const EngineConfig& config = {}) {
  for (const auto& l : lambda)
    if (l.valuation() != ExtRational(0) || l.sign() <= 0)
      throw Error(ErrorCode::InvalidArgument, "normalization factors must be positive and standard, got " + l.str());
  DefinableSet image = detail::transform_set(x, lambda, b);
  PuiseuxScalar det = detail::determinant(lambda);
  return cls(PuiseuxScalar(1).divided_by(det)) * measure_unit(image, config);
}

/// mu on a bounded set in V^n, normalized by x -> x / m with m = k^d chosen so the image lies in [0,1]^n.
inline MeasureValue measure_sb(const DefinableSet& x, const EngineConfig& config = {}) {
  if (x.empty()) return MeasureValue::zero();
  PuiseuxScalar extent = detail::set_extent(x);
  if (!extent.is_zero() && extent.valuation() < ExtRational(0))
    throw Error(ErrorCode::NotFinite, "set is not bounded in V^n (extent " + extent.str() + ")");
  Integer m = detail::scale_for(extent, detail::set_denominator_lcm(x));
  std::vector<PuiseuxScalar> lambda(x.dimension(), PuiseuxScalar(Rational(1, m)));
  return measure_sb_with(x, lambda, std::vector<PuiseuxScalar>(x.dimension()), config);
}

/// nu for an explicit admissible lambda = c t^s (0 < lambda <= 1) applied to
/// every coordinate and translation b: level(mu(TX)) - n v(lambda).
inline TropicalValue measure_nu_with(const DefinableSet& x, const PuiseuxScalar& lambda,
                                     const std::vector<PuiseuxScalar>& b, const EngineConfig& config = {}) {
  if (!lambda.is_monomial() || lambda.sign() <= 0 || lambda > PuiseuxScalar(1))
    throw Error(ErrorCode::InvalidArgument, "nu normalization needs 0 < lambda <= 1 single-term, got " + lambda.str());
  DefinableSet image = detail::transform_set(x, std::vector<PuiseuxScalar>(x.dimension(), lambda), b);
  TropicalValue inner = to_tropical(measure_unit(image, config));
  Rational shift = -Rational(static_cast<long long>(x.dimension())) * lambda.valuation().value();
  return t_mul(inner, TropicalValue{ExtRational(shift)});
}

inline TropicalValue measure_nu(const DefinableSet& x, const EngineConfig& config = {}) {
  if (x.empty()) return TropicalValue::zero();
  PuiseuxScalar extent = detail::set_extent(x);
  Rational s = 0;
  if (!extent.is_zero() && extent.valuation() < ExtRational(0)) s = -extent.valuation().value();
  PuiseuxScalar reduced = extent * PuiseuxScalar::monomial(1, s);
  Integer m = detail::scale_for(reduced, detail::set_denominator_lcm(x));
  return measure_nu_with(x, PuiseuxScalar::monomial(Rational(1, m), s), std::vector<PuiseuxScalar>(x.dimension()),
                         config);
}

}  // namespace omeasure

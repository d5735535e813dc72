#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "realpoly.hpp"
#include "sets.hpp"

namespace omeasure {

namespace detail {

/// p^r for a real polynomial p; nullopt when no closed form is available here.
inline std::optional<RealPoly> substitute_power(const RealPoly& p, const Rational& r, unsigned bits) {
  if (r == 0) return RealPoly(1);
  if (p.is_zero()) {
    if (r > 0) return RealPoly();
    return std::nullopt;
  }
  if (is_integer(r) && r > 0) return p.pow(static_cast<unsigned>(to_small_int(numer(r), "power")));
  if (p.is_single_term()) {
    const auto& t = p.terms().front();
    if (t.coefficient.lo <= 0) return std::nullopt;
    return RealPoly::term(power_enclosure(t.coefficient, r, bits), t.exponents.scaled(r));
  }
  return std::nullopt;
}

}  // namespace detail

/// Iterated symbolic integration of 1 over a real cell. Each step integrates
/// c x_k^a R(x_<k) between the bounds, which needs the bounds raised to a+1.
/// Returns nullopt when a step has no closed form in this representation.
inline std::optional<Interval> integrate_symbolic(const StdCell& cell, unsigned bits = 64) {
  RealPoly integrand(1);
  for (std::size_t k = cell.coords.size(); k-- > 0;) {
    const RealPoly& lower = cell.coords[k].low;
    const RealPoly upper = lower + cell.coords[k].thickness;
    RealPoly next;
    for (const auto& term : integrand.terms()) {
      Rational a = term.exponents[k];
      if (a == -1) return std::nullopt;
      Rational r = a + 1;
      auto up = detail::substitute_power(upper, r, bits);
      auto lo = detail::substitute_power(lower, r, bits);
      if (!up || !lo) return std::nullopt;
      Exponents rest = term.exponents.with(k, 0);
      RealPoly scale = RealPoly::term(term.coefficient * Interval(Rational(1) / r), rest);
      next = next + scale * (*up - *lo);
    }
    integrand = next;
  }
  return integrand.constant_value();
}

namespace detail {

struct BaseBox {
  std::vector<Interval> box;
  Interval contribution;
  bool inside = false;
  Rational gap() const { return contribution.width(); }
  friend bool operator<(const BaseBox& a, const BaseBox& b) { return a.gap() < b.gap(); }
};

}  // namespace detail

/// Certified bracket of the volume by adaptive subdivision of the base: a base
/// box inside the base contributes |B| [min H, max H], a boundary box
/// contributes [0, |B| max H]. Splits the box with the widest contribution
/// until the bracket is narrower than tol or the budget is spent.
inline Interval integrate_bracket(const StdCell& cell, const Rational& tol, std::size_t budget = 20000,
                                  unsigned bits = 48) {
  const std::size_t n = cell.coords.size();
  const std::size_t m = n - 1;  // base dimension
  // Bounding box of the base from interval enclosures.
  std::vector<Interval> bbox;
  for (std::size_t k = 0; k < m; ++k) {
    Interval lo = cell.coords[k].low.enclose(bbox, bits);
    Interval hi = (cell.coords[k].low + cell.coords[k].thickness).enclose(bbox, bits);
    bbox.push_back(Interval(std::max(Rational(0), lo.lo), hi.hi));
  }
  const RealPoly& top = cell.coords[m].thickness;

  auto evaluate = [&](std::vector<Interval> box) {
    detail::BaseBox b{std::move(box), Interval(0), false};
    Rational volume = 1;
    for (const auto& iv : b.box) volume *= iv.width();
    bool inside = true;
    for (std::size_t k = 0; k < m; ++k) {
      Interval lo = cell.coords[k].low.enclose(b.box, bits);
      Interval hi = (cell.coords[k].low + cell.coords[k].thickness).enclose(b.box, bits);
      if (b.box[k].hi <= lo.lo || b.box[k].lo >= hi.hi) return b;  // disjoint
      if (!(lo.hi <= b.box[k].lo && b.box[k].hi <= hi.lo)) inside = false;
    }
    Interval h = top.enclose(b.box, bits);
    Rational hmin = std::max(Rational(0), h.lo);
    b.inside = inside;
    b.contribution = inside ? Interval(volume * hmin, volume * h.hi) : Interval(0, volume * h.hi);
    return b;
  };

  std::priority_queue<detail::BaseBox> queue;
  Rational lower = 0, upper = 0;
  auto push = [&](detail::BaseBox b) {
    lower += b.contribution.lo;
    upper += b.contribution.hi;
    if (b.gap() > 0) queue.push(std::move(b));
  };
  push(evaluate(bbox));
  std::size_t evaluations = 1;
  while (m > 0 && !queue.empty() && upper - lower > tol && evaluations < budget) {
    detail::BaseBox b = queue.top();
    queue.pop();
    lower -= b.contribution.lo;
    upper -= b.contribution.hi;
    std::size_t axis = 0;
    for (std::size_t k = 1; k < m; ++k)
      if (b.box[k].width() > b.box[axis].width()) axis = k;
    Rational mid = b.box[axis].midpoint();
    auto left = b.box;
    auto right = b.box;
    left[axis] = Interval(b.box[axis].lo, mid);
    right[axis] = Interval(mid, b.box[axis].hi);
    push(evaluate(std::move(left)));
    push(evaluate(std::move(right)));
    evaluations += 2;
  }
  Interval total(lower, upper);
  return total;
}

/// Volume of a real cell to within tol: exact or root-enclosed when the
/// iterated integral has a closed form, certified subdivision otherwise.
inline Interval lebesgue(const StdCell& cell, const Rational& tol, std::size_t budget = 20000) {
  for (unsigned bits = 64; bits <= 1024; bits *= 2) {
    auto v = integrate_symbolic(cell, bits);
    if (!v) break;
    if (v->width() <= tol) return *v;
  }
  if (!integrate_symbolic(cell, 64)) {
    Interval b = integrate_bracket(cell, tol, budget);
    if (b.width() <= tol) return b;
    throw Error(ErrorCode::ToleranceUnreachable,
                "volume bracket " + b.str() + " did not reach tolerance " + to_string(tol));
  }
  throw Error(ErrorCode::ToleranceUnreachable, "root enclosures did not reach tolerance " + to_string(tol));
}

inline Interval lebesgue(const std::vector<StdCell>& cells, const Rational& tol, std::size_t budget = 20000) {
  Interval total(0);
  Rational share = tol / static_cast<long long>(std::max<std::size_t>(cells.size(), 1));
  for (const auto& c : cells) total += lebesgue(c, share, budget);
  return total;
}

}  // namespace omeasure

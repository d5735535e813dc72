#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posynomial.hpp"
#include "realpoly.hpp"
#include "semiring.hpp"

namespace omeasure {

inline constexpr std::size_t kDefaultDimensionCap = 4;

/// Where a cell is required to live.
enum class Region {
  UnitCube,  // [0,1]^n, the domain of the measure proper
  Orthant,   // the closed non-negative orthant, for sets in V^n / R^n before normalization
};

/// One coordinate of a monomial cell: Thin is the graph x_k = f(x_<k),
/// Thick is the band f(x_<k) < x_k < f(x_<k) + h(x_<k).
struct Coordinate {
  MonomialFn low;
  MonomialFn thickness;  // zero for Thin

  static Coordinate thin(MonomialFn f) { return {std::move(f), MonomialFn()}; }
  static Coordinate thick(MonomialFn f, MonomialFn h) { return {std::move(f), std::move(h)}; }

  bool is_thin() const { return thickness.is_zero(); }
  bool is_thick() const { return !thickness.is_zero(); }
  MonomialFn high() const { return low + thickness; }
  bool is_constant() const { return low.is_constant() && thickness.is_constant(); }

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

/// Per-coordinate enclosure [lo_k, hi_k] of a cell.
struct Enclosure {
  std::vector<PuiseuxScalar> lo;
  std::vector<PuiseuxScalar> hi;
};

class MonomialCell {
 public:
  MonomialCell() = default;

  /// Validates the class invariants: posynomial (or zero) bounds, coordinate k
  /// depending only on x_1..x_{k-1}, and containment in the requested region.
  explicit MonomialCell(std::vector<Coordinate> coords, Region region = Region::UnitCube,
                        std::size_t dimension_cap = kDefaultDimensionCap)
      : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error(ErrorCode::InvalidArgument, "a cell needs at least one coordinate");
    if (coords_.size() > dimension_cap)
      throw Error(ErrorCode::InvalidArgument, "dimension " + std::to_string(coords_.size()) +
                                                  " exceeds the cap " + std::to_string(dimension_cap));
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      const auto& c = coords_[k];
      if (!c.low.is_posynomial() || !c.thickness.is_posynomial())
        throw Error(ErrorCode::ClassViolation, "coordinate " + std::to_string(k + 1) +
                                                   " has a non-posynomial bound: low=" + c.low.str() +
                                                   ", thick=" + c.thickness.str());
      if (c.low.arity() > k || c.thickness.arity() > k)
        throw Error(ErrorCode::ClassViolation,
                    "coordinate " + std::to_string(k + 1) + " depends on itself or a later coordinate");
    }
    auto enc = enclosure();
    if (region == Region::UnitCube) {
      for (std::size_t k = 0; k < coords_.size(); ++k)
        if (enc.hi[k] > PuiseuxScalar(1))
          throw Error(ErrorCode::OutOfRange, "coordinate " + std::to_string(k + 1) + " may exceed 1 (bound " +
                                                 enc.hi[k].str() + ")");
    }
  }

  std::size_t dimension() const { return coords_.size(); }
  const std::vector<Coordinate>& coordinates() const { return coords_; }
  const Coordinate& operator[](std::size_t k) const { return coords_.at(k); }

  bool is_full_dimensional() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Coordinate& c) { return c.is_thick(); });
  }
  bool is_box() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Coordinate& c) { return c.is_constant(); });
  }

  /// First k coordinates, as a cell of dimension k.
  MonomialCell base(std::size_t k) const {
    MonomialCell b;
    b.coords_.assign(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(k));
    return b;
  }

  /// Coordinatewise enclosure from corner bounds of the bounding functions.
  /// Upper bounds are sharp at corners; lower bounds are termwise.
  Enclosure enclosure() const {
    Enclosure e;
    for (const auto& c : coords_) {
      e.lo.push_back(c.low.lower_bound(e.lo, e.hi));
      e.hi.push_back(c.high().upper_bound(e.lo, e.hi));
    }
    return e;
  }

  /// Membership of a point with Puiseux coordinates. Irrational powers make
  /// some comparisons inconclusive, reported as Indistinguishable.
  Tri contains(const std::vector<PuiseuxScalar>& x) const {
    if (x.size() != coords_.size()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
    bool certain = true;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      auto [flo, fhi] = evaluate(coords_[k].low, x);
      if (coords_[k].is_thin()) {
        if (flo == fhi) {
          if (x[k] != flo) return Tri::False;
        } else if (x[k] < flo || x[k] > fhi) {
          return Tri::False;
        } else {
          certain = false;
        }
        continue;
      }
      auto [glo, ghi] = evaluate(coords_[k].high(), x);
      if (x[k] <= flo || x[k] >= ghi) return Tri::False;
      if (x[k] <= fhi || x[k] >= glo) certain = false;
    }
    return certain ? Tri::True : Tri::Indistinguishable;
  }

  /// Bounds on f(x) at a point with non-negative Puiseux coordinates.
  static std::pair<PuiseuxScalar, PuiseuxScalar> evaluate(const MonomialFn& f, const std::vector<PuiseuxScalar>& x) {
    return {f.lower_bound(x, x), f.upper_bound(x, x)};
  }

  /// Renumber variables by offset (for products).
  MonomialCell shifted(std::size_t offset) const {
    MonomialCell out;
    for (const auto& c : coords_) out.coords_.push_back({c.low.shifted(offset), c.thickness.shifted(offset)});
    return out;
  }

  friend bool operator==(const MonomialCell&, const MonomialCell&) = default;

  std::string str() const {
    std::string out = "cell[";
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (k) out += "; ";
      out += "x" + std::to_string(k + 1) + ": ";
      if (coords_[k].is_thin())
        out += "= " + coords_[k].low.str();
      else
        out += "low=" + coords_[k].low.str() + ", thick=" + coords_[k].thickness.str();
    }
    return out + "]";
  }

  /// Unchecked construction used by operations that preserve the invariants.
  static MonomialCell trusted(std::vector<Coordinate> coords) {
    MonomialCell c;
    c.coords_ = std::move(coords);
    return c;
  }

 private:
  std::vector<Coordinate> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const MonomialCell& c) { return os << c.str(); }

/// A finite union of monomial cells of a common dimension.
class DefinableSet {
 public:
  explicit DefinableSet(std::size_t dimension = 1) : dimension_(dimension) {}
  DefinableSet(MonomialCell cell) : dimension_(cell.dimension()) { cells_.push_back(std::move(cell)); }  // NOLINT

  std::size_t dimension() const { return dimension_; }
  const std::vector<MonomialCell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  /// Adds a cell. Two full-dimensional boxes with overlapping interiors are
  /// rejected; overlap of general cells is the caller's responsibility.
  void add(MonomialCell cell) {
    if (cell.dimension() != dimension_)
      throw Error(ErrorCode::DimensionMismatch, "cell of dimension " + std::to_string(cell.dimension()) +
                                                    " added to a set of dimension " + std::to_string(dimension_));
    if (cell.is_box() && cell.is_full_dimensional())
      for (const auto& other : cells_)
        if (other.is_box() && other.is_full_dimensional() && boxes_overlap(cell, other))
          throw Error(ErrorCode::InvalidArgument, "union members overlap in a full-dimensional box");
    cells_.push_back(std::move(cell));
  }

  std::string str() const {
    std::string out = "set{";
    for (std::size_t i = 0; i < cells_.size(); ++i) out += (i ? ", " : "") + cells_[i].str();
    return out + "}";
  }

 private:
  static bool boxes_overlap(const MonomialCell& a, const MonomialCell& b) {
    for (std::size_t k = 0; k < a.dimension(); ++k) {
      PuiseuxScalar alo = a[k].low.constant_value(), ahi = a[k].high().constant_value();
      PuiseuxScalar blo = b[k].low.constant_value(), bhi = b[k].high().constant_value();
      if (ahi <= blo || bhi <= alo) return false;
    }
    return true;
  }

  std::size_t dimension_;
  std::vector<MonomialCell> cells_;
};

inline std::ostream& operator<<(std::ostream& os, const DefinableSet& x) { return os << x.str(); }

inline DefinableSet make_union(const std::vector<DefinableSet>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "union of no sets");
  DefinableSet out(parts.front().dimension());
  for (const auto& p : parts)
    for (const auto& c : p.cells()) out.add(c);
  return out;
}

/// Box with constant bounds; a_i = b_i gives a Thin coordinate.
inline MonomialCell make_box(const std::vector<std::pair<PuiseuxScalar, PuiseuxScalar>>& bounds,
                             Region region = Region::UnitCube) {
  std::vector<Coordinate> coords;
  for (const auto& [a, b] : bounds) {
    if (a.sign() < 0 || b < a) throw Error(ErrorCode::OutOfRange, "box bounds (" + a.str() + ", " + b.str() + ")");
    if (region == Region::UnitCube && b > PuiseuxScalar(1))
      throw Error(ErrorCode::OutOfRange, "box bound " + b.str() + " leaves [0,1]");
    coords.push_back(a == b ? Coordinate::thin(a) : Coordinate::thick(a, b - a));
  }
  return MonomialCell(std::move(coords), region);
}

inline bool has_interior(const MonomialCell& c) { return c.is_full_dimensional(); }
inline bool has_interior(const DefinableSet& x) {
  return std::any_of(x.cells().begin(), x.cells().end(), [](const MonomialCell& c) { return has_interior(c); });
}

/// Recursive test: every coordinate is Thick and its thickness carries a term
/// with a coefficient of valuation 0 (so the standard shadow is positive on an
/// open subset of the positive orthant).
inline bool has_std_interior(const MonomialCell& c) {
  for (const auto& coord : c.coordinates()) {
    if (coord.is_thin()) return false;
    bool standard = std::any_of(coord.thickness.terms().begin(), coord.thickness.terms().end(),
                                [](const MonomialFn::Term& t) { return t.coefficient.valuation() == ExtRational(0); });
    if (!standard) return false;
  }
  return true;
}
inline bool has_std_interior(const DefinableSet& x) {
  return std::any_of(x.cells().begin(), x.cells().end(), [](const MonomialCell& c) { return has_std_interior(c); });
}

/// Real cell: low_k < x_k < low_k + thick_k with real-coefficient bounds.
struct StdCoordinate {
  RealPoly low;
  RealPoly thickness;
};
struct StdCell {
  std::vector<StdCoordinate> coords;
  std::string str() const {
    std::string out = "stdcell[";
    for (std::size_t k = 0; k < coords.size(); ++k)
      out += (k ? "; " : "") + std::string("low=") + coords[k].low.str() + ", thick=" + coords[k].thickness.str();
    return out + "]";
  }
};

inline StdCell std_part(const MonomialCell& c) {
  if (!has_std_interior(c)) throw Error(ErrorCode::NoStdInterior, "cell has no standard interior: " + c.str());
  StdCell out;
  for (const auto& coord : c.coordinates())
    out.coords.push_back({standard_shadow(coord.low), standard_shadow(coord.thickness)});
  return out;
}

inline std::vector<StdCell> std_part(const DefinableSet& x) {
  std::vector<StdCell> out;
  for (const auto& c : x.cells())
    if (has_std_interior(c)) out.push_back(std_part(c));
  if (out.empty()) throw Error(ErrorCode::NoStdInterior, "set has no standard interior");
  return out;
}

/// Product X x Y: the variables of Y are renumbered after those of X.
inline MonomialCell product(const MonomialCell& a, const MonomialCell& b,
                            std::size_t dimension_cap = kDefaultDimensionCap) {
  std::vector<Coordinate> coords = a.coordinates();
  auto shifted = b.shifted(a.dimension());
  coords.insert(coords.end(), shifted.coordinates().begin(), shifted.coordinates().end());
  if (coords.size() > dimension_cap)
    throw Error(ErrorCode::InvalidArgument, "product dimension exceeds the cap " + std::to_string(dimension_cap));
  return MonomialCell::trusted(std::move(coords));
}

inline DefinableSet product(const DefinableSet& x, const DefinableSet& y,
                            std::size_t dimension_cap = kDefaultDimensionCap) {
  DefinableSet out(x.dimension() + y.dimension());
  for (const auto& a : x.cells())
    for (const auto& b : y.cells()) out.add(product(a, b, dimension_cap));
  return out;
}

/// Splits a constant-bounded Thick coordinate at the given interior points.
inline DefinableSet split_coordinate(const MonomialCell& c, std::size_t k, std::vector<PuiseuxScalar> points) {
  const auto& coord = c[k];
  if (!coord.is_constant() || coord.is_thin())
    throw Error(ErrorCode::UnsupportedImage, "only constant-bounded thick coordinates can be split");
  PuiseuxScalar a = coord.low.constant_value();
  PuiseuxScalar b = coord.high().constant_value();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  DefinableSet out(c.dimension());
  PuiseuxScalar prev = a;
  points.push_back(b);
  for (const auto& p : points) {
    if (p <= prev || p > b) continue;
    auto coords = c.coordinates();
    coords[k] = Coordinate::thick(prev, p - prev);
    out.add(MonomialCell::trusted(std::move(coords)));
    prev = p;
  }
  return out;
}

/// Splits coordinate k into (f, f + r h) and (f + r h, f + h) for 0 < r < 1.
/// Both halves stay in the class because only the thickness is rescaled.
inline DefinableSet split_thickness(const MonomialCell& c, std::size_t k, const Rational& r = Rational(1, 2)) {
  if (!(r > 0 && r < 1)) throw Error(ErrorCode::InvalidArgument, "split ratio must lie in (0,1)");
  const auto& coord = c[k];
  if (coord.is_thin()) throw Error(ErrorCode::InvalidArgument, "cannot split a thin coordinate");
  MonomialFn first = coord.thickness * MonomialFn(PuiseuxScalar(r));
  MonomialFn second = coord.thickness * MonomialFn(PuiseuxScalar(1 - r));
  auto lower = c.coordinates();
  auto upper = c.coordinates();
  lower[k] = Coordinate::thick(coord.low, first);
  upper[k] = Coordinate::thick(coord.low + first, second);
  DefinableSet out(c.dimension());
  out.add(MonomialCell::trusted(std::move(lower)));
  out.add(MonomialCell::trusted(std::move(upper)));
  return out;
}

/// Image of a cell under x -> diag(lambda) x for positive single-term lambda_i.
/// Bounds transform as f'(x') = lambda_k f(x'/lambda); every power of a
/// lambda_i that occurs must be exact, else UnsupportedImage.
inline MonomialCell scale_cell(const MonomialCell& c, const std::vector<PuiseuxScalar>& lambda,
                               Region region = Region::UnitCube) {
  if (lambda.size() != c.dimension()) throw Error(ErrorCode::DimensionMismatch, "scaling vector size");
  std::vector<PuiseuxScalar> inverse;
  for (const auto& l : lambda) {
    if (!l.is_monomial() || l.sign() <= 0)
      throw Error(ErrorCode::UnsupportedImage, "scaling factors must be positive single-term scalars, got " + l.str());
    inverse.push_back(PuiseuxScalar(1).divided_by(l));
  }
  std::vector<Coordinate> coords;
  for (std::size_t k = 0; k < c.dimension(); ++k) {
    MonomialFn factor(lambda[k]);
    coords.push_back({c[k].low.substitute_scaling(inverse) * factor, c[k].thickness.substitute_scaling(inverse) * factor});
  }
  return MonomialCell(std::move(coords), region);
}

/// Image of a cell under x -> x + b. Coordinate k can move only when no other
/// coordinate depends on x_k and the shifted lower bound stays a posynomial.
inline MonomialCell translate_cell(const MonomialCell& c, const std::vector<PuiseuxScalar>& b,
                                   Region region = Region::UnitCube) {
  if (b.size() != c.dimension()) throw Error(ErrorCode::DimensionMismatch, "translation vector size");
  std::vector<Coordinate> coords = c.coordinates();
  for (std::size_t k = 0; k < c.dimension(); ++k) {
    if (b[k].is_zero()) continue;
    for (std::size_t j = k + 1; j < c.dimension(); ++j)
      if (c[j].low.depends_on(k) || c[j].thickness.depends_on(k))
        throw Error(ErrorCode::UnsupportedImage,
                    "translation of x" + std::to_string(k + 1) + " would reparametrize a dependent bound");
    MonomialFn low = c[k].low + MonomialFn(b[k]);
    if (!low.is_posynomial())
      throw Error(ErrorCode::UnsupportedImage, "translated lower bound " + low.str() + " leaves the class");
    coords[k].low = low;
  }
  return MonomialCell(std::move(coords), region);
}

/// Least common multiple of the denominators of all exponents of x_i that
/// appear in the cell's bounds (1 when all are integers).
inline Integer exponent_denominator_lcm(const MonomialCell& c) {
  Integer d = 1;
  for (const auto& coord : c.coordinates())
    for (const auto* f : {&coord.low, &coord.thickness})
      for (const auto& t : f->terms())
        for (const auto& e : t.exponents.raw()) d = lcm(d, denom(e));
  return d;
}

/// Same, also including the exponents of t in coefficients.
inline Integer all_denominator_lcm(const MonomialCell& c) {
  Integer d = exponent_denominator_lcm(c);
  for (const auto& coord : c.coordinates())
    for (const auto* f : {&coord.low, &coord.thickness})
      for (const auto& t : f->terms())
        for (const auto& term : t.coefficient.terms()) d = lcm(d, denom(term.exponent));
  return d;
}

namespace detail {

/// Partition of a constant interval (a, b) into pieces with known valuation
/// ranges, using points t^{j delta} and t^{j delta}/2. Pieces of the form
/// (t^s/2, t^s) have constant valuation s.
struct ValuationPiece {
  PuiseuxScalar lo, hi;
  ExtRational wlo, whi;  // valuation range of points in (lo, hi)
};

inline std::vector<ValuationPiece> valuation_pieces(const PuiseuxScalar& a, const PuiseuxScalar& b,
                                                    const Rational& delta, const Rational& depth) {
  std::vector<PuiseuxScalar> points;
  Rational start = b.is_zero() ? Rational(0) : b.valuation().value();
  Rational first = Rational(ceil(start / delta)) * delta;
  for (Rational s = first; s <= depth; s += delta) {
    for (auto p : {PuiseuxScalar::monomial(1, s), PuiseuxScalar::monomial(Rational(1, 2), s)})
      if (a < p && p < b) points.push_back(p);
    if (!a.is_zero() && PuiseuxScalar::monomial(Rational(1, 2), s) <= a) break;
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points.insert(points.begin(), a);
  points.push_back(b);
  std::vector<ValuationPiece> pieces;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto& lo = points[i];
    const auto& hi = points[i + 1];
    pieces.push_back({lo, hi, hi.valuation(), lo.valuation()});
  }
  return pieces;
}

inline ExtRational trop_upper(const MonomialFn& h, const std::vector<ExtRational>& wlo,
                              const std::vector<ExtRational>& whi) {
  ExtRational best = ExtRational::infinity();
  for (const auto& t : h.terms()) {
    ExtRational value = t.coefficient.valuation();
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      const Rational& e = t.exponents[i];
      if (e > 0) value = value + (whi[i].is_infinite() ? ExtRational::infinity() : ExtRational(e * whi[i].value()));
      else if (e < 0) {
        if (wlo[i].is_infinite()) throw Error(ErrorCode::OutOfRange, "negative power unbounded near zero");
        value = value + ExtRational(e * wlo[i].value());
      }
    }
    best = min(best, value);
  }
  return best;
}

}  // namespace detail

/// Inner approximation of {x in base : v(h_k(x)) <= gamma} as a union of base
/// subcells. The base coordinates h_k depends on must be constant-bounded;
/// they are split at monomial grid points and a piece is kept when the
/// valuation inequality holds at its worst corner.
inline DefinableSet restrict_by_thickness_level(const MonomialCell& c, std::size_t k, const Rational& gamma,
                                                const Rational& delta = Rational(1, 8)) {
  if (delta <= 0) throw Error(ErrorCode::InvalidArgument, "grid step must be positive");
  const auto& coord = c[k];
  if (coord.is_thin()) throw Error(ErrorCode::InvalidArgument, "coordinate is thin");
  MonomialCell base = c.base(k);
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < k; ++i)
    if (coord.thickness.depends_on(i)) {
      if (!base[i].is_constant() || base[i].is_thin())
        throw Error(ErrorCode::UnsupportedImage, "thickness depends on a non-constant base coordinate x" +
                                                     std::to_string(i + 1));
      vars.push_back(i);
    }
  Enclosure enc = base.enclosure();
  std::vector<ExtRational> wlo(k), whi(k);
  for (std::size_t i = 0; i < k; ++i) {
    wlo[i] = enc.hi[i].valuation();
    whi[i] = enc.lo[i].valuation();
  }
  Rational depth = abs(gamma) + 4;
  for (std::size_t i = 0; i < k; ++i)
    if (!enc.hi[i].is_zero()) depth = std::max(depth, enc.hi[i].valuation().value() + abs(gamma) + 4);
  std::vector<std::vector<detail::ValuationPiece>> pieces;
  for (auto i : vars)
    pieces.push_back(detail::valuation_pieces(base[i].low.constant_value(), base[i].high().constant_value(), delta,
                                              depth));
  DefinableSet out(k);
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    auto lo = wlo, hi = whi;
    auto coords = base.coordinates();
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const auto& p = pieces[j][idx[j]];
      lo[vars[j]] = p.wlo;
      hi[vars[j]] = p.whi;
      coords[vars[j]] = Coordinate::thick(p.lo, p.hi - p.lo);
    }
    if (detail::trop_upper(coord.thickness, lo, hi) <= ExtRational(gamma))
      out.add(MonomialCell::trusted(std::move(coords)));
    std::size_t j = 0;
    while (j < vars.size() && ++idx[j] == pieces[j].size()) idx[j++] = 0;
    if (j == vars.size()) break;
  }
  return out;
}

}  // namespace omeasure

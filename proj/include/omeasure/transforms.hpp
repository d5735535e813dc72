#pragma once

#include <string>
#include <variant>
#include <vector>

#include "measure.hpp"

namespace omeasure {

/// x -> diag(lambda) x + b.
struct AffineMap {
  std::vector<PuiseuxScalar> diagonal;
  std::vector<PuiseuxScalar> translation;

  static AffineMap diag(std::vector<PuiseuxScalar> lambda) {
    std::vector<PuiseuxScalar> b(lambda.size());
    return {std::move(lambda), std::move(b)};
  }
  static AffineMap translate(std::vector<PuiseuxScalar> b) {
    std::vector<PuiseuxScalar> one(b.size(), PuiseuxScalar(1));
    return {std::move(one), std::move(b)};
  }

  PuiseuxScalar determinant() const {
    PuiseuxScalar det(1);
    for (const auto& l : diagonal) det *= l;
    return det;
  }
};

/// x_k -> x_k + f(x_1..x_{k-1}); the inverse subtracts f. Unit Jacobian.
struct ShearMap {
  std::size_t coordinate;  // 0-based
  MonomialFn addend;
  bool inverse = false;
};

/// Exchange of two coordinates (only on boxes).
struct SwapMap {
  std::size_t i, j;  // 0-based
};

using MapStep = std::variant<AffineMap, ShearMap, SwapMap>;

struct IsoPipeline {
  std::vector<MapStep> steps;

  /// Product of the step determinants (shears and translations contribute 1, swaps -1).
  PuiseuxScalar determinant() const {
    PuiseuxScalar det(1);
    for (const auto& s : steps) {
      if (const auto* a = std::get_if<AffineMap>(&s)) det *= a->determinant();
      else if (std::holds_alternative<SwapMap>(s)) det = -det;
    }
    return det;
  }
  bool is_unit() const {
    PuiseuxScalar d = determinant();
    return d == PuiseuxScalar(1) || d == PuiseuxScalar(-1);
  }
};

inline MonomialCell apply(const MapStep& step, const MonomialCell& c) {
  const std::size_t n = c.dimension();
  if (const auto* a = std::get_if<AffineMap>(&step)) {
    if (a->diagonal.size() != n || a->translation.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "affine map dimension differs from the set");
    for (const auto& l : a->diagonal)
      if (l.sign() <= 0) throw Error(ErrorCode::UnsupportedImage, "reflections leave the non-negative orthant");
    MonomialCell scaled = scale_cell(c, a->diagonal, Region::Orthant);
    return translate_cell(scaled, a->translation, Region::Orthant);
  }
  if (const auto* s = std::get_if<ShearMap>(&step)) {
    const std::size_t k = s->coordinate;
    if (k >= n) throw Error(ErrorCode::DimensionMismatch, "shear coordinate out of range");
    if (s->addend.arity() > k)
      throw Error(ErrorCode::InvalidArgument, "shear addend may only use earlier coordinates");
    for (std::size_t j = k + 1; j < n; ++j)
      if (c[j].low.depends_on(k) || c[j].thickness.depends_on(k))
        throw Error(ErrorCode::UnsupportedImage,
                    "shear of x" + std::to_string(k + 1) + " would reparametrize a dependent bound");
    auto coords = c.coordinates();
    coords[k].low = s->inverse ? coords[k].low - s->addend : coords[k].low + s->addend;
    if (!coords[k].low.is_posynomial())
      throw Error(ErrorCode::UnsupportedImage, "sheared lower bound " + coords[k].low.str() + " leaves the class");
    return MonomialCell(std::move(coords), Region::Orthant);
  }
  const auto& w = std::get<SwapMap>(step);
  if (w.i >= n || w.j >= n) throw Error(ErrorCode::DimensionMismatch, "swap coordinate out of range");
  if (!c.is_box()) throw Error(ErrorCode::UnsupportedImage, "transpositions act on boxes only");
  auto coords = c.coordinates();
  std::swap(coords[w.i], coords[w.j]);
  return MonomialCell(std::move(coords), Region::Orthant);
}

inline DefinableSet apply(const IsoPipeline& map, const DefinableSet& x) {
  DefinableSet out(x.dimension());
  for (const auto& c : x.cells()) {
    MonomialCell image = c;
    for (const auto& step : map.steps) image = omeasure::apply(step, image);
    out.add(std::move(image));
  }
  return out;
}

struct InvarianceReport {
  MeasureValue before;   // mu(X), or cls(|det|) * mu(X) for scaling checks
  MeasureValue after;    // mu(phi X)
  Tri equal = Tri::Indistinguishable;
  bool unit = true;
  PuiseuxScalar determinant;
  DefinableSet image;
};

/// Equality of two values, Indistinguishable when certified intervals overlap.
inline Tri values_equal(const MeasureValue& a, const MeasureValue& b) {
  if (a == b) return Tri::True;
  if (a.is_std() && b.is_std()) return a.size().overlaps(b.size()) ? Tri::Indistinguishable : Tri::False;
  return Tri::False;
}

/// Compares mu(X) with mu(phi X). Unit-Jacobian maps must preserve the
/// measure; a non-unit map must be diagonal with a standard determinant, and
/// then mu(phi X) = cls(|det|) mu(X) is checked instead.
inline InvarianceReport check_invariance(const IsoPipeline& map, const DefinableSet& x,
                                         const EngineConfig& config = {}) {
  InvarianceReport report;
  report.determinant = map.determinant();
  report.unit = map.is_unit();
  if (!report.unit) {
    PuiseuxScalar det = report.determinant.sign() < 0 ? -report.determinant : report.determinant;
    if (det.valuation() != ExtRational(0))
      throw Error(ErrorCode::InvalidArgument,
                  "non-unit maps are checked only with a standard determinant, got " + report.determinant.str());
    report.image = apply(map, x);
    report.before = cls(det) * measure_sb(x, config);
  } else {
    report.image = apply(map, x);
    report.before = measure_sb(x, config);
  }
  report.after = measure_sb(report.image, config);
  report.equal = values_equal(report.before, report.after);
  return report;
}

}  // namespace omeasure

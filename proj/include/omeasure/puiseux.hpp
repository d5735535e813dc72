#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "interval.hpp"
#include "rational.hpp"

namespace omeasure {

/// A finite Puiseux polynomial  sum_i c_i t^{e_i}  with rational exponents and
/// coefficients, ordered by t being a positive infinitesimal.
///
/// Terms are kept in canonical form (exponents strictly increasing, no zero
/// coefficients), so equality is term-list equality.
class PuiseuxScalar {
 public:
  struct Term {
    Rational exponent;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PuiseuxScalar() = default;
  PuiseuxScalar(Rational c) {  // NOLINT
    if (c != 0) terms_.push_back({Rational(0), std::move(c)});
  }
  PuiseuxScalar(long long c) : PuiseuxScalar(Rational(c)) {}  // NOLINT

  /// c * t^e
  static PuiseuxScalar monomial(Rational c, Rational e) {
    PuiseuxScalar x;
    if (c != 0) x.terms_.push_back({std::move(e), std::move(c)});
    return x;
  }
  static PuiseuxScalar t() { return monomial(1, 1); }

  /// Builds a scalar from arbitrary (exponent, coefficient) pairs, collecting like terms.
  static PuiseuxScalar from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    PuiseuxScalar x;
    for (auto& term : terms) {
      if (!x.terms_.empty() && x.terms_.back().exponent == term.exponent) {
        x.terms_.back().coefficient += term.coefficient;
        if (x.terms_.back().coefficient == 0) x.terms_.pop_back();
      } else if (term.coefficient != 0) {
        x.terms_.push_back(std::move(term));
      }
    }
    return x;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0); }

  /// Least exponent; +infinity for zero.
  ExtRational valuation() const {
    if (terms_.empty()) return ExtRational::infinity();
    return terms_.front().exponent;
  }

  /// Coefficient of the lowest-order term (0 for zero).
  Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.front().coefficient; }

  int sign() const {
    if (terms_.empty()) return 0;
    return terms_.front().coefficient > 0 ? 1 : -1;
  }

  /// Coefficient at t^0; requires v(x) >= 0.
  Rational standard_part() const {
    if (!terms_.empty() && terms_.front().exponent < 0)
      throw Error(ErrorCode::NotFinite, "standard part of an infinite element " + str());
    return coefficient_at(0);
  }

  Rational coefficient_at(const Rational& e) const {
    for (const auto& term : terms_)
      if (term.exponent == e) return term.coefficient;
    return 0;
  }

  /// The rational value when the scalar has no t-dependence.
  Rational as_rational() const {
    if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "scalar " + str() + " is not rational");
    return terms_.empty() ? Rational(0) : terms_[0].coefficient;
  }

  friend PuiseuxScalar operator+(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    PuiseuxScalar out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exponent < b.terms_[j].exponent)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exponent < a.terms_[i].exponent) {
        out.terms_.push_back(b.terms_[j++]);
      } else {
        Rational c = a.terms_[i].coefficient + b.terms_[j].coefficient;
        if (c != 0) out.terms_.push_back({a.terms_[i].exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend PuiseuxScalar operator-(const PuiseuxScalar& a) {
    PuiseuxScalar out = a;
    for (auto& term : out.terms_) term.coefficient = -term.coefficient;
    return out;
  }

  friend PuiseuxScalar operator-(const PuiseuxScalar& a, const PuiseuxScalar& b) { return a + (-b); }

  friend PuiseuxScalar operator*(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) products.push_back({x.exponent + y.exponent, x.coefficient * y.coefficient});
    return from_terms(std::move(products));
  }

  PuiseuxScalar& operator+=(const PuiseuxScalar& o) { return *this = *this + o; }
  PuiseuxScalar& operator-=(const PuiseuxScalar& o) { return *this = *this - o; }
  PuiseuxScalar& operator*=(const PuiseuxScalar& o) { return *this = *this * o; }

  /// Exact division by a single-term divisor.
  PuiseuxScalar divided_by(const PuiseuxScalar& divisor) const {
    if (!divisor.is_monomial())
      throw Error(ErrorCode::NotMonomial, "division requires a single-term divisor, got " + divisor.str());
    const auto& d = divisor.terms_[0];
    PuiseuxScalar out = *this;
    for (auto& term : out.terms_) {
      term.exponent -= d.exponent;
      term.coefficient /= d.coefficient;
    }
    return out;
  }

  PuiseuxScalar pow(unsigned n) const {
    PuiseuxScalar result(1);
    PuiseuxScalar base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      base *= base;
      n >>= 1;
    }
    return result;
  }

  friend bool operator==(const PuiseuxScalar&, const PuiseuxScalar&) = default;

  friend std::strong_ordering operator<=>(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// DSL rendering, e.g. "3/2*t^(1/2) + t^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : terms_) {
      Rational c = term.coefficient;
      if (first) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      if (term.exponent == 0) {
        out += to_string(c);
        continue;
      }
      if (c != 1) out += to_string(c) + "*";
      out += "t";
      if (term.exponent != 1) {
        if (is_integer(term.exponent) && term.exponent > 0)
          out += "^" + to_string(term.exponent);
        else
          out += "^(" + to_string(term.exponent) + ")";
      }
    }
    return out;
  }

 private:
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const PuiseuxScalar& x) { return os << x.str(); }

using Valuation = ExtRational;

inline Valuation valuation(const PuiseuxScalar& x) { return x.valuation(); }
inline Rational standard_part(const PuiseuxScalar& x) { return x.standard_part(); }

/// Result of raising a positive single-term scalar c t^g to a rational power q:
/// c^q t^{qg}, with c^q carried as a certified interval when irrational.
struct MonomialPower {
  Interval coefficient;
  Rational exponent;

  bool is_exact() const { return coefficient.is_exact(); }
  PuiseuxScalar exact() const {
    if (!is_exact()) throw Error(ErrorCode::InvalidArgument, "monomial power is not exact");
    return PuiseuxScalar::monomial(coefficient.lo, exponent);
  }
  PuiseuxScalar lower() const { return PuiseuxScalar::monomial(coefficient.lo, exponent); }
  PuiseuxScalar upper() const { return PuiseuxScalar::monomial(coefficient.hi, exponent); }
};

inline MonomialPower monomial_power(const PuiseuxScalar& x, const Rational& q, unsigned bits = 64) {
  if (!x.is_monomial() || x.leading_coefficient() <= 0)
    throw Error(ErrorCode::NotMonomial, "rational power needs a positive single-term scalar, got " + x.str());
  const auto& term = x.terms().front();
  return {power_enclosure(term.coefficient, q, bits), term.exponent * q};
}

/// Single-term scalars L <= x^r <= U for x >= 0 (x^0 = 1 even for x = 0).
/// Exact for non-negative integer r and for monomials with a rational root.
inline std::pair<PuiseuxScalar, PuiseuxScalar> power_bounds(const PuiseuxScalar& x, const Rational& r) {
  if (x.sign() < 0) throw Error(ErrorCode::OutOfDomain, "power of a negative scalar");
  if (r == 0) return {PuiseuxScalar(1), PuiseuxScalar(1)};
  if (x.is_zero()) {
    if (r < 0) throw Error(ErrorCode::OutOfDomain, "negative power of zero");
    return {PuiseuxScalar(), PuiseuxScalar()};
  }
  if (is_integer(r) && r > 0) {
    PuiseuxScalar p = x.pow(static_cast<unsigned>(to_small_int(numer(r), "power")));
    return {p, p};
  }
  if (x.is_monomial()) {
    auto mp = monomial_power(x, r);
    return {mp.lower(), mp.upper()};
  }
  // x = c t^g (1 + infinitesimal): bracket the unit factor by (1 -+ 1/1024).
  Rational c = x.leading_coefficient();
  Rational g = x.valuation().value();
  Interval unit(c * Rational(1023, 1024), c * Rational(1025, 1024));
  Interval enc = power_enclosure(unit, r);
  return {PuiseuxScalar::monomial(enc.lo, g * r), PuiseuxScalar::monomial(enc.hi, g * r)};
}

}  // namespace omeasure

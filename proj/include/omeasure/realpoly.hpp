#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "interval.hpp"
#include "posynomial.hpp"

namespace omeasure {

/// Real-shadow polynomial: sum_j a_j prod_i x_i^{e_ji} with certified
/// rational-interval coefficients a_j and rational exponents.
class RealPoly {
 public:
  struct Term {
    Interval coefficient;
    Exponents exponents;
    friend bool operator==(const Term&, const Term&) = default;
  };

  RealPoly() = default;
  RealPoly(Interval c) {  // NOLINT
    if (!(c.is_exact() && c.lo == 0)) terms_.push_back({std::move(c), Exponents()});
  }
  RealPoly(long long c) : RealPoly(Interval(c)) {}  // NOLINT

  static RealPoly term(Interval c, Exponents e) {
    RealPoly p;
    if (!(c.is_exact() && c.lo == 0)) p.terms_.push_back({std::move(c), std::move(e)});
    return p;
  }
  static RealPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
    RealPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents)
        p.terms_.back().coefficient += t.coefficient;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coefficient.is_exact() && p.terms_.back().coefficient.lo == 0) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents.is_zero()); }
  Interval constant_value() const {
    if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "real polynomial is not constant");
    return terms_.empty() ? Interval(0) : terms_[0].coefficient;
  }

  friend RealPoly operator+(const RealPoly& a, const RealPoly& b) {
    std::vector<Term> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(std::move(t));
  }
  friend RealPoly operator-(const RealPoly& a) {
    RealPoly out = a;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
  }
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b) { return a + (-b); }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    std::vector<Term> t;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) t.push_back({x.coefficient * y.coefficient, x.exponents + y.exponents});
    return from_terms(std::move(t));
  }

  RealPoly pow(unsigned n) const {
    RealPoly result(1);
    RealPoly base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      base = base * base;
      n >>= 1;
    }
    return result;
  }

  friend bool operator==(const RealPoly&, const RealPoly&) = default;

  /// Interval enclosure over the box x_i in [lo_i, hi_i] (lo_i >= 0).
  Interval enclose(const std::vector<Interval>& box, unsigned bits = 48) const {
    Interval total(0);
    for (const auto& t : terms_) {
      Interval term = t.coefficient;
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        const Rational& e = t.exponents[i];
        if (e == 0) continue;
        const Interval& x = box.at(i);
        if (x.lo <= 0) {
          if (e < 0) throw Error(ErrorCode::OutOfRange, "negative power near zero");
          Interval hi = x.hi > 0 ? power_enclosure(x.hi, e, bits) : Interval(0);
          term *= Interval(0, hi.hi);
        } else {
          term *= power_enclosure(x, e, bits);
        }
      }
      total += term;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k) out += " + ";
      out += terms_[k].coefficient.str();
      for (std::size_t i = 0; i < terms_[k].exponents.size(); ++i)
        if (terms_[k].exponents[i] != 0)
          out += "*x" + std::to_string(i + 1) + "^(" + to_string(terms_[k].exponents[i]) + ")";
    }
    return out;
  }

 private:
  std::vector<Term> terms_;
};

/// Coefficientwise standard part of a posynomial: v > 0 terms vanish,
/// v = 0 terms keep their standard coefficient.
inline RealPoly standard_shadow(const MonomialFn& f) {
  std::vector<RealPoly::Term> terms;
  for (const auto& t : f.terms()) {
    Rational v = t.coefficient.valuation().value();
    if (v < 0) throw Error(ErrorCode::NotFinite, "coefficient " + t.coefficient.str() + " is infinite");
    if (v > 0) continue;
    terms.push_back({Interval(t.coefficient.standard_part()), t.exponents});
  }
  return RealPoly::from_terms(std::move(terms));
}

}  // namespace omeasure

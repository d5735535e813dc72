#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "puiseux.hpp"

namespace omeasure {

/// Exponent vector over x1..xk; trailing zeros are trimmed so that
/// exponent vectors compare equal independently of the ambient arity.
class Exponents {
 public:
  Exponents() = default;
  explicit Exponents(std::vector<Rational> e) : e_(std::move(e)) { trim(); }

  static Exponents unit(std::size_t var, Rational power = 1) {
    std::vector<Rational> e(var + 1, Rational(0));
    e[var] = std::move(power);
    return Exponents(std::move(e));
  }

  /// Exponent of variable i (0-based).
  Rational operator[](std::size_t i) const { return i < e_.size() ? e_[i] : Rational(0); }
  std::size_t size() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }
  const std::vector<Rational>& raw() const { return e_; }

  friend Exponents operator+(const Exponents& a, const Exponents& b) {
    std::vector<Rational> e(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
    return Exponents(std::move(e));
  }
  Exponents scaled(const Rational& r) const {
    std::vector<Rational> e = e_;
    for (auto& x : e) x *= r;
    return Exponents(std::move(e));
  }
  Exponents shifted(std::size_t offset) const {
    std::vector<Rational> e(offset, Rational(0));
    e.insert(e.end(), e_.begin(), e_.end());
    return Exponents(std::move(e));
  }
  Exponents with(std::size_t i, Rational value) const {
    std::vector<Rational> e = e_;
    if (e.size() <= i) e.resize(i + 1, Rational(0));
    e[i] = std::move(value);
    return Exponents(std::move(e));
  }

  friend bool operator==(const Exponents&, const Exponents&) = default;
  friend bool operator<(const Exponents& a, const Exponents& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  std::vector<Rational> e_;
};

/// Closed enclosure of a tropical quantity over a box of valuations.
struct TropRange {
  ExtRational lo;
  ExtRational hi;
};

/// Generalized polynomial  sum_j c_j prod_i x_i^{e_ji}  with Puiseux
/// coefficients and rational exponents. Cell bounds use the posynomial
/// subclass: every coefficient strictly positive.
///
/// On the positive orthant a posynomial never cancels, so
///   v(p(x)) = min_j ( v(c_j) + sum_i e_ji v(x_i) ).
class MonomialFn {
 public:
  struct Term {
    PuiseuxScalar coefficient;
    Exponents exponents;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MonomialFn() = default;
  MonomialFn(PuiseuxScalar c) {  // NOLINT
    if (!c.is_zero()) terms_.push_back({std::move(c), Exponents()});
  }
  MonomialFn(long long c) : MonomialFn(PuiseuxScalar(c)) {}  // NOLINT
  MonomialFn(const Rational& c) : MonomialFn(PuiseuxScalar(c)) {}  // NOLINT

  static MonomialFn variable(std::size_t i) { return term(PuiseuxScalar(1), Exponents::unit(i)); }
  static MonomialFn term(PuiseuxScalar c, Exponents e) {
    MonomialFn f;
    if (!c.is_zero()) f.terms_.push_back({std::move(c), std::move(e)});
    return f;
  }
  static MonomialFn from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
    MonomialFn f;
    for (auto& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().exponents == t.exponents) {
        f.terms_.back().coefficient += t.coefficient;
        if (f.terms_.back().coefficient.is_zero()) f.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        f.terms_.push_back(std::move(t));
      }
    }
    return f;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents.is_zero()); }
  PuiseuxScalar constant_value() const {
    if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "function is not constant: " + str());
    return terms_.empty() ? PuiseuxScalar() : terms_[0].coefficient;
  }

  /// All coefficients strictly positive.
  bool is_posynomial() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coefficient.sign() > 0; });
  }

  /// Number of leading variables the function may depend on (1 + highest used index).
  std::size_t arity() const {
    std::size_t n = 0;
    for (const auto& t : terms_) n = std::max(n, t.exponents.size());
    return n;
  }
  bool depends_on(std::size_t i) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exponents[i] != 0; });
  }

  friend MonomialFn operator+(const MonomialFn& a, const MonomialFn& b) {
    std::vector<Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(std::move(terms));
  }
  friend MonomialFn operator-(const MonomialFn& a) {
    MonomialFn out = a;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
  }
  friend MonomialFn operator-(const MonomialFn& a, const MonomialFn& b) { return a + (-b); }
  friend MonomialFn operator*(const MonomialFn& a, const MonomialFn& b) {
    std::vector<Term> terms;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) terms.push_back({x.coefficient * y.coefficient, x.exponents + y.exponents});
    return from_terms(std::move(terms));
  }

  /// Termwise division by a single-term monomial  c x^e.
  MonomialFn divided_by_term(const Term& d) const {
    std::vector<Term> terms;
    for (const auto& t : terms_)
      terms.push_back({t.coefficient.divided_by(d.coefficient), t.exponents + d.exponents.scaled(-1)});
    return from_terms(std::move(terms));
  }

  /// Renumber variables x_i -> x_{i+offset}.
  MonomialFn shifted(std::size_t offset) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) terms.push_back({t.coefficient, t.exponents.shifted(offset)});
    return from_terms(std::move(terms));
  }

  /// Substitute x_i -> x_i * factor_i for single-term factors; the factor
  /// powers must be exact (rational coefficient roots).
  MonomialFn substitute_scaling(const std::vector<PuiseuxScalar>& factors) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
      PuiseuxScalar c = t.coefficient;
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] == 0) continue;
        if (i >= factors.size()) throw Error(ErrorCode::DimensionMismatch, "scaling factor missing");
        auto p = monomial_power(factors[i], t.exponents[i]);
        if (!p.is_exact())
          throw Error(ErrorCode::UnsupportedImage,
                      "scaling leaves rational coefficients: " + factors[i].str() + "^" + to_string(t.exponents[i]));
        c *= p.exact();
      }
      terms.push_back({c, t.exponents});
    }
    return from_terms(std::move(terms));
  }

  /// Tropical evaluation at a valuation vector w (finite entries).
  ExtRational trop(const std::vector<Rational>& w) const {
    ExtRational best = ExtRational::infinity();
    for (const auto& t : terms_) {
      Rational value = t.coefficient.valuation().value();
      for (std::size_t i = 0; i < t.exponents.size(); ++i)
        if (t.exponents[i] != 0) value += t.exponents[i] * w.at(i);
      best = min(best, ExtRational(value));
    }
    return best;
  }

  /// Enclosure of trop over the box w_i in [lo_i, hi_i].
  TropRange trop_range(const std::vector<Rational>& lo, const std::vector<Rational>& hi) const {
    TropRange r{ExtRational::infinity(), ExtRational::infinity()};
    for (const auto& t : terms_) {
      Rational a = t.coefficient.valuation().value();
      Rational b = a;
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        const Rational& e = t.exponents[i];
        if (e > 0) {
          a += e * lo.at(i);
          b += e * hi.at(i);
        } else if (e < 0) {
          a += e * hi.at(i);
          b += e * lo.at(i);
        }
      }
      r.lo = min(r.lo, ExtRational(a));
      r.hi = min(r.hi, ExtRational(b));
    }
    return r;
  }

  /// Upper (resp. lower) bound over the box x_i in [lo_i, hi_i], lo_i >= 0.
  /// Monomials are monotone in each variable, so each term is bounded at a corner.
  PuiseuxScalar upper_bound(const std::vector<PuiseuxScalar>& lo, const std::vector<PuiseuxScalar>& hi) const {
    return bound(lo, hi, true);
  }
  PuiseuxScalar lower_bound(const std::vector<PuiseuxScalar>& lo, const std::vector<PuiseuxScalar>& hi) const {
    return bound(lo, hi, false);
  }

  friend bool operator==(const MonomialFn&, const MonomialFn&) = default;

  /// DSL rendering: "2*x1^(1/2)*x2 + t^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      PuiseuxScalar c = t.coefficient;
      bool negative = c.is_monomial() && c.leading_coefficient() < 0;
      if (negative) c = -c;
      if (k > 0) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      std::string vars;
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        const Rational& e = t.exponents[i];
        if (e == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += "x" + std::to_string(i + 1);
        if (e != 1) vars += (is_integer(e) && e > 0) ? "^" + to_string(e) : "^(" + to_string(e) + ")";
      }
      std::string coeff = c.is_monomial() ? c.str() : "(" + c.str() + ")";
      if (vars.empty()) out += coeff;
      else if (c == PuiseuxScalar(1)) out += vars;
      else out += coeff + "*" + vars;
    }
    return out;
  }

 private:
  PuiseuxScalar bound(const std::vector<PuiseuxScalar>& lo, const std::vector<PuiseuxScalar>& hi, bool upper) const {
    PuiseuxScalar total;
    for (const auto& t : terms_) {
      if (t.coefficient.sign() < 0) throw Error(ErrorCode::ClassViolation, "bounds need a posynomial: " + str());
      PuiseuxScalar term = t.coefficient;
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        const Rational& e = t.exponents[i];
        if (e == 0) continue;
        const PuiseuxScalar& corner = ((e > 0) == upper) ? hi.at(i) : lo.at(i);
        if (corner.is_zero() && e < 0) {
          if (upper) throw Error(ErrorCode::OutOfRange, "negative power unbounded near zero in " + str());
          term = PuiseuxScalar();
          break;
        }
        auto [l, u] = power_bounds(corner, e);
        term *= upper ? u : l;
      }
      total += term;
    }
    return total;
  }

  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MonomialFn& f) { return os << f.str(); }

}  // namespace omeasure

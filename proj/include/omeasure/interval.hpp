#pragma once

#include <algorithm>
#include <ostream>
#include <string>

#include "rational.hpp"

namespace omeasure {

/// Closed rational interval [lo, hi]. Degenerate intervals represent exact values.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational v) : lo(v), hi(v) {}  // NOLINT
  Interval(long long v) : lo(v), hi(v) {}  // NOLINT
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
  }

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    if (a.is_exact() && b.is_exact()) return Interval(a.lo * b.lo);
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  std::string str() const {
    if (is_exact()) return to_string(lo);
    return "[" + to_string(lo) + ", " + to_string(hi) + "]";
  }
};

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.str(); }

/// Certified enclosure of a^r for rational a > 0 and rational r, with width
/// at most a * 2^-bits (roughly). Exact when a^r is rational.
inline Interval power_enclosure(const Rational& a, const Rational& r, unsigned bits = 64) {
  if (a <= 0) throw Error(ErrorCode::InvalidArgument, "power_enclosure of non-positive base");
  const long long p = to_small_int(numer(r), "exponent numerator");
  const unsigned long q = static_cast<unsigned long>(to_small_int(denom(r), "exponent denominator"));
  Rational b = ipow(a, p);
  if (q == 1) return Interval(b);
  Integer n = numer(b);
  Integer d = denom(b);
  Integer rn = iroot(n, q);
  Integer rd = iroot(d, q);
  if (ipow(rn, q) == n && ipow(rd, q) == d) return Interval(Rational(rn, rd));
  // (n/d)^(1/q) = (n d^(q-1))^(1/q) / d
  Integer scale = Integer(1) << bits;
  Integer x = n * ipow(d, q - 1) * ipow(scale, q);
  Integer lo = iroot(x, q);
  Rational den = Rational(d) * Rational(scale);
  return {Rational(lo) / den, Rational(lo + 1) / den};
}

/// Enclosure of [lo, hi]^r for 0 < lo.
inline Interval power_enclosure(const Interval& a, const Rational& r, unsigned bits = 64) {
  if (a.is_exact()) return power_enclosure(a.lo, r, bits);
  Interval x = power_enclosure(a.lo, r, bits);
  Interval y = power_enclosure(a.hi, r, bits);
  return hull(x, y);
}

}  // namespace omeasure

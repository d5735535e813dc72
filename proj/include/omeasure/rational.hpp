#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace omeasure {

// Expression templates are disabled so that arithmetic results are plain
// values (they interact badly with std::min/max and auto).
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor(const Rational& q) { return floor_div(numer(q), denom(q)); }
inline Integer ceil(const Rational& q) { return -floor_div(-numer(q), denom(q)); }

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

/// Exact "p/q" rendering; integers print without a denominator.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed input or q = 0.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<Integer> {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;
    Integer v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return neg ? Integer(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

inline Rational ipow(const Rational& base, long long exponent) {
  if (exponent < 0) return Rational(1) / ipow(base, -exponent);
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

inline Integer ipow(const Integer& base, unsigned long exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

/// floor(x^(1/k)) for x >= 0.
inline Integer iroot(const Integer& x, unsigned long k) {
  if (x < 2 || k == 1) return x;
  // Initial guess from the bit length, then Newton from above.
  std::size_t bits = boost::multiprecision::msb(x) + 1;
  Integer r = Integer(1) << ((bits + k - 1) / k);
  while (true) {
    Integer next = ((k - 1) * r + x / ipow(r, k - 1)) / k;
    if (next >= r) break;
    r = next;
  }
  while (ipow(r, k) > x) --r;
  while (ipow(r + 1, k) <= x) ++r;
  return r;
}

inline long long to_small_int(const Integer& v, const char* what) {
  if (v > Integer(std::numeric_limits<int>::max()) || v < Integer(-std::numeric_limits<int>::max()))
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " too large");
  return v.convert_to<long long>();
}

/// Rational extended by +infinity; ordered, with min and + as the tropical operations.
class ExtRational {
 public:
  ExtRational() : infinite_(true) {}
  ExtRational(Rational value) : infinite_(false), value_(std::move(value)) {}  // NOLINT
  ExtRational(long long value) : infinite_(false), value_(value) {}          // NOLINT

  static ExtRational infinity() { return ExtRational(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  const Rational& value() const {
    if (infinite_) throw Error(ErrorCode::InvalidArgument, "value() of +infinity");
    return value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRational(a.value_ + b.value_);
  }

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

 private:
  bool infinite_;
  Rational value_;
};

inline ExtRational min(const ExtRational& a, const ExtRational& b) { return a <= b ? a : b; }
inline ExtRational max(const ExtRational& a, const ExtRational& b) { return a >= b ? a : b; }

inline std::ostream& operator<<(std::ostream& os, const ExtRational& e) { return os << e.str(); }

}  // namespace omeasure

#pragma once

#include <ostream>
#include <string>

#include "interval.hpp"
#include "puiseux.hpp"

namespace omeasure {

/// Three-valued comparison outcome. Indistinguishable arises only when two
/// non-degenerate standard sizes overlap; callers may refine and retry.
enum class Tri { False, True, Indistinguishable };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Indistinguishable: return "indistinguishable";
  }
  return "?";
}

/// An element of the cut semiring over V>=0 in closed form:
///   Zero  <  Inf(level)  <  Std(size)
/// Inf(g) is the class of positive infinitesimals of valuation g (deeper
/// level = smaller value); Std(r) is the class of finite elements with
/// standard part r. Std sizes are certified rational intervals.
class MeasureValue {
 public:
  enum class Kind { Zero, Inf, Std };

  MeasureValue() = default;

  static MeasureValue zero() { return {}; }
  static MeasureValue inf(Rational level) {
    if (level < 0) throw Error(ErrorCode::OutOfDomain, "negative infinitesimal level");
    MeasureValue v;
    v.kind_ = Kind::Inf;
    v.level_ = std::move(level);
    return v;
  }
  static MeasureValue inf(int level) { return inf(Rational(level)); }
  /// Inf(+infinity) normalizes to Zero.
  static MeasureValue inf(const ExtRational& level) {
    return level.is_infinite() ? zero() : inf(level.value());
  }
  static MeasureValue std_size(Interval size) {
    if (size.lo <= 0) throw Error(ErrorCode::OutOfDomain, "standard size must be positive");
    MeasureValue v;
    v.kind_ = Kind::Std;
    v.size_ = std::move(size);
    return v;
  }
  static MeasureValue std_size(Rational size) { return std_size(Interval(std::move(size))); }
  static MeasureValue one() { return std_size(Rational(1)); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_inf() const { return kind_ == Kind::Inf; }
  bool is_std() const { return kind_ == Kind::Std; }

  const Rational& level() const {
    if (kind_ != Kind::Inf) throw Error(ErrorCode::InvalidArgument, "level() of a non-infinitesimal value");
    return level_;
  }
  const Interval& size() const {
    if (kind_ != Kind::Std) throw Error(ErrorCode::InvalidArgument, "size() of a non-standard value");
    return size_;
  }

  friend bool operator==(const MeasureValue& a, const MeasureValue& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::Zero: return true;
      case Kind::Inf: return a.level_ == b.level_;
      case Kind::Std: return a.size_ == b.size_;
    }
    return false;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::Zero: return "Zero";
      case Kind::Inf: return "Inf(" + to_string(level_) + ")";
      case Kind::Std: return "Std(" + size_.str() + ")";
    }
    return "?";
  }

 private:
  Kind kind_ = Kind::Zero;
  Rational level_;
  Interval size_;
};

inline std::ostream& operator<<(std::ostream& os, const MeasureValue& v) { return os << v.str(); }

/// The class map x -> x~ on V>=0.
inline MeasureValue cls(const PuiseuxScalar& x) {
  if (x.sign() < 0) throw Error(ErrorCode::OutOfDomain, "cls of a negative scalar " + x.str());
  if (x.is_zero()) return MeasureValue::zero();
  Rational v = x.valuation().value();
  if (v < 0) throw Error(ErrorCode::OutOfDomain, "cls of an infinite scalar " + x.str());
  if (v > 0) return MeasureValue::inf(v);
  return MeasureValue::std_size(x.leading_coefficient());
}

inline MeasureValue v_add(const MeasureValue& a, const MeasureValue& b) {
  using K = MeasureValue::Kind;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.kind() == K::Std && b.kind() == K::Std) return MeasureValue::std_size(a.size() + b.size());
  if (a.kind() == K::Std) return a;
  if (b.kind() == K::Std) return b;
  return MeasureValue::inf(std::min(a.level(), b.level()));
}

inline MeasureValue v_mul(const MeasureValue& a, const MeasureValue& b) {
  using K = MeasureValue::Kind;
  if (a.is_zero() || b.is_zero()) return MeasureValue::zero();
  if (a.kind() == K::Std && b.kind() == K::Std) return MeasureValue::std_size(a.size() * b.size());
  if (a.kind() == K::Std) return b;
  if (b.kind() == K::Std) return a;
  return MeasureValue::inf(a.level() + b.level());
}

inline MeasureValue operator+(const MeasureValue& a, const MeasureValue& b) { return v_add(a, b); }
inline MeasureValue operator*(const MeasureValue& a, const MeasureValue& b) { return v_mul(a, b); }

inline Tri v_leq(const MeasureValue& a, const MeasureValue& b) {
  using K = MeasureValue::Kind;
  auto rank = [](K k) { return k == K::Zero ? 0 : (k == K::Inf ? 1 : 2); };
  if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? Tri::True : Tri::False;
  switch (a.kind()) {
    case K::Zero: return Tri::True;
    case K::Inf: return a.level() >= b.level() ? Tri::True : Tri::False;
    case K::Std: {
      const auto& x = a.size();
      const auto& y = b.size();
      if (x.hi <= y.lo) return Tri::True;
      if (x.lo > y.hi) return Tri::False;
      if (x.is_exact() && y.is_exact()) return x.lo <= y.lo ? Tri::True : Tri::False;
      return Tri::Indistinguishable;
    }
  }
  return Tri::Indistinguishable;
}

/// Element of the tropical semiring (Q u {+inf}, min, +): addition is min,
/// multiplication is +, +inf is zero, 0 is the unit; larger level = smaller value.
struct TropicalValue {
  ExtRational level;

  static TropicalValue zero() { return {ExtRational::infinity()}; }
  static TropicalValue one() { return {ExtRational(0)}; }

  friend bool operator==(const TropicalValue&, const TropicalValue&) = default;
  std::string str() const { return level.str(); }
};

inline std::ostream& operator<<(std::ostream& os, const TropicalValue& v) { return os << v.str(); }

inline TropicalValue t_add(const TropicalValue& a, const TropicalValue& b) { return {min(a.level, b.level)}; }
inline TropicalValue t_mul(const TropicalValue& a, const TropicalValue& b) { return {a.level + b.level}; }
inline bool t_leq(const TropicalValue& a, const TropicalValue& b) { return a.level >= b.level; }

inline TropicalValue to_tropical(const MeasureValue& a) {
  switch (a.kind()) {
    case MeasureValue::Kind::Zero: return TropicalValue::zero();
    case MeasureValue::Kind::Inf: return {ExtRational(a.level())};
    case MeasureValue::Kind::Std: return TropicalValue::one();
  }
  return TropicalValue::zero();
}

}  // namespace omeasure

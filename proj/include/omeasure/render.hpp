#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "measure.hpp"
#include "semiring.hpp"
#include "transforms.hpp"

namespace omeasure::render {

using Json = nlohmann::ordered_json;

/// Decimal rendering with a fixed number of digits after the point (truncated).
inline std::string decimal(const Rational& q, int digits = 12) {
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  Rational scaled = q * Rational(scale);
  Integer whole = floor(scaled);
  bool negative = whole < 0;
  if (negative) whole = -whole;
  std::string s = whole.str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (negative ? "-" : "") + s;
}

inline Json to_json(const MeasureValue& v) {
  Json j;
  switch (v.kind()) {
    case MeasureValue::Kind::Zero: j["kind"] = "zero"; break;
    case MeasureValue::Kind::Inf:
      j["kind"] = "inf";
      j["level"] = to_string(v.level());
      break;
    case MeasureValue::Kind::Std:
      j["kind"] = "std";
      j["lo"] = to_string(v.size().lo);
      j["hi"] = to_string(v.size().hi);
      if (!v.size().is_exact()) {
        j["lo_decimal"] = decimal(v.size().lo);
        j["hi_decimal"] = decimal(v.size().hi);
      }
      break;
  }
  return j;
}

inline Json to_json(const TropicalValue& v) {
  Json j;
  j["level"] = v.level.str();
  return j;
}

inline Json to_json(const LevelBracket& b) {
  Json inner;
  inner["lower"] = to_json(b.lower);
  inner["upper"] = to_json(b.upper);
  inner["delta"] = to_string(b.delta);
  inner["refinement_depth"] = b.refinement_depth;
  Json j;
  j["bracket"] = inner;
  return j;
}

inline Json to_json(const InvarianceReport& r) {
  Json j;
  j["before"] = to_json(r.before);
  j["after"] = to_json(r.after);
  j["equal"] = tri_name(r.equal);
  j["unit_jacobian"] = r.unit;
  j["determinant"] = r.determinant.str();
  return j;
}

inline Json error_json(const Error& e) {
  Json inner;
  inner["code"] = error_code_name(e.code());
  if (e.position() != Error::npos) inner["position"] = e.position();
  inner["message"] = e.detail();
  Json j;
  j["error"] = inner;
  return j;
}

inline std::string to_text(const MeasureValue& v) {
  if (v.is_std() && !v.size().is_exact())
    return v.str() + " ~ " + decimal(v.size().lo) + " .. " + decimal(v.size().hi);
  return v.str();
}

inline std::string to_text(const TropicalValue& v) { return "Level(" + v.level.str() + ")"; }

inline std::string to_text(const LevelBracket& b) { return "bracket " + b.str(); }

inline std::string to_text(const InvarianceReport& r) {
  std::ostringstream out;
  out << "mu(X)     = " << to_text(r.before) << "\n"
      << "mu(phi X) = " << to_text(r.after) << "\n"
      << "equal     = " << tri_name(r.equal) << "\n"
      << "det       = " << r.determinant.str() << (r.unit ? " (unit)" : " (scaling check)");
  return out.str();
}

}  // namespace omeasure::render

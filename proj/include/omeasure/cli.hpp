#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dsl.hpp"
#include "render.hpp"
#include "selftest.hpp"

namespace omeasure::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Rational parse_positive(const std::string& text, const char* flag) {
  auto q = parse_rational(text);
  if (!q || *q <= 0) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " expects a positive rational, got '" + text + "'");
  return *q;
}

struct Options {
  std::string set_file, map_file, semiring = "vtilde", format;
  std::string delta, leb_tol, denom_cap;
  int max_refine = 0;

  EngineConfig engine() const {
    EngineConfig config;
    if (!delta.empty()) config.delta0 = parse_positive(delta, "--delta");
    if (!leb_tol.empty()) config.leb_tol = parse_positive(leb_tol, "--leb-tol");
    if (max_refine != 0) config.max_refine = max_refine;
    if (!denom_cap.empty()) {
      Rational cap = parse_positive(denom_cap, "--denom-cap");
      if (!is_integer(cap)) throw Error(ErrorCode::InvalidArgument, "--denom-cap expects a positive integer");
      config.denom_cap = numer(cap);
    }
    config.validate();
    return config;
  }
  bool selftest = false;

  // json unless asked otherwise; selftest defaults to text
  bool json() const { return format == "json" || (format.empty() && !selftest); }
};

inline void emit(RunResult& r, const Options& o, const render::Json& json, const std::string& text) {
  r.out += (o.json() ? json.dump() : text) + "\n";
}

inline void emit_bracket(RunResult& r, const Options& o, const LevelBracket& b) {
  emit(r, o, render::to_json(b), render::to_text(b));
  r.exit_code = 2;
}

inline int run_measure(RunResult& r, const Options& o) {
  EngineConfig config = o.engine();
  DefinableSet x = dsl::parse_set(read_file(o.set_file));
  try {
    MeasureValue v = measure_sb(x, config);
    if (o.semiring == "gamma") emit(r, o, render::to_json(to_tropical(v)), render::to_text(to_tropical(v)));
    else emit(r, o, render::to_json(v), render::to_text(v));
  } catch (const BracketDiverged& e) {
    emit_bracket(r, o, e.bracket());
  }
  return r.exit_code;
}

inline int run_nu(RunResult& r, const Options& o) {
  EngineConfig config = o.engine();
  DefinableSet x = dsl::parse_set(read_file(o.set_file));
  try {
    TropicalValue v = measure_nu(x, config);
    emit(r, o, render::to_json(v), render::to_text(v));
  } catch (const BracketDiverged& e) {
    emit_bracket(r, o, e.bracket());
  }
  return r.exit_code;
}

inline int run_invariance(RunResult& r, const Options& o) {
  EngineConfig config = o.engine();
  DefinableSet x = dsl::parse_set(read_file(o.set_file));
  IsoPipeline map = dsl::parse_map(read_file(o.map_file));
  try {
    InvarianceReport report = check_invariance(map, x, config);
    emit(r, o, render::to_json(report), render::to_text(report));
  } catch (const BracketDiverged& e) {
    emit_bracket(r, o, e.bracket());
  }
  return r.exit_code;
}

inline int run_std_interior(RunResult& r, const Options& o) {
  DefinableSet x = dsl::parse_set(read_file(o.set_file));
  r.out += has_std_interior(x) ? "true\n" : "false\n";
  return 0;
}

inline int run_selftest(RunResult& r, const Options& o) {
  auto results = selftest::run_all(o.engine());
  bool all = true;
  render::Json list = render::Json::array();
  for (const auto& c : results) {
    all = all && c.passed;
    if (o.json()) {
      render::Json j;
      j["criterion"] = c.id;
      j["name"] = c.name;
      j["passed"] = c.passed;
      j["seconds"] = c.seconds;
      j["limit_seconds"] = c.limit_seconds;
      j["detail"] = c.detail;
      list.push_back(j);
    } else {
      r.out += selftest::format(c) + "\n";
    }
  }
  if (o.json()) r.out += list.dump(2) + "\n";
  return all ? 0 : 1;
}

}  // namespace detail

/// Runs one command line (without the program name). Never throws.
inline RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  detail::Options o;

  CLI::App app{"Non-real measure of monomial cells", "omeasure"};
  app.require_subcommand(1);
  auto add_engine_flags = [&](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "initial partition step (positive rational)");
    sub->add_option("--max-refine", o.max_refine, "maximum number of refinements")->check(CLI::PositiveNumber);
    sub->add_option("--leb-tol", o.leb_tol, "tolerance for standard-regime sizes");
    sub->add_option("--denom-cap", o.denom_cap, "denominator bound for exact level recovery");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* measure = app.add_subcommand("measure", "measure of a set in the extended semiring");
  measure->add_option("--set", o.set_file, "set file")->required();
  measure->add_option("--semiring", o.semiring, "vtilde or gamma")->check(CLI::IsMember({"vtilde", "gamma"}));
  add_engine_flags(measure);

  auto* nu = app.add_subcommand("nu", "tropical measure of a bounded set");
  nu->add_option("--set", o.set_file, "set file")->required();
  add_engine_flags(nu);

  auto* invariance = app.add_subcommand("invariance", "compare the measure of a set and of its image");
  invariance->add_option("--set", o.set_file, "set file")->required();
  invariance->add_option("--map", o.map_file, "map file")->required();
  add_engine_flags(invariance);

  auto* std_interior = app.add_subcommand("std-interior", "whether the standard shadow has interior");
  std_interior->add_option("--set", o.set_file, "set file")->required();

  auto* self = app.add_subcommand("selftest", "run the property corpus");
  add_engine_flags(self);

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err);
    if (result.exit_code != 0) result.exit_code = 1;
    result.out = out.str();
    result.err = err.str();
    return result;
  }
  o.selftest = app.got_subcommand(self);

  try {
    if (app.got_subcommand(measure)) result.exit_code = detail::run_measure(result, o);
    else if (app.got_subcommand(nu)) result.exit_code = detail::run_nu(result, o);
    else if (app.got_subcommand(invariance)) result.exit_code = detail::run_invariance(result, o);
    else if (app.got_subcommand(std_interior)) result.exit_code = detail::run_std_interior(result, o);
    else result.exit_code = detail::run_selftest(result, o);
  } catch (const Error& e) {
    result.exit_code = 1;
    if (o.json()) result.out += render::error_json(e).dump() + "\n";
    result.err += std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.err += std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace omeasure::cli

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "omeasure/corpus.hpp"
#include "omeasure/dsl.hpp"
#include "omeasure/measure.hpp"

using namespace omeasure;
using corpus::t_pow;
using corpus::x;

namespace {

const PuiseuxScalar t = PuiseuxScalar::t();

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

std::size_t position_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error raised";
  return Error::npos;
}

const std::vector<std::string> kSetSources{
    "box [0,t] x [0,t^(1/2)]",
    "box [0, t]",
    "box [1/4, 3/4] x [1/4, 3/4]",
    "cell base=box [0,t]; low=0; thick=x1",
    "cell base=box [t^2, t]; low=0; thick=t^2/x1",
    "cell base=box [0,1]; low=0; thick=x1^(1/2)",
    "cell base=box [0,1/2]; low=x1^2; thick=3/2*t^(1/2)*x1 + t^2",
    "cell base=(cell base=box [0,t]; low=0; thick=x1); low=x1*x2; thick=(x1 + x2)^2",
    "union(box [0,t], box [1/2, 1/2 + t])",
    "product(box [0,t], cell base=box [0,t]; low=0; thick=x1)",
    "box [0, t^(-1)] x [0, t^2]",
    "box [1/4, 1/4] x [0, 1]",
    "cell base=box [0,1]; low=0; thick=2*(x1 + t)*x1",
    "cell base=box [0, t]; low=0; thick=x1^3 / (2*t)",
};

const std::vector<std::string> kMapSources{
    "shear 2 x1",
    "diag (t, t^(-1))",
    "translate (1/2, 0)\nswap 1 2",
    "shear 2 -x1\n",
    "# comment\ndiag (2, 1/2)\nshear 2 t*x1^2 + x1",
};

}  // namespace

TEST(Scalar, ReferenceValues) {
  PuiseuxScalar s = dsl::parse_scalar("3/2*t^(1/2) + t^2");
  EXPECT_EQ(s.terms().size(), 2u);
  EXPECT_EQ(s, PuiseuxScalar::monomial(Rational(3, 2), Rational(1, 2)) + t * t);
  EXPECT_TRUE(dsl::parse_scalar("t - t").is_zero());
  EXPECT_EQ(code_of([] { dsl::parse_scalar("t^(1/0)"); }), ErrorCode::SyntaxError);
}

TEST(Scalar, Arithmetic) {
  EXPECT_EQ(dsl::parse_scalar("(1 + t)*(1 - t)"), 1 - t * t);
  EXPECT_EQ(dsl::parse_scalar("t^(3/2) / t"), t_pow(Rational(1, 2)));
  EXPECT_EQ(dsl::parse_scalar("(4*t^2)^(1/2)"), 2 * t);
  EXPECT_EQ(dsl::parse_scalar("-2 + 3"), PuiseuxScalar(1));
}

TEST(Scalar, Errors) {
  EXPECT_EQ(code_of([] { dsl::parse_scalar("1 +"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { dsl::parse_scalar("x1"); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { dsl::parse_scalar("(1 + t)^(1/2)"); }), ErrorCode::NotMonomial);
  EXPECT_EQ(code_of([] { dsl::parse_scalar("1 / (1 + t)"); }), ErrorCode::ClassViolation);
  EXPECT_EQ(code_of([] { dsl::parse_scalar("2 $ 3"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(position_of([] { dsl::parse_scalar("2 $ 3"); }), 2u);
}

TEST(MExpr, Posynomials) {
  EXPECT_EQ(dsl::parse_mexpr("x1^2 + t*x2", 2), x(0, 2) + MonomialFn(t) * x(1));
  EXPECT_EQ(code_of([] { dsl::parse_mexpr("x3", 2); }), ErrorCode::DimensionMismatch);
}

TEST(Set, ReferenceValues) {
  EXPECT_EQ(dsl::parse_set("box [0,t] x [0,t^(1/2)]").cells().front(),
            make_box({{0, t}, {0, t_pow(Rational(1, 2))}}, Region::Orthant));
  EXPECT_EQ(dsl::parse_set("cell base=box [0,t]; low=0; thick=x1").cells().front(),
            MonomialCell({Coordinate::thick(0, t), Coordinate::thick(0, x(0))}));
  EXPECT_EQ(code_of([] { dsl::parse_set("cell base=box [0,1]; low=0; thick=x1 - t"); }), ErrorCode::ClassViolation);
}

TEST(Set, ErrorsCarryPositions) {
  std::string src = "cell base=box [0,1]; low=0; thick=x1 - t";
  EXPECT_EQ(position_of([&] { dsl::parse_set(src); }), src.find("x1 - t"));
  EXPECT_EQ(position_of([] { dsl::parse_set("box [0,t] x [0,t"); }), 16u);
  EXPECT_EQ(code_of([] { dsl::parse_set("cell base=box [0,t]; low=0; thick=x2"); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { dsl::parse_set("box [0,t] extra"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { dsl::parse_set("box [t, 0]"); }), ErrorCode::ClassViolation);
  EXPECT_EQ(position_of([] { dsl::parse_set("box [t, 0]"); }), 8u);
}

TEST(Set, ThinCellsAndUnions) {
  DefinableSet u = dsl::parse_set("union(box [0,t], box [1/2, 1/2 + t])");
  EXPECT_EQ(u.cells().size(), 2u);
  DefinableSet graph = dsl::parse_set("cell base=box [0,t]; low=x1; thick=0");
  EXPECT_TRUE(graph.cells().front()[1].is_thin());
  EXPECT_FALSE(has_interior(graph));
}

TEST(Set, MeasuresMatchTheCorpus) {
  EXPECT_EQ(measure_unit(dsl::parse_set("cell base=box [0,t]; low=0; thick=x1")), MeasureValue::inf(2));
  EXPECT_EQ(measure_unit(dsl::parse_set("cell base=box [t^2, t]; low=0; thick=t^2/x1")), MeasureValue::inf(2));
  EXPECT_EQ(measure_unit(dsl::parse_set("product(box [0,t], box [0,t^(1/2)])")), MeasureValue::inf(Rational(3, 2)));
}

TEST(Map, Steps) {
  IsoPipeline m = dsl::parse_map("shear 2 x1\ndiag (t, t^(-1))\ntranslate (1/2, 0)\nswap 1 2");
  ASSERT_EQ(m.steps.size(), 4u);
  EXPECT_EQ(std::get<ShearMap>(m.steps[0]).coordinate, 1u);
  EXPECT_EQ(std::get<SwapMap>(m.steps[3]).j, 1u);
  EXPECT_TRUE(std::get<ShearMap>(dsl::parse_map("shear 2 -x1").steps[0]).inverse);
  EXPECT_EQ(code_of([] { dsl::parse_map("shear 2 x1 - t"); }), ErrorCode::ClassViolation);
  EXPECT_EQ(code_of([] { dsl::parse_map("rotate 1"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { dsl::parse_map("swap 0 1"); }), ErrorCode::SyntaxError);
}

TEST(RoundTrip, Sets) {
  for (const auto& src : kSetSources) {
    dsl::SetAst ast = dsl::parse_set_ast(src);
    std::string printed = dsl::print(ast);
    dsl::SetAst again = dsl::parse_set_ast(printed);
    EXPECT_TRUE(dsl::equal(ast, again)) << src << " -> " << printed;
    EXPECT_EQ(dsl::print(again), printed);
  }
}

TEST(RoundTrip, Maps) {
  for (const auto& src : kMapSources) {
    dsl::MapAst ast = dsl::parse_map_ast(src);
    std::string printed = dsl::print(ast);
    EXPECT_TRUE(dsl::equal(ast, dsl::parse_map_ast(printed))) << src << " -> " << printed;
  }
}

TEST(RoundTrip, SampleFiles) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(OMEASURE_SAMPLES_DIR)) {
    std::ifstream in(entry.path());
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string ext = entry.path().extension().string();
    if (ext == ".dsl") {
      auto ast = dsl::parse_set_ast(buffer.str());
      EXPECT_TRUE(dsl::equal(ast, dsl::parse_set_ast(dsl::print(ast)))) << entry.path();
      ++files;
    } else if (ext == ".map") {
      auto ast = dsl::parse_map_ast(buffer.str());
      EXPECT_TRUE(dsl::equal(ast, dsl::parse_map_ast(dsl::print(ast)))) << entry.path();
      ++files;
    }
  }
  EXPECT_GE(files, 5u);
}

// Random expressions: printing and reparsing preserves both the tree and the value.
TEST(RoundTrip, RandomExpressions) {
  corpus::Rng rng(11);
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    int kind = depth > 3 ? 0 : static_cast<int>(corpus::uniform(rng, 0, 6));
    switch (kind) {
      case 0: return std::to_string(corpus::uniform(rng, 1, 9)) + "/" + std::to_string(corpus::uniform(rng, 1, 5));
      case 1: return "t^(" + std::to_string(corpus::uniform(rng, 1, 7)) + "/" + std::to_string(corpus::uniform(rng, 1, 4)) + ")";
      case 2: return "x" + std::to_string(corpus::uniform(rng, 1, 2));
      case 3: return "(" + gen(depth + 1) + " + " + gen(depth + 1) + ")";
      case 4: return gen(depth + 1) + "*" + gen(depth + 1);
      case 5: return "(" + gen(depth + 1) + ")^2";
      default: return gen(depth + 1) + " / t";
    }
  };
  for (int i = 0; i < 300; ++i) {
    std::string src = gen(0);
    dsl::Expr ast = dsl::parse_expr_ast(src);
    std::string printed = dsl::print(ast);
    EXPECT_TRUE(dsl::equal(ast, dsl::parse_expr_ast(printed))) << src << " -> " << printed;
    EXPECT_EQ(dsl::parse_mexpr(src, 2), dsl::parse_mexpr(printed, 2)) << src;
  }
}

#include "tscl/io.hpp"

#include <gtest/gtest.h>

#include "tscl/sampling.hpp"

using nlohmann::json;
using tscl::CanonicalLift;
using tscl::GeneratorTable;
using tscl::Int;
using tscl::Rational;
using tscl::TnElement;

namespace {

std::string load_error(const json& j) {
  try {
    tscl::lift_from_json(j);
  } catch (const tscl::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ElementIO, RoundTrip) {
  tscl::Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    CanonicalLift f = tscl::random_thompson(rng);
    EXPECT_EQ(tscl::lift_from_json(tscl::lift_to_json(f)), f);
  }
  json a = tscl::lift_to_json(tscl::builtin("A"));
  EXPECT_EQ(a["breakpoints"][1][0], "1/2");
  EXPECT_EQ(a["breakpoints"][1][1], "1/4");
}

TEST(ElementIO, RejectionsNameTheInvariant) {
  EXPECT_NE(load_error(json{{"points", json::array()}}).find("breakpoints"), std::string::npos);
  EXPECT_NE(load_error(json{{"breakpoints", json::array({json::array({"1/4", "0"})})}})
                .find("first x-coordinate"),
            std::string::npos);
  EXPECT_NE(load_error(json{{"breakpoints",
                             json::array({json::array({"0", "0"}),
                                          json::array({"1/2", "1/4"}),
                                          json::array({"1/4", "1/2"})})}})
                .find("strictly increasing"),
            std::string::npos);
  EXPECT_NE(load_error(json{{"breakpoints", json::array({json::array({"0", "3/2"})})}})
                .find("canonical"),
            std::string::npos);
  EXPECT_NE(load_error(json{{"breakpoints", json::array({json::array({"0", "x"})})}})
                .find("rational"),
            std::string::npos);
  EXPECT_NE(load_error(json{{"breakpoints", json::array({json::array({"0"})})}})
                .find("pair"),
            std::string::npos);
}

TEST(ElementIO, TextFormsAreInterchangeable) {
  EXPECT_EQ(tscl::element_from_text("10100 | 11000 | 0"), tscl::builtin("A"));
  EXPECT_EQ(tscl::element_from_text("A"), tscl::builtin("A"));
  EXPECT_EQ(tscl::element_from_text(""), CanonicalLift::identity());
  EXPECT_EQ(tscl::element_from_text("A A^-1"), CanonicalLift::identity());
  // products canonicalize at circle level: R R is a full turn
  EXPECT_EQ(tscl::element_from_text("R R"), CanonicalLift::identity());
  EXPECT_EQ(tscl::element_from_text("R^2 (A B)^0"), CanonicalLift::identity());
  EXPECT_THROW(tscl::element_from_text("Q"), tscl::ParseError);
}

TEST(TnElementIO, RoundTripAndForms) {
  TnElement g(tscl::builtin("R"), Int(-3), Int(12));
  json j = tscl::tn_to_json(g);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["j"], -3);
  EXPECT_EQ(tscl::tn_from_json(j), g);

  // "t" accepts a tree pair or a builtin word as text
  json tree_form = {{"n", 12}, {"j", -3}, {"t", "100 | 100 | 1"}};
  EXPECT_EQ(tscl::tn_from_json(tree_form), g);
  json word_form = {{"n", 12}, {"j", -3}, {"t", "R"}};
  EXPECT_EQ(tscl::tn_from_json(word_form), g);

  // big central coordinates travel as strings
  json big = {{"n", 12}, {"j", "123456789012345678901234567890"}, {"t", "id"}};
  EXPECT_EQ(tscl::tn_from_json(big).j(), Int("123456789012345678901234567890"));

  EXPECT_THROW(tscl::tn_from_json(json{{"n", 12}, {"j", 0}}), tscl::ParseError);
  EXPECT_THROW(tscl::tn_from_json(json{{"j", 0}, {"t", "id"}}), tscl::ParseError);
  EXPECT_THROW(tscl::tn_from_json(json{{"n", 12}, {"t", "id"}}), tscl::ParseError);
}

TEST(TableIO, ParseAndVerify) {
  json j = {
      {"n", 12},
      {"generators",
       {{"x", {{"j", 1}, {"t", "id"}}},
        {"r", {{"n", 12}, {"j", 0}, {"t", "100 | 100 | 1"}}}}},
      {"relators", json::array({"x x^-1", "r^2 x^-12"})},
  };
  GeneratorTable t = tscl::table_from_json(j);
  EXPECT_EQ(t.n, Int(12));
  EXPECT_EQ(t.images.at("x"), TnElement(CanonicalLift(), Int(1), Int(12)));
  EXPECT_EQ(t.images.at("r").t(), tscl::builtin("R"));
  // r^2 = (id, 12) and x^12 = (id, 12), so the second relator holds
  EXPECT_TRUE(tscl::verify_relations(t).empty());

  json round = tscl::table_to_json(t);
  GeneratorTable back = tscl::table_from_json(round);
  EXPECT_EQ(back.n, t.n);
  EXPECT_EQ(back.images.at("r"), t.images.at("r"));
  EXPECT_EQ(back.relators, t.relators);
}

TEST(TableIO, LevelConsistencyEnforced) {
  json j = {{"n", 12}, {"generators", {{"x", {{"n", 21}, {"j", 1}, {"t", "id"}}}}}};
  EXPECT_THROW(tscl::table_from_json(j), tscl::LevelMismatchError);
  EXPECT_THROW(tscl::table_from_json(json{{"n", 0}}), tscl::ParseError);
  EXPECT_THROW(tscl::table_from_json(json::array()), tscl::ParseError);
}

TEST(FileIO, MissingFile) {
  EXPECT_THROW(tscl::element_from_file("/nonexistent/path.json"), tscl::ParseError);
  EXPECT_THROW(tscl::table_from_file("/nonexistent/path.json"), tscl::ParseError);
}

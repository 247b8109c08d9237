// Copyright 2026 The qautk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "error.hpp"
#include "json_io.hpp"
#include "report.hpp"

using namespace qautk;

TEST(json_io, integers_and_rationals) {
  EXPECT_EQ(bigint_to_json(BigInt(42)), Json(42));
  const BigInt big("1000000000000000000000000");
  EXPECT_EQ(bigint_to_json(big), Json("1000000000000000000000000"));
  EXPECT_EQ(bigint_from_json(bigint_to_json(big)), big);
  EXPECT_EQ(rational_to_json(Rational(2, 6)), Json("1/3"));
  EXPECT_EQ(rational_from_json(Json("-3/4")), Rational(-3, 4));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_THROW(rational_from_json(Json(0.5)), Error);
  EXPECT_EQ(complex_from_json(Json{{"re", "1/2"}, {"im", -1}}), ComplexRational(Rational(1, 2), Rational(-1)));
}

TEST(json_io, groups) {
  const FiniteGroup s3 = group_from_json(Json{{"symmetric", 3}});
  EXPECT_EQ(group_from_json(group_to_json(s3)).table(), s3.table());
  EXPECT_EQ(group_from_json(Json{{"product", Json::array({Json{{"cyclic", 2}}, Json{{"cyclic", 3}}})}}).order(), 6u);
  EXPECT_EQ(group_from_json(Json{{"quaternion", true}}).order(), 8u);
  EXPECT_THROW(group_from_json(Json{{"table", {{0, 1}, {1, 1}}}}), Error);
  EXPECT_THROW(group_from_json(Json{{"cyclic", -1}}), Error);
  EXPECT_THROW(group_from_json(Json::array()), Error);
}

TEST(json_io, cocycles) {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const Cocycle w = cocycle_from_json(Json{{"root_order", 2}, {"exponents", {{0, 0}, {0, 1}}}}, c2);
  EXPECT_EQ(cocycle_from_json(cocycle_to_json(w), c2).exponents(), w.exponents());
  EXPECT_EQ(cocycle_from_json(Json(), c2).root_order(), 1u);
  EXPECT_THROW(cocycle_from_json(Json{{"root_order", 2}, {"exponents", {{0, 0}, {0, 7}}}}, c2), Error);
  EXPECT_THROW(cocycle_from_json(Json{{"root_order", 2}}, c2), Error);
}

TEST(json_io, cyclotomic_values) {
  const FieldPtr f = cyclotomic_field(4);
  EXPECT_EQ(cyclotomic_from_json(Json{{"zeta", 1}}, f), Cyclotomic::root(f, 1));
  EXPECT_EQ(cyclotomic_from_json(Json{{"re", 0}, {"im", 1}}, f), Cyclotomic::root(f, 1));
  const Cyclotomic x = Cyclotomic(f, Rational(1, 2)) + Cyclotomic(f, Rational(3)) * Cyclotomic::root(f, 1);
  EXPECT_EQ(cyclotomic_from_json(cyclotomic_to_json(x), f), x);
  EXPECT_THROW(cyclotomic_from_json(Json{{"re", 0}, {"im", 1}}, cyclotomic_field(3)), Error);
}

TEST(json_io, graded_algebra_round_trip) {
  const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const Cocycle w(g, 2, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}});
  const GradedAlgebra b = twisted_group_algebra(w);
  const Json j = graded_algebra_to_json(b);
  const GradedAlgebra back = graded_algebra_from_json(j);
  EXPECT_EQ(graded_algebra_to_json(back), j);
  EXPECT_EQ(back.grading(), b.grading());
}

TEST(json_io, graded_algebra_from_matrices) {
  const Json j = Json::parse(R"({
    "group": {"product": [{"cyclic": 2}, {"cyclic": 2}]},
    "field_order": 4,
    "basis": ["1", "sz", "sx", "sy"],
    "grading": [0, 1, 2, 3],
    "matrices": [
      [[1, 0], [0, 1]],
      [[1, 0], [0, -1]],
      [[0, 1], [1, 0]],
      [[0, {"zeta": 3}], [{"zeta": 1}, 0]]
    ]
  })");
  const GradedAlgebra b = graded_algebra_from_json(j);
  EXPECT_EQ(b.algebra().dimension(), 4u);
  EXPECT_TRUE(b.algebra().has_star());
}

TEST(json_io, algebra_states) {
  auto [a, w] = algebra_state_from_json(Json{{"block_sizes", {1, 1}}, {"weights", {"1/3", "2/3"}}});
  EXPECT_EQ(a.dimension(), 2u);
  EXPECT_EQ(w.density()[0][0][0], ComplexRational(Rational(1, 3)));
  auto [b, v] = algebra_state_from_json(Json{{"block_sizes", {2}}, {"density", {{{"1/2", 0}, {0, "1/2"}}}}});
  EXPECT_TRUE(v.faithful());
  EXPECT_THROW(algebra_state_from_json(Json{{"block_sizes", {2}}, {"density", "uniform"}}), Error);
  EXPECT_THROW(algebra_state_from_json(Json{{"density", "trace"}}), Error);
}

TEST(json_io, malformed_text) {
  EXPECT_THROW(parse_json_text("{\"a\": "), Error);
  EXPECT_EQ(parse_json_text("[1]"), Json::array({1}));
}

TEST(report, ktheory_report_shape) {
  const RunReport r = run_command("ktheory", Json{{"dims", {1, 1, 1, 1}}});
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.body.at("K0"), (Json{{"free", 10}, {"torsion", Json::array()}}));
  EXPECT_EQ(r.body.at("K1"), (Json{{"free", 1}, {"torsion", Json::array()}}));
  EXPECT_EQ(r.body.at("command"), "ktheory");
  EXPECT_TRUE(r.body.contains("timing"));
}

TEST(report, verify_summary) {
  const RunReport r = run_command("verify", Json{{"dims", {2, 4}}});
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.body.at("summary"), "match: Z^2 + Z_2^3 / Z");
}

TEST(report, rerunning_inputs_reproduces_results) {
  const std::vector<std::pair<std::string, Json>> cases = {
      {"ktheory", Json{{"dims", {2, 3}}}},
      {"closed-form", Json{{"dims", {4, 6}}}},
      {"boundary", Json{{"dims", {1, 2}}}},
      {"resolution-check", Json{{"dims", {2, 2}}, {"degree", 5}}},
      {"snf", Json{{"matrix", "2 2\n2 4\n6 8\n"}}},
      {"delta-form", Json{{"block_sizes", {1, 1, 1}}, {"density", "trace"}}},
      {"twisted-group", Json{{"group", {{"cyclic", 3}}}}},
      {"magic-rank", Json{{"n", 3}}},
      {"sweep", Json{{"samples", 3}, {"max_n", 3}, {"max_k", 3}, {"degree", 4}}},
  };
  for (const auto& [cmd, in] : cases) {
    const RunReport first = run_command(cmd, in);
    const Json reparsed = Json::parse(first.body.dump());
    const RunReport second = run_command(reparsed.at("command").get<std::string>(), reparsed.at("inputs"));
    EXPECT_EQ(report_results(second.body), report_results(reparsed)) << cmd;
  }
}

TEST(report, unknown_command) { EXPECT_THROW(run_command("frobnicate", Json::object()), Error); }

TEST(report, delta_form_failure_is_not_passed) {
  const RunReport r = run_command("delta-form", Json{{"block_sizes", {1, 1}}, {"weights", {"1/3", "2/3"}}});
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.body.contains("witness"));
}

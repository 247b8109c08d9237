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

#include <cstdint>
#include <string>

#include "qautk/qautk.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qautk_string_free(s);
  return out;
}

std::string entry(const qautk_matrix* m, size_t r, size_t c) {
  char* s = nullptr;
  EXPECT_EQ(qautk_matrix_entry(m, r, c, &s), QAUTK_OK);
  return take(s);
}

}  // namespace

TEST(capi, version_and_commands) {
  EXPECT_STREQ(qautk_version(), "0.1.0");
  ASSERT_GT(qautk_command_count(), 5u);
  bool found = false;
  for (size_t i = 0; i < qautk_command_count(); ++i) found |= std::string(qautk_command_name(i)) == "verify";
  EXPECT_TRUE(found);
  EXPECT_EQ(qautk_command_name(qautk_command_count()), nullptr);
}

TEST(capi, matrix_lifecycle) {
  qautk_matrix* m = nullptr;
  ASSERT_EQ(qautk_matrix_parse("2 3\n1 2 3\n4 5 -60000000000000000000000\n", &m), QAUTK_OK);
  EXPECT_EQ(qautk_matrix_rows(m), 2u);
  EXPECT_EQ(qautk_matrix_cols(m), 3u);
  EXPECT_EQ(entry(m, 1, 2), "-60000000000000000000000");
  char* text = nullptr;
  ASSERT_EQ(qautk_matrix_to_text(m, &text), QAUTK_OK);
  EXPECT_EQ(take(text), "2 3\n1 2 3\n4 5 -60000000000000000000000\n");
  char* bad = nullptr;
  EXPECT_EQ(qautk_matrix_entry(m, 2, 0, &bad), QAUTK_INVALID_ARGUMENT);
  qautk_matrix_free(m);
  qautk_matrix_free(nullptr);
}

TEST(capi, parse_errors_set_last_error) {
  qautk_matrix* m = nullptr;
  EXPECT_EQ(qautk_matrix_parse("2 2\n1 2 3\n", &m), QAUTK_PARSE_ERROR);
  EXPECT_EQ(m, nullptr);
  EXPECT_GT(std::string(qautk_last_error()).size(), 0u);
  EXPECT_EQ(qautk_matrix_parse(nullptr, &m), QAUTK_INVALID_ARGUMENT);
}

TEST(capi, smith_normal_form) {
  const int64_t a[] = {2, 4, 4, -6, 6, 12, 10, -4, -16};
  qautk_matrix* m = nullptr;
  ASSERT_EQ(qautk_matrix_from_int64(3, 3, a, &m), QAUTK_OK);
  qautk_matrix *s = nullptr, *u = nullptr, *v = nullptr;
  ASSERT_EQ(qautk_smith_normal_form(m, &s, &u, &v), QAUTK_OK);
  EXPECT_EQ(entry(s, 0, 0), "2");
  EXPECT_EQ(entry(s, 1, 1), "6");
  EXPECT_EQ(entry(s, 2, 2), "12");
  EXPECT_EQ(entry(s, 0, 1), "0");
  EXPECT_EQ(qautk_matrix_rows(u), 3u);
  EXPECT_EQ(qautk_matrix_cols(v), 3u);
  qautk_matrix* only_s = nullptr;
  EXPECT_EQ(qautk_smith_normal_form(m, &only_s, nullptr, nullptr), QAUTK_OK);
  for (qautk_matrix* x : {m, s, u, v, only_s}) qautk_matrix_free(x);
}

TEST(capi, boundary_matrix) {
  const uint64_t dims[] = {2, 3};
  qautk_matrix* b = nullptr;
  ASSERT_EQ(qautk_boundary_matrix(dims, 2, &b), QAUTK_OK);
  EXPECT_EQ(qautk_matrix_rows(b), 5u);
  EXPECT_EQ(qautk_matrix_cols(b), 4u);
  EXPECT_EQ(entry(b, 4, 0), "-2");
  qautk_matrix_free(b);
  const uint64_t zero[] = {0, 2};
  EXPECT_EQ(qautk_boundary_matrix(zero, 2, &b), QAUTK_INVALID_ARGUMENT);
}

TEST(capi, ktheory_report) {
  const uint64_t dims[] = {1, 1, 1, 1};
  qautk_report* r = nullptr;
  ASSERT_EQ(qautk_ktheory(dims, 4, &r), QAUTK_OK);
  EXPECT_EQ(qautk_report_passed(r), 1);
  char* json = nullptr;
  ASSERT_EQ(qautk_report_json(r, -1, &json), QAUTK_OK);
  const std::string j = take(json);
  EXPECT_NE(j.find("\"K0\":{\"free\":10,\"torsion\":[]}"), std::string::npos) << j;
  EXPECT_EQ(qautk_report_warning_count(r), 0u);
  qautk_report_free(r);
}

TEST(capi, verify_and_warnings) {
  const uint64_t dims[] = {1, 1};
  qautk_report* r = nullptr;
  ASSERT_EQ(qautk_verify(dims, 2, &r), QAUTK_OK);
  EXPECT_EQ(qautk_report_passed(r), 1);
  ASSERT_EQ(qautk_report_warning_count(r), 1u);
  EXPECT_NE(std::string(qautk_report_warning(r, 0)).size(), 0u);
  EXPECT_EQ(qautk_report_warning(r, 1), nullptr);
  qautk_report_free(r);
}

TEST(capi, run_status_codes) {
  qautk_report* r = nullptr;
  EXPECT_EQ(qautk_run("verify", "{\"dims\": [2, 4", &r), QAUTK_PARSE_ERROR);
  EXPECT_EQ(qautk_run("verify", "{\"dims\": [0, 4]}", &r), QAUTK_INVALID_ARGUMENT);
  EXPECT_EQ(qautk_run("no-such-command", "{}", &r), QAUTK_INVALID_ARGUMENT);
  EXPECT_EQ(qautk_run("delta-form", "{\"block_sizes\": [1, 1], \"weights\": [1, 0]}", &r), QAUTK_DOMAIN_ERROR);
  EXPECT_EQ(r, nullptr);
  ASSERT_EQ(qautk_run("delta-form", "{\"block_sizes\": [1, 1], \"weights\": [\"1/3\", \"2/3\"]}", &r), QAUTK_OK);
  EXPECT_EQ(qautk_report_passed(r), 0);
  qautk_report_free(r);
}

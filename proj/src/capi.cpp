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


#include "qautk/qautk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "ktheory.hpp"
#include "report.hpp"
#include "smith.hpp"

struct qautk_matrix {
  qautk::IntMatrix value;
};

struct qautk_report {
  qautk::RunReport value;
};

namespace {

thread_local std::string last_error;

qautk_status set_error(qautk_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
qautk_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return QAUTK_OK;
  } catch (const qautk::Error& e) {
    switch (e.kind()) {
      case qautk::ErrorKind::InvalidArgument:
        return set_error(QAUTK_INVALID_ARGUMENT, e.what());
      case qautk::ErrorKind::Parse:
        return set_error(QAUTK_PARSE_ERROR, e.what());
      case qautk::ErrorKind::Domain:
        return set_error(QAUTK_DOMAIN_ERROR, e.what());
      case qautk::ErrorKind::Inconsistent:
        return set_error(QAUTK_INTERNAL_ERROR, e.what());
    }
    return set_error(QAUTK_INTERNAL_ERROR, e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(QAUTK_PARSE_ERROR, std::string("JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(QAUTK_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(QAUTK_INTERNAL_ERROR, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* message) {
  if (!ok) qautk::fail(qautk::ErrorKind::InvalidArgument, message);
}

qautk::Json dims_json(const uint64_t* dims, size_t n) {
  require(dims != nullptr || n == 0, "dims is NULL");
  qautk::Json d = qautk::Json::array();
  for (size_t i = 0; i < n; ++i) d.push_back(dims[i]);
  return {{"dims", d}};
}

qautk_status run_json(const char* command, const qautk::Json& inputs, qautk_report** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = new qautk_report{qautk::run_command(command, inputs)};
  });
}

}  // namespace

extern "C" {

const char* qautk_version(void) { return "0.1.0"; }

const char* qautk_last_error(void) { return last_error.c_str(); }

void qautk_string_free(char* s) { std::free(s); }

qautk_status qautk_matrix_parse(const char* text, qautk_matrix** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "NULL argument");
    *out = new qautk_matrix{qautk::parse_matrix_text(text)};
  });
}

qautk_status qautk_matrix_from_int64(size_t rows, size_t cols, const int64_t* entries, qautk_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    require(entries != nullptr || rows * cols == 0, "entries is NULL");
    qautk::IntMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) m(r, c) = qautk::BigInt(std::to_string(entries[r * cols + c]));
    *out = new qautk_matrix{std::move(m)};
  });
}

size_t qautk_matrix_rows(const qautk_matrix* m) { return m == nullptr ? 0 : m->value.rows(); }

size_t qautk_matrix_cols(const qautk_matrix* m) { return m == nullptr ? 0 : m->value.cols(); }

qautk_status qautk_matrix_entry(const qautk_matrix* m, size_t r, size_t c, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "NULL argument");
    require(r < m->value.rows() && c < m->value.cols(), "entry index out of range");
    *out = copy_string(m->value(r, c).get_str());
  });
}

qautk_status qautk_matrix_to_text(const qautk_matrix* m, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "NULL argument");
    *out = copy_string(qautk::format_matrix_text(m->value));
  });
}

void qautk_matrix_free(qautk_matrix* m) { delete m; }

qautk_status qautk_boundary_matrix(const uint64_t* dims, size_t n, qautk_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    require(dims != nullptr || n == 0, "dims is NULL");
    *out = new qautk_matrix{qautk::boundary_matrix(qautk::DimVector(std::vector<std::uint64_t>(dims, dims + n)))};
  });
}

qautk_status qautk_smith_normal_form(const qautk_matrix* a, qautk_matrix** s, qautk_matrix** u, qautk_matrix** v) {
  return guarded([&] {
    require(a != nullptr, "matrix is NULL");
    qautk::SmithDecomposition snf = qautk::smith_normal_form(a->value);
    if (s != nullptr) *s = new qautk_matrix{std::move(snf.S)};
    if (u != nullptr) *u = new qautk_matrix{std::move(snf.U)};
    if (v != nullptr) *v = new qautk_matrix{std::move(snf.V)};
  });
}

qautk_status qautk_run(const char* command, const char* inputs_json, qautk_report** out) {
  qautk::Json inputs;
  const qautk_status parsed = guarded([&] {
    require(command != nullptr, "command is NULL");
    inputs = inputs_json == nullptr ? qautk::Json::object() : qautk::parse_json_text(inputs_json);
  });
  if (parsed != QAUTK_OK) return parsed;
  return run_json(command, inputs, out);
}

qautk_status qautk_ktheory(const uint64_t* dims, size_t n, qautk_report** out) {
  qautk::Json inputs;
  const qautk_status st = guarded([&] { inputs = dims_json(dims, n); });
  return st != QAUTK_OK ? st : run_json("ktheory", inputs, out);
}

qautk_status qautk_verify(const uint64_t* dims, size_t n, qautk_report** out) {
  qautk::Json inputs;
  const qautk_status st = guarded([&] { inputs = dims_json(dims, n); });
  return st != QAUTK_OK ? st : run_json("verify", inputs, out);
}

size_t qautk_command_count(void) { return qautk::command_names().size(); }

const char* qautk_command_name(size_t i) {
  static const std::vector<std::string> names = qautk::command_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

int qautk_report_passed(const qautk_report* r) { return r != nullptr && r->value.passed ? 1 : 0; }

qautk_status qautk_report_json(const qautk_report* r, int indent, char** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "NULL argument");
    *out = copy_string(r->value.body.dump(indent));
  });
}

size_t qautk_report_warning_count(const qautk_report* r) { return r == nullptr ? 0 : r->value.warnings.size(); }

const char* qautk_report_warning(const qautk_report* r, size_t i) {
  if (r == nullptr || i >= r->value.warnings.size()) return nullptr;
  return r->value.warnings[i].c_str();
}

void qautk_report_free(qautk_report* r) { delete r; }

}  // extern "C"

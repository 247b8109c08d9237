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


// Command-line front end. Every subcommand assembles a JSON inputs document, hands it to
// qautk_run, and prints the resulting report as JSON or as an aligned table.
//
// Exit codes: 0 success, 1 the computation did not confirm the expected result, 2 bad input.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qautk/qautk.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string dims;
  unsigned degree = 12;
  bool json = false;
  bool table = false;
  std::string input;
  std::string matrix;
  std::string density = "trace";
  std::string weights;
  std::size_t n = 4;
  std::size_t max_n_magic = 7;
  std::size_t max_n = 5;
  std::size_t max_k = 6;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// "-" reads standard input, text starting with '{' or '[' is taken literally, anything else is a path.
std::string read_source(const std::string& source) {
  if (source == "-") return read_all(std::cin);
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
  std::ifstream f(source);
  if (!f) throw InputError("cannot read " + source);
  return read_all(f);
}

Json parse_input_document(const std::string& source) {
  try {
    return Json::parse(read_source(source));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json dims_array(const std::string& text) {
  if (text.empty()) throw InputError("--dims is required, e.g. --dims 2,4");
  Json out = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    const std::string tok = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("invalid --dims entry \"" + tok + "\": expected comma-separated positive integers");
    }
    const unsigned long long v = std::stoull(tok);
    if (v == 0) throw InputError("invalid --dims entry \"0\": block sizes must be positive");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("--dims must list at least one block size");
  return out;
}

Json build_inputs(const std::string& command, const Options& o) {
  if (!o.input.empty()) return parse_input_document(o.input);
  Json in = Json::object();
  if (command == "ktheory" || command == "closed-form" || command == "verify" || command == "boundary") {
    in["dims"] = dims_array(o.dims);
  } else if (command == "resolution-check") {
    in["dims"] = dims_array(o.dims);
    in["degree"] = o.degree;
  } else if (command == "snf") {
    if (o.matrix.empty()) throw InputError("--matrix is required (a file, or - for standard input)");
    std::string text;
    if (o.matrix == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream f(o.matrix);
      if (!f) throw InputError("cannot read " + o.matrix);
      text = read_all(f);
    }
    in["matrix"] = text;
  } else if (command == "delta-form") {
    if (!o.weights.empty()) {
      Json w = Json::array();
      std::stringstream ss(o.weights);
      std::string item;
      while (std::getline(ss, item, ',')) w.push_back(item);
      in["block_sizes"] = o.dims.empty() ? Json(std::vector<int>(w.size(), 1)) : dims_array(o.dims);
      in["weights"] = w;
    } else {
      in["block_sizes"] = dims_array(o.dims);
      in["density"] = o.density;
    }
  } else if (command == "twisted-group" || command == "extract-torsion") {
    throw InputError("--input is required (JSON file, - for standard input, or inline JSON)");
  } else if (command == "magic-rank") {
    in["n"] = o.n;
    in["max_n"] = o.max_n_magic;
  } else if (command == "sweep") {
    in = {{"max_n", o.max_n}, {"max_k", o.max_k}, {"samples", o.samples}, {"seed", o.seed}, {"degree", o.degree}};
  }
  return in;
}

bool is_fg_group(const Json& v) {
  return v.is_object() && v.size() == 2 && v.contains("free") && v.contains("torsion");
}

std::string fg_text(const Json& v) {
  std::vector<std::string> parts;
  const auto free = v.at("free").get<std::size_t>();
  if (free == 1) parts.push_back("Z");
  if (free > 1) parts.push_back("Z^" + std::to_string(free));
  std::map<std::string, std::size_t> order;
  std::vector<std::string> seen;
  for (const auto& t : v.at("torsion")) {
    const std::string s = t.is_string() ? t.get<std::string>() : t.dump();
    if (order[s]++ == 0) seen.push_back(s);
  }
  for (const auto& s : seen) parts.push_back(order[s] == 1 ? "Z_" + s : "Z_" + s + "^" + std::to_string(order[s]));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (is_fg_group(v)) return fg_text(v);
  return v.dump();
}

bool is_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_array() || row.empty() || row.front().is_object() || row.front().is_array()) return false;
  return true;
}

void print_value(std::ostream& out, const std::string& key, const Json& v, std::size_t width, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string label = pad + key + std::string(width > key.size() ? width - key.size() : 0, ' ');
  if (is_matrix(v) && v.size() > 1) {
    out << pad << key << "\n";
    for (const auto& row : v) {
      out << pad << "  ";
      for (const auto& x : row) out << ' ' << scalar_text(x);
      out << "\n";
    }
  } else if (v.is_object() && !is_fg_group(v)) {
    out << pad << key << "\n";
    std::size_t w = 0;
    for (const auto& [k, x] : v.items()) w = std::max(w, k.size());
    for (const auto& [k, x] : v.items()) print_value(out, k, x, w + 2, depth + 1);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    out << pad << key << "\n";
    for (std::size_t i = 0; i < v.size(); ++i) print_value(out, "[" + std::to_string(i) + "]", v[i], 6, depth + 1);
  } else {
    out << label << "  " << scalar_text(v) << "\n";
  }
}

void print_table(std::ostream& out, const Json& report) {
  static const char* kMeta[] = {"command", "inputs", "passed", "warnings", "timing", "summary"};
  if (report.contains("summary")) out << report.at("summary").get<std::string>() << "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : report.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : report.items()) {
    if (std::find(std::begin(kMeta), std::end(kMeta), k) != std::end(kMeta)) continue;
    print_value(out, k, v, width + 2, 0);
  }
  for (const auto& w : report.at("warnings")) out << "warning: " << w.get<std::string>() << "\n";
  out << "status: " << (report.at("passed").get<bool>() ? "passed" : "FAILED") << "\n";
}

int execute(const std::string& command, const Options& o) {
  Json inputs;
  try {
    inputs = build_inputs(command, o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  qautk_report* report = nullptr;
  const qautk_status st = qautk_run(command.c_str(), inputs.dump().c_str(), &report);
  if (st != QAUTK_OK) {
    std::cerr << "error: " << qautk_last_error() << "\n";
    return st == QAUTK_INTERNAL_ERROR ? kExitFailed : kExitInput;
  }
  char* text = nullptr;
  if (qautk_report_json(report, -1, &text) != QAUTK_OK) {
    std::cerr << "error: " << qautk_last_error() << "\n";
    qautk_report_free(report);
    return kExitFailed;
  }
  const Json body = Json::parse(text);
  qautk_string_free(text);
  const bool passed = qautk_report_passed(report) != 0;
  qautk_report_free(report);

  const bool as_json = o.json || (!o.table && isatty(STDOUT_FILENO) == 0);
  if (as_json) {
    std::cout << body.dump(2) << "\n";
  } else {
    print_table(std::cout, body);
  }
  return passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-theory of quantum automorphism groups of finite dimensional C*-algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qautk_version()));
  Options o;

  auto output_flags = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json, "JSON output (default when standard output is not a terminal)");
    auto* t = sub->add_flag("--table", o.table, "Table output (default on terminals)");
    j->excludes(t);
    sub->add_option("--input", o.input, "JSON inputs: a file, - for standard input, or inline JSON");
  };
  auto dims_flag = [&](CLI::App* sub) {
    sub->add_option("--dims", o.dims, "Block sizes k_1,...,k_n (comma-separated positive integers)");
  };

  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    output_flags(sub);
    subs.emplace_back(name, sub);
    return sub;
  };

  dims_flag(add("ktheory", "K_0 and K_1 from the boundary map"));
  dims_flag(add("closed-form", "K-groups from the gcd formula"));
  dims_flag(add("verify", "Compare the boundary-map K-groups with the closed form"));
  dims_flag(add("boundary", "Print the boundary matrix"));
  auto* res = add("resolution-check", "Certify exactness of both truncated complexes");
  dims_flag(res);
  res->add_option("--degree", o.degree, "Truncation degree bound")->default_val(12)->check(CLI::Range(2u, 1000u));
  auto* snf = add("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", o.matrix, "Matrix text file (rows cols entries...), or - for standard input");
  auto* delta = add("delta-form", "Check whether a state is a delta-form");
  dims_flag(delta);
  delta->add_option("--density", o.density, "trace or plancherel")->check(CLI::IsMember({"trace", "plancherel"}));
  delta->add_option("--weights", o.weights, "State weights on C^n, e.g. 1/3,2/3");
  add("twisted-group", "Twisted group algebra of a cocycle and its block decomposition");
  add("extract-torsion", "Subgroup and cocycle of an ergodic graded algebra");
  auto* magic = add("magic-rank", "Rank of the degree-zero generators in K_0(C(S_n))");
  magic->add_option("--n", o.n, "Number of points")->default_val(4)->check(CLI::PositiveNumber);
  magic->add_option("--max-n", o.max_n_magic, "Refuse n above this cap")->default_val(7);
  auto* sweep = add("sweep", "Random dimension vectors through verify and resolution-check");
  sweep->add_option("--max-n", o.max_n, "Largest number of blocks")->default_val(5)->check(CLI::PositiveNumber);
  sweep->add_option("--max-k", o.max_k, "Largest block size")->default_val(6)->check(CLI::PositiveNumber);
  sweep->add_option("--samples", o.samples, "Number of samples")->default_val(20);
  sweep->add_option("--seed", o.seed, "Random seed")->default_val(0);
  sweep->add_option("--degree", o.degree, "Truncation degree bound")->default_val(12)->check(CLI::Range(2u, 1000u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) return execute(name, o);
  return kExitInput;
}

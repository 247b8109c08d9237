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


#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "error.hpp"
#include "ktheory.hpp"
#include "magic.hpp"
#include "resolution.hpp"
#include "smith.hpp"

namespace qautk {

namespace {

struct Outcome {
  Json results = Json::object();
  bool passed = true;
  std::vector<std::string> warnings;
};

DimVector dims_input(const Json& in) {
  if (!in.is_object() || !in.contains("dims")) fail(ErrorKind::Parse, "inputs need \"dims\"");
  const Json& d = in.at("dims");
  if (d.is_string()) return DimVector::parse(d.get<std::string>());
  if (!d.is_array()) fail(ErrorKind::Parse, "dims must be a list of positive integers");
  std::vector<std::uint64_t> k;
  for (const auto& v : d) {
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
      fail(ErrorKind::InvalidArgument, "dims must be positive integers, got " + v.dump());
    }
    k.push_back(v.get<std::uint64_t>());
  }
  return DimVector(std::move(k));
}

std::uint64_t uint_input(const Json& in, const char* key, std::uint64_t fallback) {
  if (!in.is_object() || !in.contains(key)) return fallback;
  const Json& v = in.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(ErrorKind::InvalidArgument, std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

Json k_groups(const FgAbelianGroup& k0, const FgAbelianGroup& k1) {
  return {{"K0", fg_group_to_json(k0)}, {"K1", fg_group_to_json(k1)}};
}

Json exactness_to_json(const ExactnessReport& r) {
  return {{"test_object", test_object_name(r.test)},
          {"exact", r.exact()},
          {"degree_bound", r.degree_bound},
          {"certified_degree", r.certified_degree},
          {"composition_zero", r.composition_zero},
          {"d1_injective", r.d1_injective},
          {"kernel_in_image", r.kernel_in_image},
          {"d0_surjective", r.d0_surjective},
          {"kernel_rank", r.kernel_rank},
          {"unreached", r.unreached},
          {"t_action", int_matrix_to_json(r.t_action)}};
}

Json block_json(const BlockDecomposition& b) {
  return {{"block_sizes", b.block_sizes}, {"center_dimension", b.center_dimension}};
}

Outcome run_ktheory(const Json& in) {
  const DimVector k = dims_input(in);
  const KTheoryResult r = k_theory(k);
  Outcome out;
  out.results = k_groups(r.k0, r.k1);
  out.results["K0_text"] = r.k0.to_string();
  out.results["K1_text"] = r.k1.to_string();
  out.results["kernel_generator"] = int_vector_to_json(r.kernel_generator);
  out.warnings = r.warnings;
  return out;
}

Outcome run_closed_form(const Json& in) {
  const DimVector k = dims_input(in);
  const auto [k0, k1] = closed_form(k);
  Outcome out;
  out.results = k_groups(k0, k1);
  out.results["K0_text"] = k0.to_string();
  out.results["K1_text"] = k1.to_string();
  out.results["gcd"] = bigint_to_json(k.gcd());
  if (k.below_theorem_scope()) out.warnings.push_back(k.scope_warning());
  return out;
}

Outcome run_verify(const Json& in) {
  const DimVector k = dims_input(in);
  const KTheoryResult r = k_theory(k);
  const auto [k0, k1] = closed_form(k);
  const IntVector expected = expected_kernel_generator(k);
  IntVector negated;
  for (const auto& v : expected) negated.push_back(-v);
  const bool groups_match = r.k0 == k0 && r.k1 == k1;
  const bool generator_match = r.kernel_generator == expected || r.kernel_generator == negated;
  Outcome out;
  out.passed = groups_match && generator_match;
  out.results["match"] = out.passed;
  out.results["computed"] = k_groups(r.k0, r.k1);
  out.results["closed_form"] = k_groups(k0, k1);
  out.results["kernel_generator"] = int_vector_to_json(r.kernel_generator);
  out.results["kernel_generator_match"] = generator_match;
  if (out.passed) {
    out.results["summary"] = "match: " + k0.to_string() + " / " + k1.to_string();
  } else {
    out.results["summary"] = "mismatch: computed " + r.k0.to_string() + " / " + r.k1.to_string() +
                             ", expected " + k0.to_string() + " / " + k1.to_string();
  }
  out.warnings = r.warnings;
  return out;
}

Outcome run_boundary(const Json& in) {
  const DimVector k = dims_input(in);
  const IntMatrix m = boundary_matrix(k);
  Outcome out;
  out.results["rows"] = m.rows();
  out.results["cols"] = m.cols();
  out.results["matrix"] = int_matrix_to_json(m);
  return out;
}

Outcome run_resolution_check(const Json& in) {
  const DimVector k = dims_input(in);
  const auto degree = uint_input(in, "degree", kDefaultDegreeBound);
  if (degree > 1000) fail(ErrorKind::InvalidArgument, "degree bound above 1000 is not supported");
  Outcome out;
  Json objects = Json::array();
  for (TestObject t : {TestObject::Scalars, TestObject::Algebra}) {
    const ExactnessReport r = check_exactness(k, t, static_cast<unsigned>(degree));
    objects.push_back(exactness_to_json(r));
    out.passed = out.passed && r.exact();
    for (const auto& w : r.warnings)
      if (std::find(out.warnings.begin(), out.warnings.end(), w) == out.warnings.end()) out.warnings.push_back(w);
  }
  out.results["objects"] = std::move(objects);
  out.results["exact"] = out.passed;
  return out;
}

Outcome run_snf(const Json& in) {
  if (!in.is_object() || !in.contains("matrix")) fail(ErrorKind::Parse, "inputs need \"matrix\"");
  const Json& mj = in.at("matrix");
  const IntMatrix a = mj.is_string() ? parse_matrix_text(mj.get<std::string>()) : int_matrix_from_json(mj);
  const SmithDecomposition snf = smith_normal_form(a);
  Outcome out;
  out.results["invariant_factors"] = int_vector_to_json(snf.invariant_factors);
  out.results["rank"] = snf.rank;
  out.results["cokernel"] = fg_group_to_json(cokernel(a));
  out.results["cokernel_text"] = cokernel(a).to_string();
  Json kernel = Json::array();
  for (const auto& v : kernel_basis(a)) kernel.push_back(int_vector_to_json(v));
  out.results["kernel_basis"] = std::move(kernel);
  return out;
}

Outcome run_delta_form(const Json& in) {
  const auto [a, w] = algebra_state_from_json(in);
  const DeltaFormResult r = is_delta_form(a, w);
  Outcome out;
  out.passed = r.is_delta_form;
  out.results["is_delta_form"] = r.is_delta_form;
  out.results["faithful"] = w.faithful();
  if (r.is_delta_form) {
    out.results["delta_squared"] = rational_to_json(r.delta_squared);
    out.results["delta"] = r.delta;
  } else if (r.witness) {
    Json image = Json::array();
    for (const auto& v : r.witness_image) image.push_back(complex_to_json(v));
    out.results["witness"] = {{"index", *r.witness}, {"label", r.witness_label}, {"image", std::move(image)}};
  }
  return out;
}

Outcome run_twisted_group(const Json& in) {
  if (!in.is_object()) fail(ErrorKind::Parse, "inputs must be an object with \"group\" and \"cocycle\"");
  const FiniteGroup g = group_from_json(in.contains("group") ? in.at("group") : Json());
  const Cocycle w = cocycle_from_json(in.contains("cocycle") ? in.at("cocycle") : Json(), g);
  const GradedAlgebra b = twisted_group_algebra(w);
  const BlockDecomposition blocks = block_decomposition(b.algebra());
  Outcome out;
  out.results["algebra"] = graded_algebra_to_json(b);
  out.results["blocks"] = block_json(blocks);
  out.results["regular_class_count"] = w.regular_class_count();
  out.passed = blocks.center_dimension == w.regular_class_count();
  out.results["consistent"] = out.passed;
  return out;
}

Outcome run_extract_torsion(const Json& in) {
  const GradedAlgebra b = graded_algebra_from_json(in);
  const TorsionData t = extract_torsion_data(b);
  const BlockDecomposition blocks = block_decomposition(b.algebra());
  Outcome out;
  out.results["ergodic"] = true;
  out.results["subgroup"] = group_to_json(t.subgroup);
  out.results["embedding"] = t.embedding;
  out.results["cocycle"] = cocycle_to_json(t.cocycle);
  out.results["regular_class_count"] = t.cocycle.regular_class_count();
  out.results["blocks"] = block_json(blocks);
  out.passed = blocks.center_dimension == t.cocycle.regular_class_count();
  out.results["consistent"] = out.passed;
  return out;
}

Outcome run_magic_rank(const Json& in) {
  const auto n = uint_input(in, "n", 4);
  const auto max_n = uint_input(in, "max_n", kDefaultMagicMaxN);
  const GeneratorRank r = generator_rank(n, max_n);
  const std::size_t expected = n >= 2 ? (n - 1) * (n - 1) + 1 : 1;
  Outcome out;
  out.results["full_rank"] = r.full_rank;
  out.results["restricted_rank"] = r.restricted_rank;
  out.results["expected_rank"] = expected;
  out.results["saturated"] = r.saturated;
  out.results["spans_equal"] = r.spans_equal;
  out.passed = r.full_rank == expected && r.restricted_rank == expected && r.spans_equal;
  return out;
}

Outcome run_sweep(const Json& in) {
  const auto max_n = uint_input(in, "max_n", 5);
  const auto max_k = uint_input(in, "max_k", 6);
  const auto samples = uint_input(in, "samples", 20);
  const auto seed = uint_input(in, "seed", 0);
  const auto degree = uint_input(in, "degree", kDefaultDegreeBound);
  if (max_n == 0 || max_k == 0) fail(ErrorKind::InvalidArgument, "max_n and max_k must be positive");
  if (degree > 1000) fail(ErrorKind::InvalidArgument, "degree bound above 1000 is not supported");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_n(1, max_n), pick_k(1, max_k);
  Outcome out;
  Json rows = Json::array();
  std::size_t failures = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<std::uint64_t> kv(pick_n(rng));
    for (auto& v : kv) v = pick_k(rng);
    const DimVector k(kv);
    const bool theorem = verify_theorem(k);
    const bool exact_c = check_exactness(k, TestObject::Scalars, static_cast<unsigned>(degree)).exact();
    const bool exact_a = check_exactness(k, TestObject::Algebra, static_cast<unsigned>(degree)).exact();
    const bool ok = theorem && exact_c && exact_a;
    if (!ok) ++failures;
    rows.push_back({{"dims", kv}, {"verify", theorem}, {"exact_C", exact_c}, {"exact_A", exact_a}});
  }
  out.results["samples"] = std::move(rows);
  out.results["failures"] = failures;
  out.passed = failures == 0;
  return out;
}

using Runner = std::function<Outcome(const Json&)>;

const std::map<std::string, Runner, std::less<>>& runners() {
  static const std::map<std::string, Runner, std::less<>> table = {
      {"ktheory", run_ktheory},
      {"closed-form", run_closed_form},
      {"verify", run_verify},
      {"boundary", run_boundary},
      {"resolution-check", run_resolution_check},
      {"snf", run_snf},
      {"delta-form", run_delta_form},
      {"twisted-group", run_twisted_group},
      {"extract-torsion", run_extract_torsion},
      {"magic-rank", run_magic_rank},
      {"sweep", run_sweep},
  };
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : runners()) names.push_back(name);
  return names;
}

RunReport run_command(std::string_view command, const Json& inputs) {
  const auto it = runners().find(command);
  if (it == runners().end()) fail(ErrorKind::InvalidArgument, "unknown command: " + std::string(command));
  const auto start = std::chrono::steady_clock::now();
  Outcome o = it->second(inputs);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  RunReport report;
  report.passed = o.passed;
  report.warnings = o.warnings;
  report.body = Json::object();
  report.body["command"] = std::string(command);
  report.body["inputs"] = inputs;
  for (auto& [key, value] : o.results.items()) report.body[key] = value;
  report.body["passed"] = o.passed;
  report.body["warnings"] = o.warnings;
  report.body["timing"] = {{"seconds", elapsed.count()}};
  return report;
}

Json report_results(const Json& body) {
  Json out = body;
  out.erase("timing");
  return out;
}

}  // namespace qautk

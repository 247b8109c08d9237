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


#ifndef QAUTK_REPORT_HPP_
#define QAUTK_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json_io.hpp"

namespace qautk {

/// Outcome of one command. `body` carries "command", "inputs", the results, "passed",
/// "warnings" and "timing"; feeding body["inputs"] back to run_command reproduces everything
/// except "timing".
struct RunReport {
  Json body;
  bool passed = true;
  std::vector<std::string> warnings;
};

/// Commands: ktheory, closed-form, verify, boundary, resolution-check, snf, delta-form,
/// twisted-group, extract-torsion, magic-rank, sweep.
std::vector<std::string> command_names();

/// Runs a command on its JSON inputs. Input problems surface as Error; a computation that
/// completes but does not confirm the expected statement sets passed = false.
RunReport run_command(std::string_view command, const Json& inputs);

/// Result keys of a report body (everything except "timing").
Json report_results(const Json& body);

}  // namespace qautk

#endif  // QAUTK_REPORT_HPP_

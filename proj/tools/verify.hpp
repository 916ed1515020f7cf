/* Copyright 2026 The hypj Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

// The invariant suites run by `hypj verify`, and their JSON report.

#ifndef HYPJ_TOOLS_VERIFY_HPP
#define HYPJ_TOOLS_VERIFY_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace hypj::cli {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    std::string anchor;  // the mathematical statement being checked
    CheckStatus status = CheckStatus::Fail;
    std::string details;
    long long elapsed_ms = 0;
};

struct VerifyConfig {
    int genus = 2;
    std::vector<std::string> modules;  // empty: all
    bool slow = false;
    unsigned threads = 1;
};

/// symplectic, free_lie, derivations, monodromy, span, rep_dims
const std::vector<std::string>& module_names();

/// Runs the selected checks on up to config.threads workers; results are
/// sorted by name.
std::vector<CheckResult> run_verification(const VerifyConfig& config);

/// True iff no check failed.
bool all_passed(const std::vector<CheckResult>& results);

nlohmann::ordered_json report_json(const VerifyConfig& config, const std::vector<CheckResult>& results);

/// HYPJ_THREADS if set to a positive integer, else the hardware concurrency.
unsigned threads_from_environment();

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace hypj::cli

#endif  // HYPJ_TOOLS_VERIFY_HPP

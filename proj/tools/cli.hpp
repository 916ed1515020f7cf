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

// Entry point of the hypj command-line tool, callable in-process for tests.

#ifndef HYPJ_TOOLS_CLI_HPP
#define HYPJ_TOOLS_CLI_HPP

#include <ostream>

namespace hypj::cli {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypj::cli

#endif  // HYPJ_TOOLS_CLI_HPP

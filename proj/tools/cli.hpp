// Copyright 2026 The covmub Authors
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

#ifndef COVMUB_TOOLS_CLI_HPP
#define COVMUB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace covmub {

inline constexpr const char *tool_version = "0.1.0";

enum ExitCode : int {
    exit_ok = 0,
    exit_invalid_config = 2,
    exit_construction_failure = 3,
    exit_verification_failure = 4,
};

/// Runs the command line tool; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace covmub

#endif

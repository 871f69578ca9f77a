// Copyright 2026 The qdsc Authors
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

#ifndef QDSC_TOOLS_CLI_COMMANDS_H
#define QDSC_TOOLS_CLI_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qdsc::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kPrecondition = 3,
    kDefect = 4,
    kMissingData = 5,
};

/// Runs the tool on `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdsc::cli

#endif

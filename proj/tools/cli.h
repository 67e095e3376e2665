// Copyright 2026 The Polymat Authors.
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

#ifndef POLYMAT_TOOLS_CLI_H_
#define POLYMAT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace polymat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitMalformedInput = 2;
inline constexpr int kExitCrossCheckMismatch = 3;

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code. `in` backs the "-" input path.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace polymat::cli

#endif  // POLYMAT_TOOLS_CLI_H_

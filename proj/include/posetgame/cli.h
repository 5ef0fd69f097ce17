// Copyright 2026 The posetgame Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSETGAME_CLI_H_
#define POSETGAME_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace posetgame {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitResourceLimit = 3;

// Runs one command. `args` includes the program name. Results go to `out`,
// diagnostics to `err`, and "-" as an input path reads `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace posetgame

#endif  // POSETGAME_CLI_H_

// Copyright 2026 The ghzlhv Authors
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

#ifndef GHZLHV_TOOLS_COMMANDS_H
#define GHZLHV_TOOLS_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace ghzlhv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the `ghzlhv` binary and the tests. `args` excludes the program name.
///
/// Subcommands: table, classify, protocol, verify, tableau. Returns 0 on success or agreement,
/// 1 when a verification or agreement check fails, 2 on usage or parse errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ghzlhv::cli

#endif

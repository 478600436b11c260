// Copyright 2026 The amrsmith Authors.
//
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

// The `amrsmith` command line, callable in-process.

#ifndef AMRSMITH_CLI_H_
#define AMRSMITH_CLI_H_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "amrsmith/smatch.h"

namespace amrsmith {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one command. `args` excludes the program name. Results go to `out`,
// progress and diagnostics to `err`. Paths given as "-" mean standard
// input or `out`.
int Dispatch(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err);

// `key = value` lines; '#' starts a comment. Throws Error(kIo) if the file
// cannot be read and Error(kMalformedEntry) for a line without '='.
std::vector<std::pair<std::string, std::string>> ReadConfigFile(const std::string &path);

// `P 0.1234 R 0.5678 F 0.9012`
std::string FormatScore(const ScoreReport &report);

}  // namespace amrsmith

#endif  // AMRSMITH_CLI_H_

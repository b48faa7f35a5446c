// Copyright 2026 The wcrte Authors
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

#ifndef WCRTE_CLI_H_
#define WCRTE_CLI_H_

#include <iosfwd>

namespace wcrte::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseFailure = 2;
inline constexpr int kDomainFailure = 3;
inline constexpr int kNumericFailure = 4;

// Entry point of the `wcrte` command line tool. Subcommands: estimate,
// mse-study, critical-values, power, verify-tables.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace wcrte::cli

#endif  // WCRTE_CLI_H_

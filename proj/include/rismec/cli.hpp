// Copyright 2026 The rismec Authors
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

#ifndef RISMEC_CLI_HPP
#define RISMEC_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace rismec {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int runtime_failure = 1;
inline constexpr int bad_argument = 2;
inline constexpr int scenario_unreadable = 3;
inline constexpr int scenario_invalid = 4;
inline constexpr int output_unwritable = 5;
} // namespace exit_code

// args excludes the program name
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace rismec

#endif

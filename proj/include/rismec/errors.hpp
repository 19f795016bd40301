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

#ifndef RISMEC_ERRORS_HPP
#define RISMEC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rismec {

class ContractViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Malformed scenario document (syntax, unknown key, wrong value type).
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// One broken invariant found by validate().
struct Violation
{
    std::string code;   // e.g. RIS_ELEMENTS_NONPOSITIVE
    std::string field;  // e.g. rises[2].n_elements
    std::string message;

    bool operator==(const Violation&) const = default;
};

// A scenario failed validation; carries every violation found.
class ValidationError : public std::runtime_error
{
public:
    explicit ValidationError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

// Result emission failure. code() is a stable identifier such as EMPTY_RESULTS.
class ResultsError : public std::runtime_error
{
public:
    ResultsError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code))
    {
    }

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace rismec

#endif

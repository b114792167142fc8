// Copyright 2026 The qprime Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qprime {

enum class ErrorKind {
    RangeTooLarge,   // input exceeds the configured sieve ceiling or a size guard
    InvalidArgument, // precondition violated (odd where even required, too small, ...)
    Domain,          // model evaluated where it is singular (ln 1 = 0)
    NotApplicable,   // the predicate does not cover this input (e.g. 2n+1 composite)
    ExactCapExceeded // the inclusion-exclusion engine refuses x above its cap
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qprime

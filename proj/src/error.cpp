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

#include "qprime/error.hpp"

namespace qprime {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::RangeTooLarge: return "range-too-large";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::ExactCapExceeded: return "exact-cap-exceeded";
    }
    return "unknown";
}

} // namespace qprime

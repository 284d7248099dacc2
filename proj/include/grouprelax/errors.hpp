// Copyright 2026 The grouprelax Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace grouprelax {

enum class ErrorKind {
  kInfeasible,
  kUnbounded,
  kNotPureILP,
  kMalformedInput,
  kCapExceeded,
  kDenseLimitExceeded,
  kPatternLimitExceeded,
  kEmptyWidthBand,
  kInvalidArgument,
  kDiagnosticUnavailable,
  kInternalFault,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

// Process exit code used by the command line tool.
int exit_code_for(ErrorKind kind);

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInternalFault, what);
}

}  // namespace grouprelax

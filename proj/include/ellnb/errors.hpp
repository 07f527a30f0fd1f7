// Copyright 2026 The ellnb Authors.
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
#include <string_view>

namespace ellnb {

enum class ErrorKind {
  kCompositeCharacteristic,
  kReducibleModulus,
  kDivisionByZero,
  kScaleExceeded,
  kPoleEvaluation,
  kVerticalSlope,
  kDegenerateSlope,
  kNoSafeEvaluationPoint,
  kKernelOrderMismatch,
  kDegreeCollapse,
  kNoGeneratorFound,
  kNoTorsionPoint,
  kNoScalarSolution,
  kFrobeniusConditionFailed,
  kNotABasis,
  kNoAuxiliaryPoint,
  kParameterSearchExhausted,
  kLengthMismatch,
  kNotInvertible,
  kInvalidArgument,
  kSingularCurve,
  kNotOnCurve,
  kConsistencyFailure,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace ellnb

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

#include "ellnb/errors.hpp"

namespace ellnb {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::kReducibleModulus: return "ReducibleModulus";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kScaleExceeded: return "ScaleExceeded";
    case ErrorKind::kPoleEvaluation: return "PoleEvaluation";
    case ErrorKind::kVerticalSlope: return "VerticalSlope";
    case ErrorKind::kDegenerateSlope: return "DegenerateSlope";
    case ErrorKind::kNoSafeEvaluationPoint: return "NoSafeEvaluationPoint";
    case ErrorKind::kKernelOrderMismatch: return "KernelOrderMismatch";
    case ErrorKind::kDegreeCollapse: return "DegreeCollapse";
    case ErrorKind::kNoGeneratorFound: return "NoGeneratorFound";
    case ErrorKind::kNoTorsionPoint: return "NoTorsionPoint";
    case ErrorKind::kNoScalarSolution: return "NoScalarSolution";
    case ErrorKind::kFrobeniusConditionFailed: return "FrobeniusConditionFailed";
    case ErrorKind::kNotABasis: return "NotABasis";
    case ErrorKind::kNoAuxiliaryPoint: return "NoAuxiliaryPoint";
    case ErrorKind::kParameterSearchExhausted: return "ParameterSearchExhausted";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kNotInvertible: return "NotInvertible";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kSingularCurve: return "SingularCurve";
    case ErrorKind::kNotOnCurve: return "NotOnCurve";
    case ErrorKind::kConsistencyFailure: return "ConsistencyFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace ellnb

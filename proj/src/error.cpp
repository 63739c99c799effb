//  Copyright 2026 The lgroup Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "lgroup/error.hpp"

namespace lgroup {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kNotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kInvalidTable: return "InvalidTable";
    case ErrorCode::kClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::kNotASubgroup: return "NotASubgroup";
    case ErrorCode::kNotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::kIllDefinedOnGenerators: return "IllDefinedOnGenerators";
    case ErrorCode::kMixedCarriers: return "MixedCarriers";
    case ErrorCode::kNotAnLSubgroup: return "NotAnLSubgroup";
    case ErrorCode::kNotContained: return "NotContained";
    case ErrorCode::kPointNotInAmbient: return "PointNotInAmbient";
    case ErrorCode::kTipMismatch: return "TipMismatch";
    case ErrorCode::kNotProper: return "NotProper";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kNotAChain: return "NotAChain";
    case ErrorCode::kNotDistributive: return "NotDistributive";
    case ErrorCode::kNotMaximal: return "NotMaximal";
    case ErrorCode::kBoundsExceeded: return "BoundsExceeded";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kCheckFailed: return "CheckFailed";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lgroup

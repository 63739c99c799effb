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

#ifndef LGROUP_ERROR_HPP_
#define LGROUP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgroup {

// Numeric values are part of the C ABI (see lgroup.h); append only.
enum class ErrorCode : int {
  kOk = 0,
  kNotAPartialOrder = 1,
  kNotALattice = 2,
  kDuplicateLabel = 3,
  kInvalidTable = 4,
  kClosureTooLarge = 5,
  kNotASubgroup = 6,
  kNotAHomomorphism = 7,
  kIllDefinedOnGenerators = 8,
  kMixedCarriers = 9,
  kNotAnLSubgroup = 10,
  kNotContained = 11,
  kPointNotInAmbient = 12,
  kTipMismatch = 13,
  kNotProper = 14,
  kSearchSpaceTooLarge = 15,
  kNotAChain = 16,
  kNotDistributive = 17,
  kNotMaximal = 18,
  kBoundsExceeded = 19,
  kUnknownSuite = 20,
  kParseError = 21,
  kSchemaError = 22,
  kUnknownName = 23,
  kInvalidArgument = 24,
  kCheckFailed = 25,
  kInternal = 26,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Schema failures carry a JSON-pointer-style location.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(ErrorCode::kSchemaError, path + ": " + what),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace lgroup

#endif  // LGROUP_ERROR_HPP_

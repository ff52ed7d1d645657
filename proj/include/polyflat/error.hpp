// Copyright 2026 The polyflat Authors
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
#include <string_view>

namespace polyflat {

enum class ErrorKind {
  kInvalidGroundSet,
  kSubsetOutOfRange,
  kTableSize,
  kNegativeSingleton,
  kNotAFlat,
  kDuplicateElement,
  kNotALattice,
  kNegativeRank,
  kElementNotInLattice,
  kGroundSetMismatch,
  kBadParameters,
  kNotInteger,
  kNotPolymatroid,
  kRankMismatch,
  kGroundOverlap,
  kLabelCollision,
  kParse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidGroundSet: return "InvalidGroundSet";
    case ErrorKind::kSubsetOutOfRange: return "SubsetOutOfRange";
    case ErrorKind::kTableSize: return "TableSize";
    case ErrorKind::kNegativeSingleton: return "NegativeSingleton";
    case ErrorKind::kNotAFlat: return "NotAFlat";
    case ErrorKind::kDuplicateElement: return "DuplicateElement";
    case ErrorKind::kNotALattice: return "NotALattice";
    case ErrorKind::kNegativeRank: return "NegativeRank";
    case ErrorKind::kElementNotInLattice: return "ElementNotInLattice";
    case ErrorKind::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorKind::kBadParameters: return "BadParameters";
    case ErrorKind::kNotInteger: return "NotInteger";
    case ErrorKind::kNotPolymatroid: return "NotPolymatroid";
    case ErrorKind::kRankMismatch: return "RankMismatch";
    case ErrorKind::kGroundOverlap: return "GroundOverlap";
    case ErrorKind::kLabelCollision: return "LabelCollision";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

// Every recoverable failure in the library is reported through this type;
// kind() is stable and meant for programmatic dispatch.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polyflat

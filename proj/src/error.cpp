// Copyright 2026 The hyperideal Authors
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

#include "hyperideal/error.hpp"

namespace hyperideal {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedDocument:
      return "MalformedDocument";
    case ErrorCode::MissingEntry:
      return "MissingEntry";
    case ErrorCode::DuplicateEntry:
      return "DuplicateEntry";
    case ErrorCode::UnknownElement:
      return "UnknownElement";
    case ErrorCode::EmptyHyperValue:
      return "EmptyHyperValue";
    case ErrorCode::ArityOutOfRange:
      return "ArityOutOfRange";
    case ErrorCode::ArityMismatch:
      return "ArityMismatch";
    case ErrorCode::EmptySubset:
      return "EmptySubset";
    case ErrorCode::RingMismatch:
      return "RingMismatch";
    case ErrorCode::OrderLimitExceeded:
      return "OrderLimitExceeded";
    case ErrorCode::AxiomFailure:
      return "AxiomFailure";
    case ErrorCode::NotARing:
      return "NotARing";
    case ErrorCode::NotAHyperideal:
      return "NotAHyperideal";
    case ErrorCode::ImproperIdeal:
      return "ImproperIdeal";
    case ErrorCode::NotMultiplicative:
      return "NotMultiplicative";
    case ErrorCode::HypothesisViolation:
      return "HypothesisViolation";
    case ErrorCode::InternalContradiction:
      return "InternalContradiction";
    case ErrorCode::CosetsNotPartition:
      return "CosetsNotPartition";
    case ErrorCode::InducedOpIllDefined:
      return "InducedOpIllDefined";
    case ErrorCode::UnknownTheorem:
      return "UnknownTheorem";
    case ErrorCode::UnknownFixture:
      return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace hyperideal

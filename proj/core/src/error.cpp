// Copyright 2026 The storient Authors
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

#include "storient/error.hpp"

namespace storient {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kEulerViolation: return "EulerViolation";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kCyclicInput: return "CyclicInput";
    case ErrorCode::kNotBipolarFace: return "NotBipolarFace";
    case ErrorCode::kInvalidOrientation: return "InvalidOrientation";
    case ErrorCode::kInconsistentLabeling: return "InconsistentLabeling";
    case ErrorCode::kNegativeCount: return "NegativeCount";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace storient

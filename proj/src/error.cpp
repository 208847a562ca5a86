// Copyright 2026 The whgraph Authors
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

#include "whgraph/error.hpp"

namespace wh {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNTooSmall: return "NTooSmall";
    case ErrorCode::kDegenerateA: return "DegenerateA";
    case ErrorCode::kRepeatedBCD: return "RepeatedBCD";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kQNotCoprime: return "QNotCoprime";
    case ErrorCode::kKNotDivisor: return "KNotDivisor";
    case ErrorCode::kNotATwoPath: return "NotATwoPath";
    case ErrorCode::kHypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::kMNotOddOrTooSmall: return "MNotOddOrTooSmall";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kNoNormalization: return "NoNormalization";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kPathNotRed: return "PathNotRed";
    case ErrorCode::kNotVertexTransitive: return "NotVertexTransitive";
    case ErrorCode::kOrderOverflow: return "OrderOverflow";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace wh

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

#ifndef WHGRAPH_ERROR_HPP_
#define WHGRAPH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wh {

enum class ErrorCode {
  kNTooSmall,
  kDegenerateA,
  kRepeatedBCD,
  kDisconnected,
  kQNotCoprime,
  kKNotDivisor,
  kNotATwoPath,
  kHypothesesNotMet,
  kMNotOddOrTooSmall,
  kLengthMismatch,
  kDomainMismatch,
  kNoNormalization,
  kNotNormalized,
  kPathNotRed,
  kNotVertexTransitive,
  kOrderOverflow,
  kParse,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Every recoverable failure in the library is reported through this type. The
// code identifies the violated condition; what() carries a readable message.
class WhError : public std::runtime_error {
 public:
  WhError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wh

#endif  // WHGRAPH_ERROR_HPP_

// Copyright 2026 The mawstream Authors
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

#ifndef MAWSTREAM_ERROR_HPP_
#define MAWSTREAM_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mawstream {

enum class ErrorCode {
  kByteOutsideAlphabet,
  kEmptyInput,
  kMalformedFasta,
  kBadBlockCount,
  kIndexOutOfRange,
  kSentinelCollision,
  kTooManyTexts,
  kWeightOutOfRange,
  kPatternsNotPrefixFree,
  kInvalidArgument,
  kIo,
  kInternalInvariant,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this exception type. The code is
// stable and is what tests match on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by ingestion when a non-whitespace byte is not an alphabet letter.
class ByteOutsideAlphabet : public Error {
 public:
  ByteOutsideAlphabet(std::size_t position, unsigned char byte);

  std::size_t position() const noexcept { return position_; }
  unsigned char byte() const noexcept { return byte_; }

 private:
  std::size_t position_;
  unsigned char byte_;
};

}  // namespace mawstream

#endif  // MAWSTREAM_ERROR_HPP_

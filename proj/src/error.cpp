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

#include "mawstream/error.hpp"

#include <cctype>
#include <cstdio>

namespace mawstream {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kByteOutsideAlphabet: return "ByteOutsideAlphabet";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kMalformedFasta: return "MalformedFasta";
    case ErrorCode::kBadBlockCount: return "BadBlockCount";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSentinelCollision: return "SentinelCollision";
    case ErrorCode::kTooManyTexts: return "TooManyTexts";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kPatternsNotPrefixFree: return "PatternsNotPrefixFree";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

namespace {

std::string describe_byte(std::size_t position, unsigned char byte) {
  char buf[64];
  if (std::isprint(byte)) {
    std::snprintf(buf, sizeof(buf), "byte '%c' at position %zu", byte, position);
  } else {
    std::snprintf(buf, sizeof(buf), "byte 0x%02x at position %zu", byte, position);
  }
  return buf;
}

}  // namespace

ByteOutsideAlphabet::ByteOutsideAlphabet(std::size_t position, unsigned char byte)
    : Error(ErrorCode::kByteOutsideAlphabet, describe_byte(position, byte)),
      position_(position),
      byte_(byte) {}

}  // namespace mawstream

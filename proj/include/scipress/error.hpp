// Copyright 2026 The SciPress Authors.
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

#ifndef SCIPRESS_ERROR_HPP_
#define SCIPRESS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scipress {

enum class ErrorCode {
  kEmptyText,
  kParseError,
  kDuplicateId,
  kEmptyCorpus,
  kDanglingAnnotation,
  kInvalidAnnotation,
  kNoWords,
  kEmptySummary,
  kTooShort,
  kEmptyClass,
  kLengthMismatch,
  kEmptyDoc,
  kEmptyReference,
  kInvalidConfig,
  kLabelMismatch,
  kPlanMismatch,
  kMissingPrediction,
  kUnknownTask,
  kInvalidSelection,
  kEmptyJudgments,
  kInsufficientData,
  kIo,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kDanglingAnnotation: return "DanglingAnnotation";
    case ErrorCode::kInvalidAnnotation: return "InvalidAnnotation";
    case ErrorCode::kNoWords: return "NoWords";
    case ErrorCode::kEmptySummary: return "EmptySummary";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kEmptyClass: return "EmptyClass";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyDoc: return "EmptyDoc";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kPlanMismatch: return "PlanMismatch";
    case ErrorCode::kMissingPrediction: return "MissingPrediction";
    case ErrorCode::kUnknownTask: return "UnknownTask";
    case ErrorCode::kInvalidSelection: return "InvalidSelection";
    case ErrorCode::kEmptyJudgments: return "EmptyJudgments";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

// Every failure in the library is reported through this type. `line()` is
// non-zero only for errors raised while reading a line-oriented file.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail, std::size_t line = 0)
      : std::runtime_error(Format(code, detail, line)),
        code_(code),
        detail_(detail),
        line_(line) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }
  std::size_t line() const { return line_; }

 private:
  static std::string Format(ErrorCode code, const std::string& detail,
                            std::size_t line) {
    std::string out(ErrorCodeName(code));
    if (line > 0) out += "(line=" + std::to_string(line) + ")";
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  ErrorCode code_;
  std::string detail_;
  std::size_t line_;
};

}  // namespace scipress

#endif  // SCIPRESS_ERROR_HPP_

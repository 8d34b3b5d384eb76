// Copyright 2026 The treesum Authors.
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

#ifndef TREESUM_ERROR_HPP_
#define TREESUM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace treesum {

enum class ErrorCode {
  kEmptyTree,
  kMultipleRoots,
  kUnknownParent,
  kCycleDetected,
  kNegativeWeight,
  kDuplicateLabel,
  kAlreadySelected,
  kTooLargeForOracle,
  kEmptySelection,
  kRootLabelMismatch,
  kNoAnchor,
  kParseError,
  kInvalidArgument,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyTree: return "EmptyTree";
    case ErrorCode::kMultipleRoots: return "MultipleRoots";
    case ErrorCode::kUnknownParent: return "UnknownParent";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kAlreadySelected: return "AlreadySelected";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kRootLabelMismatch: return "RootLabelMismatch";
    case ErrorCode::kNoAnchor: return "NoAnchor";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All library failures surface as this exception. `subject` carries the
// offending label, flag or record when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string subject, const std::string& detail = {})
      : std::runtime_error(format(code, subject, detail)),
        code_(code),
        subject_(std::move(subject)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  static std::string format(ErrorCode code, const std::string& subject,
                            const std::string& detail) {
    std::string msg(error_code_name(code));
    if (!subject.empty()) msg += "(" + subject + ")";
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  ErrorCode code_;
  std::string subject_;
};

}  // namespace treesum

#endif  // TREESUM_ERROR_HPP_

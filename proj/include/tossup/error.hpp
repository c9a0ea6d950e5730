#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tossup {

enum class ErrorCode {
  MalformedFile,
  DuplicateId,
  CycleDetected,
  EmptyCorpus,
  EmptyScores,
  UnknownAnswer,
  WrongGrouping,
  OutOfOrderEvaluation,
  InsufficientLabels,
  SessionFinalized,
  EditAfterDeadline,
  EmptyDraft,
  StaleReport,
  UnknownSession,
  EnginesNotReady,
  InvalidConfig,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptyScores: return "EmptyScores";
    case ErrorCode::UnknownAnswer: return "UnknownAnswer";
    case ErrorCode::WrongGrouping: return "WrongGrouping";
    case ErrorCode::OutOfOrderEvaluation: return "OutOfOrderEvaluation";
    case ErrorCode::InsufficientLabels: return "InsufficientLabels";
    case ErrorCode::SessionFinalized: return "SessionFinalized";
    case ErrorCode::EditAfterDeadline: return "EditAfterDeadline";
    case ErrorCode::EmptyDraft: return "EmptyDraft";
    case ErrorCode::StaleReport: return "StaleReport";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::EnginesNotReady: return "EnginesNotReady";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

// All library failures surface as this exception; `code()` is the stable,
// machine-readable part and is what the HTTP layer serializes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tossup

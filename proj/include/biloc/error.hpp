#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biloc {

enum class ErrorCode {
  InvalidInput,
  CycleInOrder,
  NotALattice,
  NotAFrame,
  TooLarge,
  MixedParents,
  NotASubframe,
  GenerationFails,
  NotInPart,
  NotMeetPreserving,
  AdjointNotFrameHom,
  PartViolation,
  NotATopology,
  HypothesisViolated,
  UnknownCheckId,
  ParseError,
  UnknownVerb,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::CycleInOrder: return "CycleInOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MixedParents: return "MixedParents";
    case ErrorCode::NotASubframe: return "NotASubframe";
    case ErrorCode::GenerationFails: return "GenerationFails";
    case ErrorCode::NotInPart: return "NotInPart";
    case ErrorCode::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorCode::AdjointNotFrameHom: return "AdjointNotFrameHom";
    case ErrorCode::PartViolation: return "PartViolation";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::UnknownCheckId: return "UnknownCheckId";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVerb: return "UnknownVerb";
  }
  return "Unknown";
}

}  // namespace biloc

#pragma once

#include <stdexcept>
#include <string>

namespace invdmod {

/// Failure categories surfaced to callers (and mapped to CLI exit codes).
enum class ErrorCode {
  InvalidRank,
  InvalidArgument,
  GroupMismatch,
  DimensionMismatch,
  IrrationalSpectrum,
  NonSemisimpleTuple,
  NotFlat,
  NonUnitDeterminant,
  NonCommutingData,
  UnsupportedSize,
  MalformedInput,
  Overflow,
  ResourceLimit,
};

const char* to_string(ErrorCode c);

/// Domain error carrying a stable machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IrrationalSpectrum: return "IrrationalSpectrum";
    case ErrorCode::NonSemisimpleTuple: return "NonSemisimpleTuple";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::NonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorCode::NonCommutingData: return "NonCommutingData";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

}  // namespace invdmod

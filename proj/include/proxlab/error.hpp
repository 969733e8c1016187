#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace proxlab {

enum class ErrorCode {
  UniverseMismatch,
  InvalidArgument,
  RepresentationLimit,
  EmptyInput,
  WrongUniverseKind,
  UnsupportedKind,
  NotStronglyBelow,
  NoWitnessFound,
  ArityMismatch,
  NotZeroDimensional,
  NotAChain,
  ChainOnlyProbed,
  PreconditionNotEstablished,
  PreconditionFailed,
  LimitNotComputable,
  TargetUnsupported,
  SourceNotSigma,
  NotOpen,
  NotFinitelyAtomic,
  NotAnIdeal,
  NotMeasurable,
};

constexpr std::string_view code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RepresentationLimit: return "RepresentationLimit";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::WrongUniverseKind: return "WrongUniverseKind";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::NotStronglyBelow: return "NotStronglyBelow";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::ChainOnlyProbed: return "ChainOnlyProbed";
    case ErrorCode::PreconditionNotEstablished: return "PreconditionNotEstablished";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::LimitNotComputable: return "LimitNotComputable";
    case ErrorCode::TargetUnsupported: return "TargetUnsupported";
    case ErrorCode::SourceNotSigma: return "SourceNotSigma";
    case ErrorCode::NotOpen: return "NotOpen";
    case ErrorCode::NotFinitelyAtomic: return "NotFinitelyAtomic";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotMeasurable: return "NotMeasurable";
  }
  return "Unknown";
}

/// Every refusal in the library is an Error carrying a stable code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace proxlab

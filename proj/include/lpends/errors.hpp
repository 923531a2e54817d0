// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lpends {

enum class ErrorCode {
  InvalidWarp,
  NotTemperate,
  GridTooCoarse,
  InvalidMode,
  DomainError,
  EigenFailure,
  InvalidIndex,
  OutOfDomain,
  NoParent,
  AdmissibilityError,
  ResolutionError,
  PreconditionError,
  ConfigError,
  IoError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidWarp: return "InvalidWarp";
    case ErrorCode::NotTemperate: return "NotTemperate";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InvalidMode: return "InvalidMode";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NoParent: return "NoParent";
    case ErrorCode::AdmissibilityError: return "AdmissibilityError";
    case ErrorCode::ResolutionError: return "ResolutionError";
    case ErrorCode::PreconditionError: return "PreconditionError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lpends

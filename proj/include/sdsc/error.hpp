// Copyright 2026 The sdsc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sdsc {

enum class ErrorCode {
  parameter,  // invalid construction or channel parameter
  input,      // malformed bit block, observation or file content
  config,     // decoder or simulation configuration
  guard,      // request exceeds an enumeration guard
  io,         // file could not be read or written
  internal,   // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& w) : Error(ErrorCode::parameter, w) {}
};
struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorCode::input, w) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorCode::config, w) {}
};
struct GuardError : Error {
  explicit GuardError(const std::string& w) : Error(ErrorCode::guard, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::io, w) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error(ErrorCode::internal, w) {}
};

}  // namespace sdsc

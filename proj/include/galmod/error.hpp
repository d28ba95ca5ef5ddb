// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace galmod {

enum class ErrorKind {
  InvalidInput,
  Capacity,
  Domain,
  Precision,
  Level,
  GroupMismatch,
  InvalidDivisor,
  Validation,
  TamenessViolation,
  ReducibleCover,
  ConstantExtension,
  NotWeaklyRamified,
  Unsupported,
  IncompleteDatum,
  Integrality,
  OracleMismatch,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the p-adic oracle when the requested lambda-precision cannot
// resolve the valuation.  required() is a precision that will.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, unsigned required)
      : Error(ErrorKind::Precision, what), required_(required) {}
  unsigned required() const noexcept { return required_; }

 private:
  unsigned required_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace galmod

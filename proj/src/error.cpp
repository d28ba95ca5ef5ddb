// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/error.hpp"

namespace galmod {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Level: return "level";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::InvalidDivisor: return "invalid-divisor";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::TamenessViolation: return "tameness-violation";
    case ErrorKind::ReducibleCover: return "reducible-cover";
    case ErrorKind::ConstantExtension: return "constant-extension";
    case ErrorKind::NotWeaklyRamified: return "not-weakly-ramified";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::IncompleteDatum: return "incomplete-datum";
    case ErrorKind::Integrality: return "integrality";
    case ErrorKind::OracleMismatch: return "oracle-mismatch";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace galmod

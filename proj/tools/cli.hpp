// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "galmod/epsilon.hpp"
#include "galmod/error.hpp"

namespace galmod::cli {

enum class Command { Gauss, Epsilon, Euler, VerifyStrong, VerifyWeak, VerifyAll, Corpus };
enum class Format { Table, Json };

struct RunConfig {
  Command command = Command::VerifyAll;
  std::optional<std::string> input;    // JSON cover file
  std::optional<std::string> builtin;  // builtin cover spec
  GaussOracle oracle = GaussOracle::Padic;
  Format format = Format::Table;
  std::optional<unsigned> precision;
  Convention convention = Convention::Standard;
  std::uint64_t seed = 1;
  bool serial = false;
  // gauss
  std::uint32_t p = 0;
  std::uint32_t r = 1;
  std::uint64_t character = 0;
  // corpus: kummer, as, chains, synthetic, all
  std::string corpus = "all";
  std::size_t count = 20;  // synthetic corpus size
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnsupported = 3;

int exit_code_for(ErrorKind kind);

// Runs one command.  Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and runs; the entry point of the galmod binary.
int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace galmod::cli

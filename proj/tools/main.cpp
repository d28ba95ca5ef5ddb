// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return galmod::cli::main_with_args(argc, argv, std::cout, std::cerr); }

// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/cli.hpp"

int main(int argc, char** argv) { return prymrank::cli::run(argc, argv); }

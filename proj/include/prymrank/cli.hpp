// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_CLI_HPP
#define PRYMRANK_CLI_HPP

namespace prymrank::cli {

/// Exit codes: 0 all verdicts certified and consistent with expectations,
/// 1 usage or input error, 2 certified but inconsistent with the expected
/// verdict, 3 indeterminate.
int run(int argc, const char* const* argv);

}  // namespace prymrank::cli

#endif

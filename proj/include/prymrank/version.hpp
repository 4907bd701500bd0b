// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_VERSION_HPP
#define PRYMRANK_VERSION_HPP

#include <string_view>

namespace prymrank {

inline constexpr std::string_view kToolName = "prym-rank";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace prymrank

#endif

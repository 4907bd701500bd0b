// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_RATIONAL_HPP
#define PRYMRANK_RATIONAL_HPP

#include <boost/rational.hpp>

#include <string_view>

namespace prymrank {

/// Exact rational arithmetic for theta characteristics. boost::rational
/// keeps values reduced to lowest terms.
using Rational = boost::rational<long long>;

/// Representative of r mod 1 in [0, 1).
Rational reduced_mod_one(const Rational& r);

double to_double(const Rational& r);

/// Parses "p/q" or "p". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace prymrank

#endif

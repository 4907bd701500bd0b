// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/rational.hpp"

#include <charconv>
#include <string>

#include "prymrank/errors.hpp"

namespace prymrank {

Rational reduced_mod_one(const Rational& r) {
  long long num = r.numerator();
  long long den = r.denominator();  // > 0 by boost invariant
  long long m = num % den;
  if (m < 0) m += den;
  return Rational(m, den);
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace {

long long parse_ll(std::string_view text) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("malformed rational component: " + std::string(text));
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_ll(text));
  long long num = parse_ll(text.substr(0, slash));
  long long den = parse_ll(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in rational");
  return Rational(num, den);
}

}  // namespace prymrank

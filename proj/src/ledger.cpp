// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/ledger.hpp"

#include "prymrank/errors.hpp"

namespace prymrank::ledger {

std::vector<long long> prym_type(long long g, long long d) {
  if (g < 2 || d < 2) throw DomainError("prym_type needs g >= 2 and d >= 2");
  std::vector<long long> type;
  type.reserve(static_cast<std::size_t>((d - 1) * (g - 1)));
  for (long long i = 0; i < (d - 2) * (g - 1); ++i) type.push_back(1);
  for (long long i = 0; i < g - 1; ++i) type.push_back(d);
  return type;
}

long long cover_genus(long long g, long long d) {
  if (g < 2 || d < 1) throw DomainError("cover_genus needs g >= 2 and d >= 1");
  return d * (g - 1) + 1;
}

DimsG2 dims_g2(long long d) {
  if (d < 2) throw DomainError("dims_g2 needs d >= 2");
  return DimsG2{
      .h0_L = d,
      .h0_L2 = 4 * d,
      .dim_W = d - 1,
      .sym2_inv_dim = d / 2,
      .h0_2KD = 3,
      .sym2_dim = d * (d + 1) / 2,
  };
}

TheoremAVerdict theorem_a_expected(long long d, bool bielliptic) {
  if (d < 2) throw DomainError("theorem_a_expected needs d >= 2");
  return (d >= 6 && !bielliptic) ? TheoremAVerdict::injective
                                 : TheoremAVerdict::not_injective;
}

}  // namespace prymrank::ledger

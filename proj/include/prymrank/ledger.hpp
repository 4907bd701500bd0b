// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_LEDGER_HPP
#define PRYMRANK_LEDGER_HPP

#include <vector>

namespace prymrank::ledger {

/// Polarization type of the Prym variety of a degree-d cyclic etale cover
/// of a genus-g curve: (d-2)(g-1) ones followed by (g-1) copies of d.
/// Requires g >= 2, d >= 2.
std::vector<long long> prym_type(long long g, long long d);

/// Genus of the covering curve, d(g-1) + 1 (Riemann-Hurwitz, etale case).
/// Requires g >= 2, d >= 1.
long long cover_genus(long long g, long long d);

/// Dimension bookkeeping for the g = 2 experiments at degree d.
struct DimsG2 {
  long long h0_L;          // d
  long long h0_L2;         // 4d
  long long dim_W;         // d - 1
  long long sym2_inv_dim;  // floor(d/2)
  long long h0_2KD;        // 3
  long long sym2_dim;      // d(d+1)/2
};

DimsG2 dims_g2(long long d);

enum class TheoremAVerdict { injective, not_injective };

/// Expected generic verdict for the Prym differential at degree d:
/// injective iff d >= 6 and the cover is not bielliptic.
TheoremAVerdict theorem_a_expected(long long d, bool bielliptic);

}  // namespace prymrank::ledger

#endif

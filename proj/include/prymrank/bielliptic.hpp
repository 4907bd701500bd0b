// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_BIELLIPTIC_HPP
#define PRYMRANK_BIELLIPTIC_HPP

#include <cstdint>
#include <vector>

#include "prymrank/rank.hpp"
#include "prymrank/theta.hpp"

namespace prymrank {

/// Product system on an elliptic curve F = C / (Z + tau1 Z): a degree-1
/// bundle L = O(delta) and a d-torsion bundle with lift
/// t = (m0 + n0 tau1)/d. The sections of L tensor (torsion)^i are realized
/// as s_i(z) = theta1(z - w_i) with the exact complex lifts
/// w_i = delta_lift + i t, so that every product s_i s_{d-i} carries the
/// same factor of automorphy (w_i + w_{d-i} = 2 delta_lift + m0 + n0 tau1
/// exactly) and ranks over sample points are well defined.
class EllipticData {
 public:
  /// Requires d >= 2, gcd(m0, n0, d) = 1 (exact order d, else
  /// OrderViolation) and all w_i at lattice distance >= 1e-3
  /// (else DegenerateConfiguration).
  EllipticData(PeriodMatrix tau1, Complex delta_lift, int m0, int n0, int d);

  static constexpr double kLatticeGuard = 1e-3;

  const PeriodMatrix& tau1() const { return tau1_; }
  Complex delta_lift() const { return delta_; }
  int m0() const { return m0_; }
  int n0() const { return n0_; }
  int d() const { return d_; }

  Complex torsion_lift() const;        // (m0 + n0 tau1) / d
  Complex section_shift(int i) const;  // w_i
  int num_products() const { return d_ / 2; }

 private:
  PeriodMatrix tau1_;
  Complex delta_;
  int m0_, n0_, d_;
};

/// Odd theta in the [1/2,1/2] convention; vanishes exactly on Z + tau1 Z.
Complex jacobi_theta1(Complex z, const PeriodMatrix& tau1,
                      const TruncationParams& params = {});

/// Genus-1 drop-in for sample_points: z = u + tau1 v, u, v in [0.05, 0.95).
std::vector<Complex> sample_points_g1(const PeriodMatrix& tau1, const SamplePlan& plan);

/// count x floor(d/2) matrix with column i (1-based) holding
/// s_i(z_p) s_{d-i}(z_p); for even d the middle column is s_{d/2}^2.
/// Columns share a common metric row weight and are max-abs normalized.
/// Requires plan.count >= 8.
EvaluatedMatrix product_section_matrix(const EllipticData& data, const SamplePlan& plan,
                                       const TruncationParams& params = {});

/// All products s_i s_{d-i} are sections of one degree-2 bundle on F, a
/// 2-dimensional space, while the curve-level target of the multiplication
/// map is 3-dimensional (2 invariant + 1 anti-invariant under the
/// bielliptic involution). The rank can therefore never reach 3 and
/// coker_lower_bound = 3 - rank >= 1 whenever rank <= 2.
struct BiellipticG1Report {
  int d = 0;
  int num_products = 0;
  int rank = 0;
  int target_dim_curve_level = 3;
  int coker_lower_bound = 0;
  bool consistent_with_paper = false;  // rank <= 2
  bool out_of_theorem_range = false;   // d < 6
  bool indeterminate = false;
  RankCertificate certificate;
};

BiellipticG1Report bielliptic_report(const EllipticData& data, const SamplePlan& plan,
                                     double eps_rank = 1e-8, double gap_min = 1e4,
                                     const TruncationParams& params = {});

}  // namespace prymrank

#endif

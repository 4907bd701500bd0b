// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_RANK_HPP
#define PRYMRANK_RANK_HPP

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "prymrank/surface.hpp"

namespace prymrank {

enum class CertVerdict { certified, indeterminate };

std::string_view to_string(CertVerdict v);

/// Numerical rank with singular-value evidence.
///
/// rank counts singular values above eps_rank * sigma_1; the certificate
/// holds when the multiplicative gap sigma_rank / sigma_{rank+1} reaches
/// gap_min, or when the matrix has full rank with sigma_min above the
/// threshold (gap_ratio is +inf in that case, and for the zero matrix).
struct RankCertificate {
  int rank = 0;
  std::vector<double> singular_values;  // descending
  double gap_ratio = 0.0;
  CertVerdict verdict = CertVerdict::indeterminate;
};

/// Throws MatrixInvalid on NaN/Inf entries; DomainError unless
/// eps_rank in (0,1) and gap_min >= 1.
RankCertificate numerical_rank(const Eigen::MatrixXcd& matrix, double eps_rank = 1e-8,
                               double gap_min = 1e4);

enum class PrymVerdict { differential_injective_certified, not_surjective, indeterminate };

std::string_view to_string(PrymVerdict v);

struct RankParams {
  double eps_rank = 1e-8;
  double gap_min = 1e4;
  TruncationParams trunc;
};

/// Outcome of the multiplication-map experiment Sym^2 H^0(L) -> H^0(L^2)
/// at one moduli point.
///
/// surjective <=> rank = 4d and injective <=> rank = d(d+1)/2, each only
/// under a certified rank. The verdict is differential_injective_certified
/// exactly when (d >= 7 and surjective) or (d = 6 and injective); the d=6
/// branch works because there the invariant source and the target both
/// have dimension 3, so the map is surjective iff injective.
///
/// coker_dim = 4d - rank is meaningful only inside H^0(L^2), i.e. when the
/// containment check holds; on containment failure the report is invalid
/// (coker_dim = -1, verdict indeterminate).
struct MultMapReport {
  int d = 0;
  PeriodMatrix tau;
  std::uint64_t seed = 0;
  int sym2_dim = 0;
  int target_dim = 0;
  int rank = 0;
  int coker_dim = -1;
  bool containment_ok = false;
  bool surjective = false;
  bool injective = false;
  PrymVerdict prym_verdict = PrymVerdict::indeterminate;
  RankCertificate product_cert;
  RankCertificate level2_cert;
  RankCertificate combined_cert;
};

/// Runs the full experiment: product columns, their certified rank, the
/// level-2 basis rank, and the containment check
/// rank([products | level-2 basis]) == rank(level-2 basis) == 4d.
/// plan.count of at least 2*4d is required, 4*4d recommended.
MultMapReport multmap_report(const PolarizedSurface& surface, const SamplePlan& plan,
                             const RankParams& params = {});

/// One step of a moduli-path scan. sigma_min_normalized is the smallest
/// singular value of the product matrix over the largest one; skipped rows
/// are those whose tau left the period-matrix domain.
struct SweepRow {
  double t = 0.0;
  bool skipped = false;
  int rank = 0;
  double sigma_min_normalized = 0.0;
  CertVerdict verdict = CertVerdict::indeterminate;
};

struct SweepSpec {
  PeriodMatrix base_tau;
  std::array<Complex, 3> direction{};  // upper triangle (d11, d12, d22)
  int steps = 1;
  double t_begin = 0.0;
  double t_end = 0.0;
  int d = 2;
  std::uint64_t plan_seed = 0;
  int oversample = 4;
  RankParams params;
};

/// Rows in step order; steps run in parallel across the thread budget.
std::vector<SweepRow> sweep(const SweepSpec& spec);

}  // namespace prymrank

#endif

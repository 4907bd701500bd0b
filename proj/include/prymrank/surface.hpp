// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_SURFACE_HPP
#define PRYMRANK_SURFACE_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "prymrank/theta.hpp"

namespace prymrank {

/// Abelian surface C^2 / (Delta Z^2 + tau Z^2) with Delta = diag(1, d),
/// polarized of type (1, d). In this coordinate convention the level-1
/// sections are the plain theta series with characteristics (0, j/d) and
/// multiplication of sections is literal pointwise multiplication.
class PolarizedSurface {
 public:
  PolarizedSurface(PeriodMatrix tau, int d);

  const PeriodMatrix& tau() const { return tau_; }
  int d() const { return d_; }
  Eigen::Matrix2d delta() const;

 private:
  PeriodMatrix tau_;
  int d_;
};

/// Canonical basis of H^0(A, L^k): the k^2 d level-k theta functions with
/// characteristics (a1/k, a2/(k d)), a1 in {0..k-1}, a2 in {0..k d - 1},
/// listed in that lexicographic order.
struct SectionBasis {
  PolarizedSurface surface;
  int level = 1;
  std::vector<Characteristic> characteristics;

  int dimension() const { return static_cast<int>(characteristics.size()); }
};

/// Levels 1 and 2 are supported; anything else throws UnsupportedLevel.
SectionBasis level_basis(const PolarizedSurface& surface, int level);

/// Deterministic sampling recipe: `count` points z = Delta u + tau v with
/// u, v drawn uniformly from [0.05, 0.95)^g by a SplitMix64 stream.
/// Identical seed, identical point list.
struct SamplePlan {
  std::uint64_t seed = 0;
  int count = 0;
};

std::vector<Eigen::Vector2cd> sample_points(const PolarizedSurface& surface,
                                            const SamplePlan& plan);

/// Section values on a sample plan. Entry (p, s) is the canonical-metric
/// gauge value w_k(z_p) * theta_{c_s}(z_p); every column is then scaled to
/// unit maximum modulus and the scale factors reported.
struct EvaluatedMatrix {
  Eigen::MatrixXcd values;
  std::vector<double> column_normalizers;
};

/// Requires plan.count >= 2 * basis dimension. Throws EvaluationDegenerate
/// if a column vanishes on the whole plan.
EvaluatedMatrix evaluate_sections(const SectionBasis& basis, const SamplePlan& plan,
                                  const TruncationParams& params = {});

/// Scales every column to unit maximum modulus, reporting the factors.
/// Throws EvaluationDegenerate when a column peak is below 1e-300.
EvaluatedMatrix normalize_columns(Eigen::MatrixXcd values);

/// Max relative residual of the torsion-translation identity
///
///   theta_j(z + tau c) * exp(pi i c^T tau c + 2 pi i c^T z) = theta_{j+1 mod d}(z),
///
/// with c = (0, 1/d), over all j and all plan points. The shift index
/// wraps exactly because c_{d-1} + c = c_0 mod Z^2 in exact rationals.
/// This is the Z/dZ kernel of the isogeny acting on the level-1 basis.
double torsion_shift_residual(const PolarizedSurface& surface, const SamplePlan& plan,
                              const TruncationParams& params = {});

/// Multiplication-map sample matrix: column (i, j), i <= j, lexicographic,
/// holds theta_i(z_p) * theta_j(z_p) in the level-2 metric gauge, columns
/// normalized as in evaluate_sections. Pointwise products of level-1
/// sections obey the level-2 transformation law exactly, so these columns
/// represent elements of H^0(A, L^2).
///
/// Requires basis.level == 1 and plan.count >= 2 * 4d.
EvaluatedMatrix product_columns(const SectionBasis& basis, const SamplePlan& plan,
                                const TruncationParams& params = {});

}  // namespace prymrank

#endif

// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_PERIOD_MATRIX_HPP
#define PRYMRANK_PERIOD_MATRIX_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace prymrank {

using Complex = std::complex<double>;

/// Period matrix of a complex torus of genus 1 or 2: a symmetric complex
/// matrix tau with positive definite imaginary part. Only the upper
/// triangle is stored, so symmetry holds exactly by construction.
///
/// Construction rejects matrices whose smallest Im-eigenvalue falls below
/// the guard (default 0.05): theta sums over such moduli are expensive and
/// sampling noise dominates the rank experiments long before that.
class PeriodMatrix {
 public:
  static constexpr double kDefaultLambdaGuard = 0.05;

  static PeriodMatrix genus1(Complex t11, double lambda_guard = kDefaultLambdaGuard);
  static PeriodMatrix genus2(Complex t11, Complex t12, Complex t22,
                             double lambda_guard = kDefaultLambdaGuard);

  int genus() const { return g_; }

  /// Symmetric entry access, 0-based.
  Complex entry(int i, int j) const;

  Eigen::MatrixXcd matrix() const;
  Eigen::MatrixXd imag_part() const;

  /// Smallest eigenvalue of Im(tau).
  double lambda_min() const { return lambda_min_; }

  /// Solves Im(tau) * x = y (g-dimensional, closed form).
  Eigen::VectorXd imag_solve(const Eigen::VectorXd& y) const;

 private:
  PeriodMatrix(int g, Complex t11, Complex t12, Complex t22, double lambda_guard);

  int g_;
  Complex t11_, t12_, t22_;
  double lambda_min_;
};

/// Seeded generic genus-2 modulus: Im(t11), Im(t22) uniform in [0.8, 1.5),
/// Im(t12) and all real parts uniform in [0, 0.3), rejection-sampled
/// against the positive-definiteness guard. Identical seed, identical tau.
PeriodMatrix random_period_matrix_g2(std::uint64_t seed);

}  // namespace prymrank

#endif

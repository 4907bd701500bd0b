// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/period_matrix.hpp"

#include <cmath>
#include <string>

#include "prymrank/errors.hpp"
#include "prymrank/rng.hpp"

namespace prymrank {

namespace {

double smallest_imag_eigenvalue(int g, Complex t11, Complex t12, Complex t22) {
  if (g == 1) return t11.imag();
  // Closed form for the symmetric 2x2 [[a, b], [b, c]].
  const double a = t11.imag(), b = t12.imag(), c = t22.imag();
  const double mean = 0.5 * (a + c);
  const double disc = std::hypot(0.5 * (a - c), b);
  return mean - disc;
}

}  // namespace

PeriodMatrix::PeriodMatrix(int g, Complex t11, Complex t12, Complex t22,
                           double lambda_guard)
    : g_(g), t11_(t11), t12_(t12), t22_(t22) {
  if (!(lambda_guard > 0)) throw DomainError("lambda guard must be positive");
  lambda_min_ = smallest_imag_eigenvalue(g, t11, t12, t22);
  if (!std::isfinite(lambda_min_) || lambda_min_ < lambda_guard)
    throw DomainError("Im(tau) not positive definite enough: lambda_min = " +
                      std::to_string(lambda_min_) + " < guard " +
                      std::to_string(lambda_guard));
}

PeriodMatrix PeriodMatrix::genus1(Complex t11, double lambda_guard) {
  return PeriodMatrix(1, t11, Complex(0, 0), Complex(0, 0), lambda_guard);
}

PeriodMatrix PeriodMatrix::genus2(Complex t11, Complex t12, Complex t22,
                                  double lambda_guard) {
  return PeriodMatrix(2, t11, t12, t22, lambda_guard);
}

Complex PeriodMatrix::entry(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 0) return t11_;
  if (i == 0 && j == 1) return t12_;
  return t22_;
}

Eigen::MatrixXcd PeriodMatrix::matrix() const {
  Eigen::MatrixXcd m(g_, g_);
  for (int i = 0; i < g_; ++i)
    for (int j = 0; j < g_; ++j) m(i, j) = entry(i, j);
  return m;
}

Eigen::MatrixXd PeriodMatrix::imag_part() const {
  Eigen::MatrixXd m(g_, g_);
  for (int i = 0; i < g_; ++i)
    for (int j = 0; j < g_; ++j) m(i, j) = entry(i, j).imag();
  return m;
}

PeriodMatrix random_period_matrix_g2(std::uint64_t seed) {
  SeededRng rng(seed);
  for (int tries = 0; tries < 1000; ++tries) {
    const double re11 = rng.uniform(0.0, 0.3), im11 = rng.uniform(0.8, 1.5);
    const double re12 = rng.uniform(0.0, 0.3), im12 = rng.uniform(0.0, 0.3);
    const double re22 = rng.uniform(0.0, 0.3), im22 = rng.uniform(0.8, 1.5);
    try {
      return PeriodMatrix::genus2({re11, im11}, {re12, im12}, {re22, im22});
    } catch (const DomainError&) {
      continue;
    }
  }
  throw DomainError("random tau rejection sampling failed");
}

Eigen::VectorXd PeriodMatrix::imag_solve(const Eigen::VectorXd& y) const {
  Eigen::VectorXd x(g_);
  if (g_ == 1) {
    x(0) = y(0) / t11_.imag();
    return x;
  }
  const double a = t11_.imag(), b = t12_.imag(), c = t22_.imag();
  const double det = a * c - b * b;
  x(0) = (c * y(0) - b * y(1)) / det;
  x(1) = (a * y(1) - b * y(0)) / det;
  return x;
}

}  // namespace prymrank

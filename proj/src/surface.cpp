// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/surface.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "prymrank/errors.hpp"
#include "prymrank/rng.hpp"
#include "prymrank/threads.hpp"

namespace prymrank {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoxLo = 0.05;
constexpr double kBoxHi = 0.95;

}  // namespace

PolarizedSurface::PolarizedSurface(PeriodMatrix tau, int d) : tau_(std::move(tau)), d_(d) {
  if (tau_.genus() != 2) throw DomainError("polarized surface needs a genus-2 period matrix");
  if (d < 2 || d > 64) throw DomainError("polarization degree d must be in [2, 64]");
}

Eigen::Matrix2d PolarizedSurface::delta() const {
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = static_cast<double>(d_);
  return m;
}

SectionBasis level_basis(const PolarizedSurface& surface, int level) {
  if (level != 1 && level != 2)
    throw UnsupportedLevel("section bases are implemented for levels 1 and 2, got " +
                           std::to_string(level));
  const int d = surface.d();
  std::vector<Characteristic> chars;
  chars.reserve(static_cast<std::size_t>(level) * level * d);
  const std::vector<Rational> zero_b{Rational(0), Rational(0)};
  for (int a1 = 0; a1 < level; ++a1)
    for (int a2 = 0; a2 < level * d; ++a2)
      chars.emplace_back(std::vector<Rational>{Rational(a1, level), Rational(a2, level * d)},
                         zero_b);
  return SectionBasis{surface, level, std::move(chars)};
}

std::vector<Eigen::Vector2cd> sample_points(const PolarizedSurface& surface,
                                            const SamplePlan& plan) {
  if (plan.count < 0) throw DomainError("sample count must be non-negative");
  SeededRng rng(plan.seed);
  const Eigen::Matrix2d delta = surface.delta();
  const Eigen::MatrixXcd tau = surface.tau().matrix();
  std::vector<Eigen::Vector2cd> pts;
  pts.reserve(static_cast<std::size_t>(plan.count));
  for (int p = 0; p < plan.count; ++p) {
    Eigen::Vector2d u(rng.uniform(kBoxLo, kBoxHi), rng.uniform(kBoxLo, kBoxHi));
    Eigen::Vector2d v(rng.uniform(kBoxLo, kBoxHi), rng.uniform(kBoxLo, kBoxHi));
    Eigen::Vector2cd z = (delta * u).cast<Complex>() + tau * v.cast<Complex>();
    pts.push_back(z);
  }
  return pts;
}

namespace {

// Gauge-weighted section values, one row per point, no column scaling yet.
Eigen::MatrixXcd evaluate_gauge_matrix(const SectionBasis& basis,
                                       const std::vector<Eigen::Vector2cd>& points,
                                       const TruncationParams& params) {
  const int rows = static_cast<int>(points.size());
  const int cols = basis.dimension();
  const PeriodMatrix& tau = basis.surface.tau();
  Eigen::MatrixXcd m(rows, cols);
  parallel_for(rows, [&](int p) {
    const Eigen::VectorXcd z = points[static_cast<std::size_t>(p)];
    const double w = metric_weight(tau, z, basis.level);
    for (int s = 0; s < cols; ++s)
      m(p, s) = w * theta_level(tau, z, basis.characteristics[static_cast<std::size_t>(s)],
                                basis.level, params);
  });
  return m;
}

}  // namespace

EvaluatedMatrix normalize_columns(Eigen::MatrixXcd values) {
  std::vector<double> normalizers;
  normalizers.reserve(static_cast<std::size_t>(values.cols()));
  for (int s = 0; s < values.cols(); ++s) {
    const double peak = values.col(s).cwiseAbs().maxCoeff();
    if (peak < 1e-300)
      throw EvaluationDegenerate("section column " + std::to_string(s) +
                                 " vanishes on the sample plan");
    values.col(s) /= peak;
    normalizers.push_back(peak);
  }
  return EvaluatedMatrix{std::move(values), std::move(normalizers)};
}

EvaluatedMatrix evaluate_sections(const SectionBasis& basis, const SamplePlan& plan,
                                  const TruncationParams& params) {
  if (plan.count < 2 * basis.dimension())
    throw DomainError("sample plan too small: need count >= 2 * dim = " +
                      std::to_string(2 * basis.dimension()));
  const auto points = sample_points(basis.surface, plan);
  return normalize_columns(evaluate_gauge_matrix(basis, points, params));
}

double torsion_shift_residual(const PolarizedSurface& surface, const SamplePlan& plan,
                              const TruncationParams& params) {
  const int d = surface.d();
  const PeriodMatrix& tau = surface.tau();
  const auto points = sample_points(surface, plan);
  const auto basis = level_basis(surface, 1);

  // Kernel generator of the isogeny: translation by tau * (0, 1/d).
  const Rational cd(1, d);
  const Eigen::Vector2cd tc(tau.entry(0, 1) * to_double(cd), tau.entry(1, 1) * to_double(cd));
  const Complex ctc = tau.entry(1, 1) * to_double(cd) * to_double(cd);

  std::vector<double> worst(points.size(), 0.0);
  parallel_for(static_cast<int>(points.size()), [&](int p) {
    const Eigen::Vector2cd& z = points[static_cast<std::size_t>(p)];
    const Complex cz = to_double(cd) * z(1);
    const Complex prefactor = std::exp(Complex(0, kPi) * ctc + Complex(0, 2 * kPi) * cz);
    const Eigen::VectorXcd zs = z + tc;
    double m = 0.0;
    for (int j = 0; j < d; ++j) {
      const auto& cj = basis.characteristics[static_cast<std::size_t>(j)];
      // Shift index wraps exactly in the rationals: a2 + 1/d mod 1.
      const Characteristic cnext(
          std::vector<Rational>{cj.a()[0], reduced_mod_one(cj.a()[1] + cd)},
          std::vector<Rational>{Rational(0), Rational(0)});
      const Complex lhs = theta_level(tau, zs, cj, 1, params) * prefactor;
      const Complex rhs = theta_level(tau, z, cnext, 1, params);
      const double res = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
      m = std::max(m, res);
    }
    worst[static_cast<std::size_t>(p)] = m;
  });
  double best = 0.0;
  for (double w : worst) best = std::max(best, w);
  return best;
}

EvaluatedMatrix product_columns(const SectionBasis& basis, const SamplePlan& plan,
                                const TruncationParams& params) {
  if (basis.level != 1) throw DomainError("product columns need a level-1 basis");
  const int d = basis.surface.d();
  if (plan.count < 2 * 4 * d)
    throw DomainError("sample plan too small for products: need count >= " +
                      std::to_string(8 * d));
  const auto points = sample_points(basis.surface, plan);
  // Level-1 gauge values; products of two of them carry the level-2 weight.
  const Eigen::MatrixXcd lvl1 = evaluate_gauge_matrix(basis, points, params);

  const int cols = d * (d + 1) / 2;
  Eigen::MatrixXcd prod(lvl1.rows(), cols);
  int c = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j, ++c) prod.col(c) = lvl1.col(i).cwiseProduct(lvl1.col(j));
  return normalize_columns(std::move(prod));
}

}  // namespace prymrank

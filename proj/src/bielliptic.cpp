// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/bielliptic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "prymrank/errors.hpp"
#include "prymrank/rng.hpp"
#include "prymrank/threads.hpp"

namespace prymrank {

namespace {

constexpr double kPi = std::numbers::pi;

double lattice_distance(Complex w, Complex tau1) {
  // Coordinates of w in the basis (1, tau1), then scan the four
  // neighbouring lattice points.
  const double y = w.imag() / tau1.imag();
  const double x = w.real() - y * tau1.real();
  double best = std::numeric_limits<double>::infinity();
  for (long long p = static_cast<long long>(std::floor(x)) - 1;
       p <= static_cast<long long>(std::floor(x)) + 2; ++p)
    for (long long q = static_cast<long long>(std::floor(y)) - 1;
         q <= static_cast<long long>(std::floor(y)) + 2; ++q) {
      const Complex node = static_cast<double>(p) + static_cast<double>(q) * tau1;
      best = std::min(best, std::abs(w - node));
    }
  return best;
}

}  // namespace

EllipticData::EllipticData(PeriodMatrix tau1, Complex delta_lift, int m0, int n0, int d)
    : tau1_(std::move(tau1)), delta_(delta_lift), m0_(m0), n0_(n0), d_(d) {
  if (tau1_.genus() != 1) throw DomainError("elliptic data needs a genus-1 period matrix");
  if (d < 2) throw DomainError("torsion order d must be >= 2");
  const long long g = std::gcd(std::gcd(std::llabs(m0), std::llabs(n0)),
                               static_cast<long long>(d));
  if (g != 1)
    throw OrderViolation("(m0, n0, d) = (" + std::to_string(m0) + ", " + std::to_string(n0) +
                         ", " + std::to_string(d) + ") has gcd " + std::to_string(g) +
                         ": torsion order is not exactly d");
  const Complex t = torsion_lift();
  for (int i = 0; i < d; ++i) {
    const double dist = lattice_distance(delta_ + static_cast<double>(i) * t,
                                         tau1_.entry(0, 0));
    if (dist < kLatticeGuard)
      throw DegenerateConfiguration("section shift w_" + std::to_string(i) +
                                    " is within " + std::to_string(dist) +
                                    " of a lattice point");
  }
}

Complex EllipticData::torsion_lift() const {
  return (static_cast<double>(m0_) + static_cast<double>(n0_) * tau1_.entry(0, 0)) /
         static_cast<double>(d_);
}

Complex EllipticData::section_shift(int i) const {
  return delta_ + static_cast<double>(i) * torsion_lift();
}

Complex jacobi_theta1(Complex z, const PeriodMatrix& tau1, const TruncationParams& params) {
  static const Characteristic half(std::vector<Rational>{Rational(1, 2)},
                                   std::vector<Rational>{Rational(1, 2)});
  Eigen::VectorXcd zv(1);
  zv(0) = z;
  return theta(tau1, zv, half, params);
}

std::vector<Complex> sample_points_g1(const PeriodMatrix& tau1, const SamplePlan& plan) {
  if (tau1.genus() != 1) throw DomainError("sample_points_g1 needs genus 1");
  if (plan.count < 0) throw DomainError("sample count must be non-negative");
  SeededRng rng(plan.seed);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(plan.count));
  for (int p = 0; p < plan.count; ++p) {
    const double u = rng.uniform(0.05, 0.95);
    const double v = rng.uniform(0.05, 0.95);
    pts.push_back(u + v * tau1.entry(0, 0));
  }
  return pts;
}

EvaluatedMatrix product_section_matrix(const EllipticData& data, const SamplePlan& plan,
                                       const TruncationParams& params) {
  if (plan.count < 8) throw DomainError("product sections need at least 8 sample points");
  const auto points = sample_points_g1(data.tau1(), plan);
  const int d = data.d();
  const int cols = data.num_products();
  const Complex tau = data.tau1().entry(0, 0);
  const double y = tau.imag();

  // Common automorphy class: w_i + w_{d-i} = 2 delta + m0 + n0 tau exactly.
  // Rows are weighted at the class midpoint so that |entries| stay O(1).
  const Complex midpoint =
      data.delta_lift() +
      0.5 * (static_cast<double>(data.m0()) + static_cast<double>(data.n0()) * tau);

  Eigen::MatrixXcd m(plan.count, cols);
  parallel_for(plan.count, [&](int p) {
    const Complex z = points[static_cast<std::size_t>(p)];
    const double im = (z - midpoint).imag();
    const double weight = std::exp(-2.0 * kPi * im * im / y);
    for (int i = 1; i <= cols; ++i) {
      const Complex si = jacobi_theta1(z - data.section_shift(i), data.tau1(), params);
      const Complex sj = jacobi_theta1(z - data.section_shift(d - i), data.tau1(), params);
      m(p, i - 1) = weight * si * sj;
    }
  });
  return normalize_columns(std::move(m));
}

BiellipticG1Report bielliptic_report(const EllipticData& data, const SamplePlan& plan,
                                     double eps_rank, double gap_min,
                                     const TruncationParams& params) {
  const auto matrix = product_section_matrix(data, plan, params);
  const auto cert = numerical_rank(matrix.values, eps_rank, gap_min);

  BiellipticG1Report report;
  report.d = data.d();
  report.num_products = data.num_products();
  report.rank = cert.rank;
  report.coker_lower_bound = report.target_dim_curve_level - cert.rank;
  report.consistent_with_paper = cert.rank <= 2;
  report.out_of_theorem_range = data.d() < 6;
  report.indeterminate = cert.verdict != CertVerdict::certified;
  report.certificate = cert;
  return report;
}

}  // namespace prymrank

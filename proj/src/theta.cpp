// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "prymrank/errors.hpp"

namespace prymrank {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_params(const TruncationParams& params) {
  if (!(params.eps_tail > 0)) throw DomainError("eps_tail must be positive");
  if (!(params.safety >= 0)) throw DomainError("safety margin must be >= 0");
}

struct LatticePoint {
  double m1, m2;       // n + a
  long long n1, n2;    // integer part, tie-break key
  double norm2;
};

// All m = n + a with |m| <= R, sorted by |m| ascending, ties in
// lexicographic (n1, n2) order. The fixed order makes the accumulated
// floating-point sum identical from run to run.
std::vector<LatticePoint> enumerate_ball(int g, double a1, double a2, double R) {
  std::vector<LatticePoint> pts;
  const double R2 = R * R;
  const long long lo1 = static_cast<long long>(std::ceil(-R - a1));
  const long long hi1 = static_cast<long long>(std::floor(R - a1));
  for (long long n1 = lo1; n1 <= hi1; ++n1) {
    const double m1 = static_cast<double>(n1) + a1;
    if (g == 1) {
      if (m1 * m1 <= R2) pts.push_back({m1, 0.0, n1, 0, m1 * m1});
      continue;
    }
    const double rem = R2 - m1 * m1;
    if (rem < 0) continue;
    const double r = std::sqrt(rem);
    const long long lo2 = static_cast<long long>(std::ceil(-r - a2));
    const long long hi2 = static_cast<long long>(std::floor(r - a2));
    for (long long n2 = lo2; n2 <= hi2; ++n2) {
      const double m2 = static_cast<double>(n2) + a2;
      const double norm2 = m1 * m1 + m2 * m2;
      if (norm2 <= R2) pts.push_back({m1, m2, n1, n2, norm2});
    }
  }
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& x, const LatticePoint& y) {
    if (x.norm2 != y.norm2) return x.norm2 < y.norm2;
    if (x.n1 != y.n1) return x.n1 < y.n1;
    return x.n2 < y.n2;
  });
  return pts;
}

}  // namespace

Characteristic::Characteristic(std::vector<Rational> a, std::vector<Rational> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size() || a_.empty() || a_.size() > 2)
    throw DomainError("characteristic needs matching a/b of length 1 or 2");
  for (auto& r : a_) r = reduced_mod_one(r);
  for (auto& r : b_) r = reduced_mod_one(r);
}

Characteristic Characteristic::zero(int genus) {
  if (genus != 1 && genus != 2) throw DomainError("genus must be 1 or 2");
  std::vector<Rational> z(static_cast<std::size_t>(genus), Rational(0));
  return Characteristic(z, z);
}

double truncation_radius(int level, double lambda_min, double center_norm,
                         const TruncationParams& params) {
  validate_params(params);
  if (!(lambda_min > 0)) throw DomainError("lambda_min must be positive");
  if (level < 1) throw DomainError("level must be >= 1");
  if (!(center_norm >= 0)) throw DomainError("center_norm must be >= 0");
  return center_norm + std::sqrt(std::log(1.0 / params.eps_tail) / (kPi * level * lambda_min)) +
         params.safety;
}

double gaussian_center_norm(const PeriodMatrix& tau, const Eigen::VectorXcd& z) {
  const int g = tau.genus();
  if (z.size() != g) throw DomainError("z length must equal the genus");
  Eigen::VectorXd zi(g);
  for (int i = 0; i < g; ++i) {
    if (!std::isfinite(z(i).real()) || !std::isfinite(z(i).imag()))
      throw DomainError("z must be finite");
    zi(i) = z(i).imag();
  }
  return tau.imag_solve(zi).norm();
}

double auto_radius(const PeriodMatrix& tau, const Eigen::VectorXcd& z, int level,
                   const TruncationParams& params) {
  return truncation_radius(level, tau.lambda_min(), gaussian_center_norm(tau, z), params);
}

Complex lattice_sum(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                    std::span<const Rational> a, int level, double radius) {
  const int g = tau.genus();
  if (static_cast<int>(a.size()) != g) throw DomainError("characteristic length mismatch");
  if (z.size() != g) throw DomainError("z length must equal the genus");
  const double a1 = to_double(a[0]);
  const double a2 = g == 2 ? to_double(a[1]) : 0.0;
  const auto pts = enumerate_ball(g, a1, a2, radius);

  const Complex t11 = tau.entry(0, 0);
  const Complex t12 = g == 2 ? tau.entry(0, 1) : Complex(0, 0);
  const Complex t22 = g == 2 ? tau.entry(1, 1) : Complex(0, 0);
  const Complex z1 = z(0);
  const Complex z2 = g == 2 ? z(1) : Complex(0, 0);

  // Neumaier-compensated accumulation per component: the head terms
  // dominate under the sorted order, and compensation keeps the final
  // value within an ulp or two of the exact truncated sum.
  double sum_re = 0, sum_im = 0, comp_re = 0, comp_im = 0;
  auto add = [](double& sum, double& comp, double term) {
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  };
  const double pk = kPi * level;
  for (const auto& p : pts) {
    // exponent = pi i k (m^T tau m + 2 m.z)
    Complex q = t11 * (p.m1 * p.m1) + z1 * (2.0 * p.m1);
    if (g == 2) q += t12 * (2.0 * p.m1 * p.m2) + t22 * (p.m2 * p.m2) + z2 * (2.0 * p.m2);
    const Complex term = std::exp(Complex(-pk * q.imag(), pk * q.real()));
    add(sum_re, comp_re, term.real());
    add(sum_im, comp_im, term.imag());
  }
  return Complex(sum_re + comp_re, sum_im + comp_im);
}

Complex theta(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
              const Characteristic& ch, const TruncationParams& params) {
  const int g = tau.genus();
  if (ch.genus() != g) throw DomainError("characteristic genus mismatch");
  Eigen::VectorXcd zb = z;
  for (int i = 0; i < g; ++i) zb(i) += to_double(ch.b()[i]);
  const double R = auto_radius(tau, zb, 1, params);
  return lattice_sum(tau, zb, ch.a(), 1, R);
}

Complex theta_level(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                    const Characteristic& ch, int level, const TruncationParams& params) {
  const int g = tau.genus();
  if (ch.genus() != g) throw DomainError("characteristic genus mismatch");
  if (level < 1) throw DomainError("level must be >= 1");
  const double R = auto_radius(tau, z, level, params);
  return lattice_sum(tau, z, ch.a(), level, R);
}

double metric_weight(const PeriodMatrix& tau, const Eigen::VectorXcd& z, int level) {
  const int g = tau.genus();
  if (z.size() != g) throw DomainError("z length must equal the genus");
  Eigen::VectorXd zi(g);
  for (int i = 0; i < g; ++i) zi(i) = z(i).imag();
  const double quad = zi.dot(tau.imag_solve(zi));
  return std::exp(-kPi * level * quad);
}

}  // namespace prymrank

// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_THETA_HPP
#define PRYMRANK_THETA_HPP

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

#include "prymrank/period_matrix.hpp"
#include "prymrank/rational.hpp"

namespace prymrank {

/// Certified truncation of the theta lattice sum.
///
/// eps_tail is the absolute bound on the dropped tail of the reduced
/// (unit-scale) series; safety widens the radius to absorb the polynomial
/// prefactor of the Gaussian tail estimate.
struct TruncationParams {
  double eps_tail = 1e-15;
  double safety = 2.0;
};

/// Rational theta characteristic [a, b] of genus g = a.size() = b.size().
/// Components are exact rationals, stored reduced and normalized to [0,1),
/// so index identities like (d-1)/d + 1/d == 0 (mod 1) hold exactly.
class Characteristic {
 public:
  Characteristic(std::vector<Rational> a, std::vector<Rational> b);

  static Characteristic zero(int genus);

  int genus() const { return static_cast<int>(a_.size()); }
  std::span<const Rational> a() const { return a_; }
  std::span<const Rational> b() const { return b_; }

  bool operator==(const Characteristic& other) const = default;

 private:
  std::vector<Rational> a_, b_;
};

/// Truncation radius R such that summing lattice points m with |m| <= R
/// drops a tail below eps_tail (up to the uncompensated growth factor
/// exp(pi k (Im z)^T Y^{-1} (Im z)) documented at theta()):
///
///   R = center_norm + sqrt(ln(1/eps_tail) / (pi k lambda_min)) + safety.
///
/// center_norm is the norm of the Gaussian center Y^{-1} Im z that the
/// summand peaks at; lambda_min the smallest eigenvalue of Im tau.
double truncation_radius(int level, double lambda_min, double center_norm,
                         const TruncationParams& params = {});

/// |Y^{-1} Im z|, the Gaussian center norm used by truncation_radius.
double gaussian_center_norm(const PeriodMatrix& tau, const Eigen::VectorXcd& z);

/// Radius theta()/theta_level() would pick for these inputs.
double auto_radius(const PeriodMatrix& tau, const Eigen::VectorXcd& z, int level,
                   const TruncationParams& params = {});

/// Fixed-radius lattice sum
///
///   sum over m in Z^g + a, |m| <= R  of  exp(pi i k m^T tau m + 2 pi i k m^T z).
///
/// Terms are accumulated sorted by |m| ascending with a lexicographic tie
/// order on the integer part, so results are bit-reproducible.
Complex lattice_sum(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                    std::span<const Rational> a, int level, double radius);

/// Riemann theta with characteristic,
///
///   theta[a,b](z, tau) = sum_{n in Z^g} exp(pi i (n+a)^T tau (n+a)
///                                           + 2 pi i (n+a)^T (z+b)),
///
/// truncated at the certified level-1 radius. The tail bound eps_tail is
/// relative to the unit scale; the growth factor
/// exp(pi (Im z)^T Y^{-1} (Im z)) is not compensated, so callers should
/// keep z inside the fundamental-domain sampling region.
Complex theta(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
              const Characteristic& ch, const TruncationParams& params = {});

/// Level-k theta
///
///   sum_{m in Z^g + a} exp(pi i k m^T tau m + 2 pi i k m^T z),
///
/// i.e. the b part of the characteristic is ignored (fixed 0 here).
Complex theta_level(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                    const Characteristic& ch, int level,
                    const TruncationParams& params = {});

/// Canonical-metric weight exp(-pi k (Im z)^T Y^{-1} (Im z)). Multiplying a
/// level-k theta value by this makes its modulus invariant under lattice
/// translation, which is what keeps sample matrices well conditioned.
double metric_weight(const PeriodMatrix& tau, const Eigen::VectorXcd& z, int level);

}  // namespace prymrank

#endif

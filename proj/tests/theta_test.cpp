// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/theta.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "prymrank/errors.hpp"
#include "prymrank/rng.hpp"

using namespace prymrank;

namespace {

Eigen::VectorXcd vec1(Complex z) {
  Eigen::VectorXcd v(1);
  v(0) = z;
  return v;
}

Eigen::VectorXcd vec2(Complex z1, Complex z2) {
  Eigen::VectorXcd v(2);
  v(0) = z1;
  v(1) = z2;
  return v;
}

Characteristic char_g1(Rational a, Rational b) {
  return Characteristic({a}, {b});
}

Characteristic char_g2(Rational a1, Rational a2) {
  return Characteristic({a1, a2}, {Rational(0), Rational(0)});
}

}  // namespace

TEST_CASE("truncation radius formula and monotonicity") {
  // R = c + sqrt(ln(1e15)/pi) + 2, frozen from the formula itself.
  CHECK(truncation_radius(1, 1.0, 0.0) == doctest::Approx(5.3157252574951707).epsilon(1e-12));
  CHECK(truncation_radius(2, 1.0, 0.0) == doctest::Approx(4.3445718141263466).epsilon(1e-12));
  CHECK(truncation_radius(2, 1.0, 0.0) < truncation_radius(1, 1.0, 0.0));
  CHECK(truncation_radius(1, 1.0, 0.7) ==
        doctest::Approx(0.7 + 5.3157252574951707).epsilon(1e-12));

  CHECK_THROWS_AS(truncation_radius(1, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(truncation_radius(1, -1.0, 0.0), DomainError);
  CHECK_THROWS_AS(truncation_radius(0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(truncation_radius(1, 1.0, 0.0, TruncationParams{0.0, 2.0}), DomainError);
  CHECK_THROWS_AS(truncation_radius(1, 1.0, 0.0, TruncationParams{1e-15, -1.0}), DomainError);
}

TEST_CASE("truncation ball reproduces the flat-guard theta against a 2R oracle") {
  // tau = (i/20) * identity sits exactly on the lambda guard.
  const PeriodMatrix tau = PeriodMatrix::genus2(Complex(0, 0.05), Complex(0, 0),
                                                Complex(0, 0.05));
  const double R = truncation_radius(1, 0.05, 0.5);
  CHECK(std::isfinite(R));
  const std::vector<Rational> a{Rational(0), Rational(0)};
  const Complex engine = lattice_sum(tau, vec2(0, 0), a, 1, R);
  const int box = static_cast<int>(std::ceil(2 * R)) + 1;
  const Complex orc = oracle::g2_theta(Complex(0, 0.05), Complex(0, 0), Complex(0, 0.05),
                                       0, 0, 0, 0, 0, 0, 1, box);
  CHECK(std::abs(engine - orc) < 1e-14);
  // theta(0; (i/20) I) = theta(0; i/20)^2 = 20 to well below double noise.
  CHECK(std::abs(engine - 20.0) < 1e-11);
}

TEST_CASE("classical value theta(0; i)") {
  const PeriodMatrix tau = PeriodMatrix::genus1(Complex(0, 1));
  const Complex v = theta(tau, vec1(0), Characteristic::zero(1));
  CHECK(std::abs(v - Complex(1.0864348112133080, 0)) < 1e-13);
  // Doubled-radius brute force agrees.
  const Complex orc = oracle::g1_theta(Complex(0, 1), 0, 0, 0, 1, 25);
  CHECK(std::abs(v - orc) < 1e-13);
}

TEST_CASE("theta parity in z for zero characteristic") {
  const PeriodMatrix tau = PeriodMatrix::genus1(Complex(0.21, 0.93));
  SeededRng rng(11);
  for (int k = 0; k < 20; ++k) {
    const Complex z(rng.uniform(-0.8, 0.8), rng.uniform(-0.4, 0.4));
    const Complex a = theta(tau, vec1(z), Characteristic::zero(1));
    const Complex b = theta(tau, vec1(-z), Characteristic::zero(1));
    CHECK(std::abs(a - b) < 2e-15 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("genus-2 diagonal factorization") {
  const Complex t1(0.13, 1.17), t2(-0.4, 0.77);
  const PeriodMatrix tau = PeriodMatrix::genus2(t1, Complex(0, 0), t2);
  const PeriodMatrix tau1 = PeriodMatrix::genus1(t1);
  const PeriodMatrix tau2 = PeriodMatrix::genus1(t2);
  SeededRng rng(3);
  for (int k = 0; k < 10; ++k) {
    const Complex z1(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
    const Complex z2(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
    const Rational a1(k % 3, 3), a2(k % 5, 5), b1(k % 2, 2), b2(k % 7, 7);
    const Complex joint = theta(tau, vec2(z1, z2), Characteristic({a1, a2}, {b1, b2}));
    const Complex split = theta(tau1, vec1(z1), char_g1(a1, b1)) *
                          theta(tau2, vec1(z2), char_g1(a2, b2));
    CHECK(std::abs(joint - split) < 1e-12 * std::abs(split));
  }
}

TEST_CASE("theta_level at level 1 is theta with b = 0, bit for bit") {
  const PeriodMatrix tau = PeriodMatrix::genus2(Complex(0.1, 1.2), Complex(0.31, 0.12),
                                                Complex(0.0, 0.9));
  const auto ch = char_g2(Rational(0), Rational(2, 7));
  const auto z = vec2(Complex(0.3, 0.2), Complex(-0.1, 0.4));
  const Complex a = theta_level(tau, z, ch, 1);
  const Complex b = theta(tau, z, ch);
  CHECK(a == b);
}

TEST_CASE("level-2 theta at z = 0 matches theta(0; 2 tau)") {
  // Same series under k n^2 tau = n^2 (k tau).
  const PeriodMatrix tau = PeriodMatrix::genus1(Complex(0, 1));
  const PeriodMatrix tau2 = PeriodMatrix::genus1(Complex(0, 2));
  const Complex lvl2 = theta_level(tau, vec1(0), Characteristic::zero(1), 2);
  const Complex direct = theta(tau2, vec1(0), Characteristic::zero(1));
  CHECK(std::abs(lvl2 - direct) < 1e-13);
  CHECK(std::abs(lvl2 - Complex(1.0037348854877391, 0)) < 1e-13);
}

TEST_CASE("level-2 half characteristic is 1-periodic") {
  // Multiplier under z -> z+1 is exp(2 pi i k a) = exp(2 pi i) = 1.
  const PeriodMatrix tau = PeriodMatrix::genus1(Complex(0.07, 1.1));
  const auto ch = char_g1(Rational(1, 2), Rational(0));
  SeededRng rng(5);
  for (int k = 0; k < 10; ++k) {
    const Complex z(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3));
    const Complex a = theta_level(tau, vec1(z + 1.0), ch, 2);
    const Complex b = theta_level(tau, vec1(z), ch, 2);
    CHECK(std::abs(a - b) < 1e-11 * std::abs(b));
  }
}

TEST_CASE("quasi-periodicity in both lattice directions") {
  SeededRng rng(17);
  const double two_pi = 2 * std::numbers::pi;
  for (int trial = 0; trial < 40; ++trial) {
    const PeriodMatrix tau = PeriodMatrix::genus2(
        Complex(rng.uniform(-0.3, 0.3), rng.uniform(0.8, 1.5)),
        Complex(rng.uniform(-0.3, 0.3), rng.uniform(0.0, 0.25)),
        Complex(rng.uniform(-0.3, 0.3), rng.uniform(0.8, 1.5)));
    const int level = 1 + (trial % 2);
    const int d = 3 + (trial % 4);
    const Characteristic ch = char_g2(Rational(trial % level, level), Rational(trial % d, d));
    // z in the fundamental-domain sampling box.
    Eigen::Vector2d u(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95));
    Eigen::Vector2d v(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95));
    const Eigen::MatrixXcd tm = tau.matrix();
    const Eigen::VectorXcd z = u.cast<Complex>() + tm * v.cast<Complex>();

    Eigen::Vector2d m(static_cast<double>(static_cast<int>(rng.next_u64() % 5)) - 2,
                      static_cast<double>(static_cast<int>(rng.next_u64() % 5)) - 2);
    Eigen::Vector2d n(static_cast<double>(static_cast<int>(rng.next_u64() % 5)) - 2,
                      static_cast<double>(static_cast<int>(rng.next_u64() % 5)) - 2);

    const Complex base = theta_level(tau, z, ch, level);

    // z -> z + m: factor exp(2 pi i k a.m)
    const double am = to_double(ch.a()[0]) * m(0) + to_double(ch.a()[1]) * m(1);
    const Complex factor_m = std::exp(Complex(0, two_pi * level * am));
    const Complex shifted_m = theta_level(tau, z + m.cast<Complex>(), ch, level);
    CHECK(std::abs(shifted_m - base * factor_m) <= 1e-10 * std::abs(base));

    // z -> z + tau n: factor exp(-pi i k n^T tau n - 2 pi i k n.z)
    const Eigen::VectorXcd tn = tm * n.cast<Complex>();
    const Complex quad = n(0) * n(0) * tm(0, 0) + 2.0 * n(0) * n(1) * tm(0, 1) +
                         n(1) * n(1) * tm(1, 1);
    const Complex lin = n(0) * z(0) + n(1) * z(1);
    const Complex expo = Complex(0, -std::numbers::pi * level) * quad +
                         Complex(0, -two_pi * level) * lin;
    const Complex shifted_n = theta_level(tau, z + tn, ch, level);
    const Complex expected = std::exp(expo) * base;
    CHECK(std::abs(shifted_n - expected) <= 1e-10 * std::abs(expected));
  }
}

TEST_CASE("doubling the radius moves values by less than 10 eps_tail") {
  SeededRng rng(23);
  const TruncationParams params;
  for (int trial = 0; trial < 20; ++trial) {
    const PeriodMatrix tau = PeriodMatrix::genus2(
        Complex(rng.uniform(-0.3, 0.3), rng.uniform(0.8, 1.5)),
        Complex(rng.uniform(-0.3, 0.3), rng.uniform(0.0, 0.25)),
        Complex(rng.uniform(-0.3, 0.3), rng.uniform(0.8, 1.5)));
    const int d = 2 + trial % 6;
    const Characteristic ch = char_g2(Rational(0), Rational(trial % d, d));
    const int level = 1 + trial % 2;
    Eigen::Vector2d u(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95));
    Eigen::Vector2d v(rng.uniform(0.0, 0.2), rng.uniform(0.0, 0.2));
    const Eigen::VectorXcd z = u.cast<Complex>() + tau.matrix() * v.cast<Complex>();

    const double R = auto_radius(tau, z, level, params);
    const Complex at_r = theta_level(tau, z, ch, level, params);
    const Complex at_2r = lattice_sum(tau, z, ch.a(), level, 2 * R);
    CHECK(std::abs(at_r - at_2r) < 10 * params.eps_tail);
  }
}

TEST_CASE("characteristic normalization is exact") {
  const Characteristic c({Rational(-1, 2), Rational(7, 4)}, {Rational(2, 4), Rational(0)});
  CHECK(c.a()[0] == Rational(1, 2));
  CHECK(c.a()[1] == Rational(3, 4));
  CHECK(c.b()[0] == Rational(1, 2));
  CHECK(reduced_mod_one(Rational(6, 7) + Rational(1, 7)) == Rational(0));
  CHECK_THROWS_AS(Characteristic({Rational(0)}, {}), DomainError);
}

TEST_CASE("period matrix guards") {
  CHECK_THROWS_AS(PeriodMatrix::genus1(Complex(0, 0.01)), DomainError);
  CHECK_THROWS_AS(PeriodMatrix::genus1(Complex(0, -1)), DomainError);
  // Strong off-diagonal kills positive definiteness.
  CHECK_THROWS_AS(PeriodMatrix::genus2(Complex(0, 1), Complex(0, 1.2), Complex(0, 1)),
                  DomainError);
  const PeriodMatrix ok = PeriodMatrix::genus2(Complex(0, 1.2), Complex(0.3, 0.12),
                                               Complex(0, 0.9));
  CHECK(ok.entry(1, 0) == ok.entry(0, 1));
  CHECK(ok.lambda_min() > 0.05);
  CHECK_THROWS_AS(theta(ok, vec2(Complex(std::nan(""), 0), 0), Characteristic::zero(2)),
                  DomainError);
}

TEST_CASE("seeded rng is reproducible") {
  SeededRng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  const double x = SeededRng(7).uniform01();
  CHECK(x >= 0.0);
  CHECK(x < 1.0);
  CHECK(SeededRng(7).uniform01() == x);
  CHECK(c.next_u64() != SeededRng(42).next_u64());
}

// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/surface.hpp"

#include <doctest.h>

#include <cstdlib>
#include <numbers>

#include "oracles.hpp"
#include "prymrank/errors.hpp"
#include "prymrank/rank.hpp"

using namespace prymrank;

namespace {

PolarizedSurface generic_surface(int d) {
  return PolarizedSurface(
      PeriodMatrix::genus2(Complex(0.1, 1.2), Complex(0.31, 0.12), Complex(0.05, 0.9)), d);
}

struct ScopedThreads {
  explicit ScopedThreads(const char* value) { setenv("PRYM_RANK_THREADS", value, 1); }
  ~ScopedThreads() { unsetenv("PRYM_RANK_THREADS"); }
};

}  // namespace

TEST_CASE("level basis enumeration") {
  const auto s7 = generic_surface(7);
  const auto b1 = level_basis(s7, 1);
  REQUIRE(b1.dimension() == 7);
  for (int j = 0; j < 7; ++j) {
    CHECK(b1.characteristics[j].a()[0] == Rational(0));
    CHECK(b1.characteristics[j].a()[1] == Rational(j, 7));
    CHECK(b1.characteristics[j].b()[0] == Rational(0));
  }
  CHECK(level_basis(s7, 2).dimension() == 28);
  CHECK(level_basis(generic_surface(6), 2).dimension() == 24);
  CHECK_THROWS_AS(level_basis(s7, 3), UnsupportedLevel);
  CHECK_THROWS_AS(level_basis(s7, 0), UnsupportedLevel);
}

TEST_CASE("surface construction guards") {
  CHECK_THROWS_AS(generic_surface(1), DomainError);
  CHECK_THROWS_AS(generic_surface(65), DomainError);
  CHECK_THROWS_AS(PolarizedSurface(PeriodMatrix::genus1(Complex(0, 1)), 5), DomainError);
}

TEST_CASE("sample plans are seed-deterministic") {
  const auto s = generic_surface(3);
  const auto p1 = sample_points(s, {99, 16});
  const auto p2 = sample_points(s, {99, 16});
  const auto p3 = sample_points(s, {100, 16});
  REQUIRE(p1.size() == 16);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 16; ++i) {
    all_equal = all_equal && p1[i] == p2[i];
    any_diff = any_diff || p1[i] != p3[i];
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("section matrices have full rank at levels 1 and 2") {
  {
    const auto s = generic_surface(2);
    const auto m = evaluate_sections(level_basis(s, 1), {5, 8});
    REQUIRE(m.values.rows() == 8);
    REQUIRE(m.values.cols() == 2);
    CHECK(m.values.allFinite());
    const auto cert = numerical_rank(m.values);
    CHECK(cert.rank == 2);
    CHECK(cert.verdict == CertVerdict::certified);
  }
  {
    const auto s = generic_surface(7);
    const auto m = evaluate_sections(level_basis(s, 1), {5, 56});
    const auto cert = numerical_rank(m.values);
    CHECK(cert.rank == 7);
    CHECK(cert.verdict == CertVerdict::certified);
  }
}

TEST_CASE("evaluate_sections rejects undersized plans") {
  const auto s = generic_surface(7);
  CHECK_THROWS_AS(evaluate_sections(level_basis(s, 1), {5, 13}), DomainError);
  CHECK_THROWS_AS(evaluate_sections(level_basis(s, 2), {5, 55}), DomainError);
}

TEST_CASE("column normalization reports unit peaks") {
  const auto s = generic_surface(4);
  const auto m = evaluate_sections(level_basis(s, 1), {8, 20});
  REQUIRE(m.column_normalizers.size() == 4);
  for (int c = 0; c < 4; ++c) {
    CHECK(m.values.col(c).cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.column_normalizers[c] > 0.0);
  }
}

TEST_CASE("torsion shift residual on the worked moduli") {
  {
    const PolarizedSurface s(
        PeriodMatrix::genus2(Complex(0, 1.1), Complex(0.2, 0.1), Complex(0, 1.3)), 3);
    CHECK(torsion_shift_residual(s, {7, 20}) < 1e-10);
  }
  {
    // Diagonal tau: the identity reduces to a genus-1 half-period shift.
    const PolarizedSurface s(
        PeriodMatrix::genus2(Complex(0, 1), Complex(0, 0), Complex(0, 1)), 2);
    CHECK(torsion_shift_residual(s, {11, 20}) < 1e-12);
  }
}

TEST_CASE("torsion identity against the brute-force oracle") {
  // One explicit (j, z): theta_j(z + tau c) exp(pi i c^T tau c + 2 pi i c^T z)
  // equals theta_{j+1}(z), both sides summed directly at a doubled box.
  const Complex t11(0, 1.1), t12(0.2, 0.1), t22(0, 1.3);
  const int d = 3, j = 2;  // j = d-1 exercises the exact wrap-around
  const Complex z1(0.31, 0.25), z2(0.12, 0.4);
  const Complex tc1 = t12 / static_cast<double>(d), tc2 = t22 / static_cast<double>(d);
  const Complex pref =
      std::exp(Complex(0, std::numbers::pi) * (t22 / static_cast<double>(d * d)) +
               Complex(0, 2 * std::numbers::pi) * (z2 / static_cast<double>(d)));
  const Complex lhs = oracle::g2_theta(t11, t12, t22, z1 + tc1, z2 + tc2, 0,
                                       static_cast<double>(j) / d, 0, 0, 1, 30) *
                      pref;
  const Complex rhs = oracle::g2_theta(t11, t12, t22, z1, z2, 0, 0.0, 0, 0, 1, 30);
  CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("torsion identity reduces to the genus-1 oracle on diagonal tau") {
  const Complex tau2(0, 1);
  const double c = 0.5;  // d = 2
  const Complex z2(0.27, 0.33);
  const Complex pref = std::exp(Complex(0, std::numbers::pi) * (tau2 * c * c) +
                                Complex(0, 2 * std::numbers::pi) * (z2 * c));
  const Complex lhs = oracle::g1_theta(tau2, z2 + tau2 * c, 0.0, 0, 1, 25) * pref;
  const Complex rhs = oracle::g1_theta(tau2, z2, 0.5, 0, 1, 25);
  CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("product columns: shapes and preconditions") {
  CHECK(product_columns(level_basis(generic_surface(7), 1), {3, 7 * 8 * 4}).values.cols() ==
        28);
  CHECK(product_columns(level_basis(generic_surface(6), 1), {3, 6 * 8 * 4}).values.cols() ==
        21);
  CHECK(product_columns(level_basis(generic_surface(5), 1), {3, 5 * 8 * 4}).values.cols() ==
        15);
  CHECK_THROWS_AS(product_columns(level_basis(generic_surface(5), 1), {3, 39}), DomainError);
  CHECK_THROWS_AS(product_columns(level_basis(generic_surface(5), 2), {3, 200}), DomainError);
}

TEST_CASE("products lie in the level-2 span (containment with gap)") {
  for (int d : {4, 5}) {
    const auto s = generic_surface(d);
    const SamplePlan plan{21, 16 * d};
    const auto prod = product_columns(level_basis(s, 1), plan);
    const auto lvl2 = evaluate_sections(level_basis(s, 2), plan);
    Eigen::MatrixXcd combined(prod.values.rows(), prod.values.cols() + lvl2.values.cols());
    combined << prod.values, lvl2.values;
    const auto c2 = numerical_rank(lvl2.values);
    const auto cc = numerical_rank(combined);
    CHECK(c2.rank == 4 * d);
    CHECK(cc.rank == 4 * d);
    CHECK(c2.verdict == CertVerdict::certified);
    CHECK(cc.verdict == CertVerdict::certified);
  }
}

TEST_CASE("vanishing columns are rejected as degenerate") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(6, 3);
  m.col(1).setZero();
  CHECK_THROWS_AS(normalize_columns(m), EvaluationDegenerate);
  m.col(1).setConstant(Complex(1e-301, 0));
  CHECK_THROWS_AS(normalize_columns(m), EvaluationDegenerate);
}

TEST_CASE("garbage thread budget falls back to auto") {
  ScopedThreads env("not-a-number");
  const auto s = generic_surface(3);
  const auto m = evaluate_sections(level_basis(s, 1), {1, 12});
  CHECK(numerical_rank(m.values).rank == 3);
}

TEST_CASE("evaluation is bit-identical across thread budgets") {
  const auto s = generic_surface(5);
  const SamplePlan plan{77, 40};
  Eigen::MatrixXcd serial, parallel;
  {
    ScopedThreads env("1");
    serial = evaluate_sections(level_basis(s, 1), plan).values;
  }
  {
    ScopedThreads env("4");
    parallel = evaluate_sections(level_basis(s, 1), plan).values;
  }
  REQUIRE(serial.rows() == parallel.rows());
  bool identical = true;
  for (int i = 0; i < serial.rows(); ++i)
    for (int j = 0; j < serial.cols(); ++j)
      identical = identical && serial(i, j) == parallel(i, j);
  CHECK(identical);
}

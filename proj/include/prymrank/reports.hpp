// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_REPORTS_HPP
#define PRYMRANK_REPORTS_HPP

#include <string>

#include "prymrank/bielliptic.hpp"
#include "prymrank/rank.hpp"

namespace prymrank {

// Every document embeds tool name, version, the command, and the full
// effective configuration (all numeric defaults included), so a report is
// reproducible from its own bytes. gap_ratio = +inf serializes as null.

struct MultMapRunConfig {
  int d = 0;
  PeriodMatrix tau;
  std::string tau_input;  // the --tau string as given
  std::uint64_t seed = 0;
  int oversample = 4;
  double eps_rank = 1e-8;
  double gap_min = 1e4;
  double eps_tail = 1e-15;
  double safety = 2.0;
  std::string expect = "auto";
};

std::string render_multmap_document(const MultMapReport& report,
                                    const MultMapRunConfig& config);

struct BiellipticRunConfig {
  PeriodMatrix tau1;
  Complex delta_lift;
  int m0 = 0, n0 = 0, d = 0;
  std::uint64_t seed = 0;
  int count = 0;
  double eps_rank = 1e-8;
  double gap_min = 1e4;
  double eps_tail = 1e-15;
  double safety = 2.0;
};

std::string render_bielliptic_document(const BiellipticG1Report& report,
                                       const BiellipticRunConfig& config);

struct BasisCheckResult {
  int level = 0;
  int dimension = 0;
  RankCertificate certificate;
  bool ok = false;  // certified rank == dimension
};

struct BasisCheckRunConfig {
  int d = 0;
  PeriodMatrix tau;
  std::string tau_input;
  int level = 1;
  std::uint64_t seed = 0;
  int oversample = 4;
  double eps_rank = 1e-8;
  double gap_min = 1e4;
  double eps_tail = 1e-15;
  double safety = 2.0;
};

std::string render_basis_check_document(const BasisCheckResult& result,
                                        const BasisCheckRunConfig& config);

struct HeisenbergRunConfig {
  int d = 0;
  PeriodMatrix tau;
  std::string tau_input;
  std::uint64_t seed = 0;
  int count = 0;
  double threshold = 1e-8;
  double eps_tail = 1e-15;
  double safety = 2.0;
};

std::string render_heisenberg_document(double residual, bool ok,
                                       const HeisenbergRunConfig& config);

struct ThetaRunConfig {
  PeriodMatrix tau;
  std::string tau_input;
  Eigen::VectorXcd z;
  Characteristic ch;
  int level = 1;
  double eps_tail = 1e-15;
  double safety = 2.0;
};

std::string render_theta_document(Complex value, const ThetaRunConfig& config);

/// CSV schema: header "t,rank,sigma_min_normalized,verdict", one row per
/// step, LF line endings. Skipped rows leave rank and sigma empty.
std::string render_sweep_csv(const std::vector<SweepRow>& rows);

std::string render_ledger_document(const std::string& op, long long g, long long d,
                                   bool bielliptic, const std::string& payload_json);

}  // namespace prymrank

#endif

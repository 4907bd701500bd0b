// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/rank.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>

#include "prymrank/errors.hpp"
#include "prymrank/threads.hpp"

namespace prymrank {

std::string_view to_string(CertVerdict v) {
  return v == CertVerdict::certified ? "certified" : "indeterminate";
}

std::string_view to_string(PrymVerdict v) {
  switch (v) {
    case PrymVerdict::differential_injective_certified:
      return "differential_injective_certified";
    case PrymVerdict::not_surjective:
      return "not_surjective";
    default:
      return "indeterminate";
  }
}

RankCertificate numerical_rank(const Eigen::MatrixXcd& matrix, double eps_rank,
                               double gap_min) {
  if (!(eps_rank > 0 && eps_rank < 1)) throw DomainError("eps_rank must lie in (0, 1)");
  if (!(gap_min >= 1)) throw DomainError("gap_min must be >= 1");
  if (!matrix.allFinite()) throw MatrixInvalid("matrix contains NaN or Inf entries");

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(matrix);
  const Eigen::VectorXd sv = svd.singularValues();  // descending

  RankCertificate cert;
  cert.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double sigma1 = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > eps_rank * sigma1) ++rank;
  cert.rank = rank;

  // Full rank (or the zero matrix) leaves nothing below the cut: gap +inf.
  if (rank == 0 || rank == sv.size())
    cert.gap_ratio = std::numeric_limits<double>::infinity();
  else
    cert.gap_ratio = sv(rank - 1) / sv(rank);
  cert.verdict =
      cert.gap_ratio >= gap_min ? CertVerdict::certified : CertVerdict::indeterminate;
  return cert;
}

MultMapReport multmap_report(const PolarizedSurface& surface, const SamplePlan& plan,
                             const RankParams& params) {
  const int d = surface.d();
  const int target = 4 * d;
  const int sym2 = d * (d + 1) / 2;

  const auto basis1 = level_basis(surface, 1);
  const auto products = product_columns(basis1, plan, params.trunc);
  const auto level2 = evaluate_sections(level_basis(surface, 2), plan, params.trunc);

  Eigen::MatrixXcd combined(products.values.rows(), sym2 + target);
  combined << products.values, level2.values;

  const auto product_cert = numerical_rank(products.values, params.eps_rank, params.gap_min);
  const auto level2_cert = numerical_rank(level2.values, params.eps_rank, params.gap_min);
  const auto combined_cert = numerical_rank(combined, params.eps_rank, params.gap_min);

  const bool containment_ok = level2_cert.verdict == CertVerdict::certified &&
                              combined_cert.verdict == CertVerdict::certified &&
                              level2_cert.rank == target && combined_cert.rank == target;
  const bool certified = product_cert.verdict == CertVerdict::certified;
  const int rank = product_cert.rank;
  const bool surjective = certified && rank == target;
  const bool injective = certified && rank == sym2;

  PrymVerdict verdict;
  if (!certified || !containment_ok)
    verdict = PrymVerdict::indeterminate;
  else if ((d >= 7 && surjective) || (d == 6 && injective))
    verdict = PrymVerdict::differential_injective_certified;
  else
    verdict = PrymVerdict::not_surjective;

  return MultMapReport{
      .d = d,
      .tau = surface.tau(),
      .seed = plan.seed,
      .sym2_dim = sym2,
      .target_dim = target,
      .rank = rank,
      // The cokernel lives inside H^0(L^2); without containment it is
      // meaningless and the report is invalid.
      .coker_dim = containment_ok && rank <= target ? target - rank : -1,
      .containment_ok = containment_ok,
      .surjective = surjective,
      .injective = injective,
      .prym_verdict = verdict,
      .product_cert = product_cert,
      .level2_cert = level2_cert,
      .combined_cert = combined_cert,
  };
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  if (spec.steps < 1) throw DomainError("sweep needs at least one step");
  if (spec.oversample < 2) throw DomainError("oversample must be >= 2");
  std::vector<SweepRow> rows(static_cast<std::size_t>(spec.steps));
  parallel_for(spec.steps, [&](int s) {
    const double t =
        spec.steps == 1
            ? spec.t_begin
            : spec.t_begin + (spec.t_end - spec.t_begin) * s / (spec.steps - 1);
    SweepRow row;
    row.t = t;
    try {
      const PeriodMatrix tau = PeriodMatrix::genus2(
          spec.base_tau.entry(0, 0) + t * spec.direction[0],
          spec.base_tau.entry(0, 1) + t * spec.direction[1],
          spec.base_tau.entry(1, 1) + t * spec.direction[2]);
      const PolarizedSurface surface(tau, spec.d);
      const SamplePlan plan{spec.plan_seed, spec.oversample * 4 * spec.d};
      const MultMapReport report = multmap_report(surface, plan, spec.params);
      row.rank = report.rank;
      const auto& sv = report.product_cert.singular_values;
      row.sigma_min_normalized = !sv.empty() && sv.front() > 0 ? sv.back() / sv.front() : 0.0;
      row.verdict = report.product_cert.verdict;
    } catch (const DomainError&) {
      row.skipped = true;  // tau left the admissible domain at this step
    }
    rows[static_cast<std::size_t>(s)] = row;
  });
  return rows;
}

}  // namespace prymrank

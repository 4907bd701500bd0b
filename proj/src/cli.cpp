// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <complex>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "prymrank/bielliptic.hpp"
#include "prymrank/errors.hpp"
#include "prymrank/json_writer.hpp"
#include "prymrank/ledger.hpp"
#include "prymrank/rank.hpp"
#include "prymrank/reports.hpp"
#include "prymrank/rng.hpp"
#include "prymrank/version.hpp"

namespace prymrank::cli {

namespace {

double parse_double_strict(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);  // from_chars rejects '+'
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("malformed number: '" + std::string(text) + "'");
  return v;
}

// Accepts "1.2", "1.2i", "0.31+0.12i", "-0.5-0.3i", "i", "-i", "2+i".
Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw DomainError("empty complex literal");

  // Split before the sign of the imaginary part (not an exponent sign).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }

  auto parse_imag = [](std::string_view part) -> double {
    if (part.empty() || part.back() != 'i')
      throw DomainError("imaginary part must end in 'i'");
    part.remove_suffix(1);
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double_strict(part);
  };

  if (split == std::string::npos) {
    if (s.back() == 'i') return Complex(0.0, parse_imag(s));
    return Complex(parse_double_strict(s), 0.0);
  }
  if (s.back() != 'i')
    throw DomainError("malformed complex literal: '" + std::string(text) + "'");
  return Complex(parse_double_strict(std::string_view(s).substr(0, split)),
                 parse_imag(std::string_view(s).substr(split)));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Grammar: "t11,t12,t22" | "product:t1,t2" | "random" (seeded generic
// draw, see random_period_matrix_g2).
PeriodMatrix parse_tau_g2(const std::string& text, std::uint64_t seed) {
  if (text == "random") return random_period_matrix_g2(seed);
  if (text.starts_with("product:")) {
    const auto parts = split(text.substr(8), ',');
    if (parts.size() != 2) throw DomainError("product tau needs two entries: product:t1,t2");
    return PeriodMatrix::genus2(parse_complex(parts[0]), Complex(0, 0),
                                parse_complex(parts[1]));
  }
  const auto parts = split(text, ',');
  if (parts.size() != 3)
    throw DomainError("tau needs three upper-triangle entries t11,t12,t22");
  return PeriodMatrix::genus2(parse_complex(parts[0]), parse_complex(parts[1]),
                              parse_complex(parts[2]));
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file: " + out_path);
  f << text;
}

struct CommonOpts {
  std::uint64_t seed = 0;
  double eps_rank = 1e-8;
  double gap_min = 1e4;
  double eps_tail = 1e-15;
  double safety = 2.0;
  std::string out;
};

void add_tolerance_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "RNG seed for the sample plan");
  cmd->add_option("--eps-rank", o.eps_rank, "relative singular value cutoff");
  cmd->add_option("--gap-min", o.gap_min, "certification gap threshold");
  cmd->add_option("--eps-tail", o.eps_tail, "theta series tail bound");
  cmd->add_option("--safety", o.safety, "truncation radius safety margin");
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
}

int exit_code_for_multmap(const MultMapReport& report, const std::string& expect) {
  if (report.prym_verdict == PrymVerdict::indeterminate) return 3;
  PrymVerdict expected;
  if (expect == "degenerate") {
    expected = PrymVerdict::not_surjective;
  } else {  // "auto": generic non-bielliptic expectation at this d
    expected = ledger::theorem_a_expected(report.d, false) == ledger::TheoremAVerdict::injective
                   ? PrymVerdict::differential_injective_certified
                   : PrymVerdict::not_surjective;
  }
  return report.prym_verdict == expected ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"numerical rank experiments for multiplication maps on (1,d)-polarized "
               "abelian surfaces"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  // ---- theta ----
  auto* theta_cmd = app.add_subcommand("theta", "evaluate one theta value");
  int theta_g = 2;
  std::string theta_tau, theta_z, theta_a, theta_b;
  int theta_levelv = 1;
  CommonOpts theta_opts;
  theta_cmd->add_option("--g", theta_g, "genus (1 or 2)");
  theta_cmd->add_option("--tau", theta_tau, "period matrix")->required();
  theta_cmd->add_option("--z", theta_z, "argument, comma-separated complex entries")
      ->required();
  theta_cmd->add_option("--a", theta_a, "characteristic a, comma-separated rationals");
  theta_cmd->add_option("--b", theta_b, "characteristic b, comma-separated rationals");
  theta_cmd->add_option("--level", theta_levelv, "theta level k (b ignored for k > 1)");
  add_tolerance_flags(theta_cmd, theta_opts);

  // ---- basis-check ----
  auto* basis_cmd = app.add_subcommand("basis-check", "rank of a section basis on a plan");
  int basis_d = 7, basis_level = 1, basis_oversample = 4;
  std::string basis_tau;
  CommonOpts basis_opts;
  basis_cmd->add_option("--d", basis_d, "polarization degree")->required();
  basis_cmd->add_option("--tau", basis_tau, "period matrix")->required();
  basis_cmd->add_option("--level", basis_level, "section space level (1 or 2)");
  basis_cmd->add_option("--oversample", basis_oversample, "points per dimension");
  add_tolerance_flags(basis_cmd, basis_opts);

  // ---- heisenberg ----
  auto* heis_cmd =
      app.add_subcommand("heisenberg", "torsion-translation identity residual");
  int heis_d = 7, heis_count = 32;
  double heis_threshold = 1e-8;
  std::string heis_tau;
  CommonOpts heis_opts;
  heis_cmd->add_option("--d", heis_d, "polarization degree")->required();
  heis_cmd->add_option("--tau", heis_tau, "period matrix")->required();
  heis_cmd->add_option("--count", heis_count, "sample points");
  heis_cmd->add_option("--threshold", heis_threshold, "pass threshold on the residual");
  add_tolerance_flags(heis_cmd, heis_opts);

  // ---- multmap ----
  auto* mult_cmd =
      app.add_subcommand("multmap", "rank report for Sym^2 H^0(L) -> H^0(L^2)");
  int mult_d = 7, mult_oversample = 4;
  std::string mult_tau, mult_expect = "auto";
  CommonOpts mult_opts;
  mult_cmd->add_option("--d", mult_d, "polarization degree")->required();
  mult_cmd->add_option("--tau", mult_tau, "period matrix")->required();
  mult_cmd->add_option("--oversample", mult_oversample, "points per target dimension");
  mult_cmd->add_option("--expect", mult_expect, "expected outcome: auto | degenerate")
      ->check(CLI::IsMember({"auto", "degenerate"}));
  add_tolerance_flags(mult_cmd, mult_opts);

  // ---- sweep ----
  auto* sweep_cmd = app.add_subcommand("sweep", "rank scan along a moduli path (CSV)");
  int sweep_d = 7, sweep_steps = 11, sweep_oversample = 4;
  double sweep_t0 = 0.0, sweep_t1 = 0.5;
  std::string sweep_base, sweep_dir = "0,1,0";
  CommonOpts sweep_opts;
  sweep_cmd->add_option("--d", sweep_d, "polarization degree")->required();
  sweep_cmd->add_option("--base-tau", sweep_base, "path start")->required();
  sweep_cmd->add_option("--direction", sweep_dir,
                        "symmetric perturbation, entries d11,d12,d22");
  sweep_cmd->add_option("--steps", sweep_steps, "number of rows");
  sweep_cmd->add_option("--t0", sweep_t0, "path parameter start");
  sweep_cmd->add_option("--t1", sweep_t1, "path parameter end");
  sweep_cmd->add_option("--oversample", sweep_oversample, "points per target dimension");
  add_tolerance_flags(sweep_cmd, sweep_opts);

  // ---- bielliptic-g1 ----
  auto* bi_cmd = app.add_subcommand("bielliptic-g1",
                                    "elliptic-curve product system rank bound");
  int bi_d = 6, bi_count = 32;
  std::string bi_tau1 = "1.3i", bi_delta = "0.31+0.17i", bi_torsion = "1,1";
  CommonOpts bi_opts;
  bi_cmd->add_option("--d", bi_d, "torsion order")->required();
  bi_cmd->add_option("--tau1", bi_tau1, "elliptic period");
  bi_cmd->add_option("--delta", bi_delta, "lift of the degree-1 divisor point");
  bi_cmd->add_option("--torsion", bi_torsion, "integers m0,n0 with t = (m0+n0*tau1)/d");
  bi_cmd->add_option("--count", bi_count, "sample points");
  add_tolerance_flags(bi_cmd, bi_opts);

  // ---- ledger ----
  auto* ledger_cmd = app.add_subcommand("ledger", "exact dimension bookkeeping");
  bool op_prym_type = false, op_cover_genus = false, op_dims = false, op_thm = false;
  long long ledger_g = 2, ledger_d = 7;
  bool ledger_bielliptic = false;
  std::string ledger_out;
  ledger_cmd->add_flag("--prym-type", op_prym_type, "polarization type of the Prym");
  ledger_cmd->add_flag("--cover-genus", op_cover_genus, "genus of the covering curve");
  ledger_cmd->add_flag("--dims-g2", op_dims, "section space dimensions at genus 2");
  ledger_cmd->add_flag("--theorem-a", op_thm, "expected differential verdict");
  ledger_cmd->add_option("--g", ledger_g, "base genus");
  ledger_cmd->add_option("--d", ledger_d, "cover degree");
  ledger_cmd->add_flag("--bielliptic", ledger_bielliptic, "bielliptic cover assumed");
  ledger_cmd->add_option("--out", ledger_out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*theta_cmd) {
      const int g = theta_g;
      if (g != 1 && g != 2) throw DomainError("genus must be 1 or 2");
      PeriodMatrix tau = g == 2 ? parse_tau_g2(theta_tau, theta_opts.seed)
                                : PeriodMatrix::genus1(parse_complex(theta_tau));
      const auto zparts = split(theta_z, ',');
      if (static_cast<int>(zparts.size()) != g)
        throw DomainError("z needs exactly g entries");
      Eigen::VectorXcd z(g);
      for (int i = 0; i < g; ++i) z(i) = parse_complex(zparts[static_cast<std::size_t>(i)]);
      auto parse_char_part = [&](const std::string& text) {
        std::vector<Rational> r(static_cast<std::size_t>(g), Rational(0));
        if (!text.empty()) {
          const auto parts = split(text, ',');
          if (static_cast<int>(parts.size()) != g)
            throw DomainError("characteristic needs exactly g entries");
          for (int i = 0; i < g; ++i) r[static_cast<std::size_t>(i)] =
              parse_rational(parts[static_cast<std::size_t>(i)]);
        }
        return r;
      };
      const Characteristic ch(parse_char_part(theta_a), parse_char_part(theta_b));
      const TruncationParams trunc{theta_opts.eps_tail, theta_opts.safety};
      const Complex value = theta_levelv == 1 ? theta(tau, z, ch, trunc)
                                              : theta_level(tau, z, ch, theta_levelv, trunc);
      write_output(render_theta_document(
                       value, ThetaRunConfig{tau, theta_tau, z, ch, theta_levelv,
                                             theta_opts.eps_tail, theta_opts.safety}) +
                       "\n",
                   theta_opts.out);
      return 0;
    }

    if (*basis_cmd) {
      const PeriodMatrix tau = parse_tau_g2(basis_tau, basis_opts.seed);
      const PolarizedSurface surface(tau, basis_d);
      const auto basis = level_basis(surface, basis_level);
      const SamplePlan plan{basis_opts.seed, basis_oversample * basis.dimension()};
      const TruncationParams trunc{basis_opts.eps_tail, basis_opts.safety};
      const auto values = evaluate_sections(basis, plan, trunc);
      const auto cert = numerical_rank(values.values, basis_opts.eps_rank, basis_opts.gap_min);
      BasisCheckResult result{basis_level, basis.dimension(), cert,
                              cert.verdict == CertVerdict::certified &&
                                  cert.rank == basis.dimension()};
      write_output(render_basis_check_document(
                       result, BasisCheckRunConfig{basis_d, tau, basis_tau, basis_level,
                                                   basis_opts.seed, basis_oversample,
                                                   basis_opts.eps_rank, basis_opts.gap_min,
                                                   basis_opts.eps_tail, basis_opts.safety}) +
                       "\n",
                   basis_opts.out);
      if (result.ok) return 0;
      return cert.verdict == CertVerdict::certified ? 2 : 3;
    }

    if (*heis_cmd) {
      const PeriodMatrix tau = parse_tau_g2(heis_tau, heis_opts.seed);
      const PolarizedSurface surface(tau, heis_d);
      const SamplePlan plan{heis_opts.seed, heis_count};
      const TruncationParams trunc{heis_opts.eps_tail, heis_opts.safety};
      const double residual = torsion_shift_residual(surface, plan, trunc);
      const bool ok = residual < heis_threshold;
      write_output(render_heisenberg_document(
                       residual, ok,
                       HeisenbergRunConfig{heis_d, tau, heis_tau, heis_opts.seed, heis_count,
                                           heis_threshold, heis_opts.eps_tail,
                                           heis_opts.safety}) +
                       "\n",
                   heis_opts.out);
      return ok ? 0 : 2;
    }

    if (*mult_cmd) {
      const PeriodMatrix tau = parse_tau_g2(mult_tau, mult_opts.seed);
      const PolarizedSurface surface(tau, mult_d);
      const SamplePlan plan{mult_opts.seed, mult_oversample * 4 * mult_d};
      const RankParams params{mult_opts.eps_rank, mult_opts.gap_min,
                              TruncationParams{mult_opts.eps_tail, mult_opts.safety}};
      const MultMapReport report = multmap_report(surface, plan, params);
      write_output(render_multmap_document(
                       report, MultMapRunConfig{mult_d, tau, mult_tau, mult_opts.seed,
                                                mult_oversample, mult_opts.eps_rank,
                                                mult_opts.gap_min, mult_opts.eps_tail,
                                                mult_opts.safety, mult_expect}) +
                       "\n",
                   mult_opts.out);
      return exit_code_for_multmap(report, mult_expect);
    }

    if (*sweep_cmd) {
      const PeriodMatrix base = parse_tau_g2(sweep_base, sweep_opts.seed);
      const auto dir_parts = split(sweep_dir, ',');
      if (dir_parts.size() != 3)
        throw DomainError("direction needs three entries d11,d12,d22");
      const SweepSpec spec{
          .base_tau = base,
          .direction = {parse_complex(dir_parts[0]), parse_complex(dir_parts[1]),
                        parse_complex(dir_parts[2])},
          .steps = sweep_steps,
          .t_begin = sweep_t0,
          .t_end = sweep_t1,
          .d = sweep_d,
          .plan_seed = sweep_opts.seed,
          .oversample = sweep_oversample,
          .params = RankParams{sweep_opts.eps_rank, sweep_opts.gap_min,
                               TruncationParams{sweep_opts.eps_tail, sweep_opts.safety}},
      };
      const auto rows = sweep(spec);
      write_output(render_sweep_csv(rows), sweep_opts.out);
      for (const auto& row : rows)
        if (!row.skipped && row.verdict != CertVerdict::certified) return 3;
      return 0;
    }

    if (*bi_cmd) {
      const auto torsion_parts = split(bi_torsion, ',');
      if (torsion_parts.size() != 2) throw DomainError("torsion needs two integers m0,n0");
      const int m0 = static_cast<int>(parse_double_strict(torsion_parts[0]));
      const int n0 = static_cast<int>(parse_double_strict(torsion_parts[1]));
      const PeriodMatrix tau1 = PeriodMatrix::genus1(parse_complex(bi_tau1));
      const Complex delta = parse_complex(bi_delta);
      const EllipticData data(tau1, delta, m0, n0, bi_d);
      const SamplePlan plan{bi_opts.seed, bi_count};
      const TruncationParams trunc{bi_opts.eps_tail, bi_opts.safety};
      const auto report =
          bielliptic_report(data, plan, bi_opts.eps_rank, bi_opts.gap_min, trunc);
      write_output(render_bielliptic_document(
                       report, BiellipticRunConfig{tau1, delta, m0, n0, bi_d, bi_opts.seed,
                                                   bi_count, bi_opts.eps_rank,
                                                   bi_opts.gap_min, bi_opts.eps_tail,
                                                   bi_opts.safety}) +
                       "\n",
                   bi_opts.out);
      if (report.indeterminate) return 3;
      return report.consistent_with_paper ? 0 : 2;
    }

    if (*ledger_cmd) {
      const int ops = (op_prym_type ? 1 : 0) + (op_cover_genus ? 1 : 0) + (op_dims ? 1 : 0) +
                      (op_thm ? 1 : 0);
      if (ops != 1)
        throw DomainError(
            "pick exactly one of --prym-type --cover-genus --dims-g2 --theorem-a");
      JsonWriter payload;
      std::string op;
      if (op_prym_type) {
        op = "prym_type";
        payload.begin_object().key("prym_type").begin_array();
        for (long long v : ledger::prym_type(ledger_g, ledger_d)) payload.value(v);
        payload.end_array().end_object();
      } else if (op_cover_genus) {
        op = "cover_genus";
        payload.begin_object()
            .field("cover_genus", ledger::cover_genus(ledger_g, ledger_d))
            .end_object();
      } else if (op_dims) {
        op = "dims_g2";
        const auto dims = ledger::dims_g2(ledger_d);
        payload.begin_object()
            .field("h0_L", dims.h0_L)
            .field("h0_L2", dims.h0_L2)
            .field("dim_W", dims.dim_W)
            .field("sym2_inv_dim", dims.sym2_inv_dim)
            .field("h0_2KD", dims.h0_2KD)
            .field("sym2_dim", dims.sym2_dim)
            .end_object();
      } else {
        op = "theorem_a_expected";
        const auto verdict = ledger::theorem_a_expected(ledger_d, ledger_bielliptic);
        payload.begin_object()
            .field("theorem_a_expected",
                   verdict == ledger::TheoremAVerdict::injective ? "injective"
                                                                 : "not_injective")
            .end_object();
      }
      write_output(
          render_ledger_document(op, ledger_g, ledger_d, ledger_bielliptic, payload.str()) +
              "\n",
          ledger_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace prymrank::cli

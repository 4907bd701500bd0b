// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/reports.hpp"

#include <cmath>

#include "prymrank/json_writer.hpp"
#include "prymrank/version.hpp"

namespace prymrank {

namespace {

void emit_complex(JsonWriter& w, Complex z) {
  w.begin_array().value(z.real()).value(z.imag()).end_array();
}

void emit_tau(JsonWriter& w, const PeriodMatrix& tau) {
  w.begin_object();
  w.field("genus", tau.genus());
  w.key("t11");
  emit_complex(w, tau.entry(0, 0));
  if (tau.genus() == 2) {
    w.key("t12");
    emit_complex(w, tau.entry(0, 1));
    w.key("t22");
    emit_complex(w, tau.entry(1, 1));
  }
  w.end_object();
}

void emit_certificate(JsonWriter& w, const RankCertificate& cert) {
  w.begin_object();
  w.field("rank", cert.rank);
  w.key("gap_ratio");
  if (std::isfinite(cert.gap_ratio))
    w.value(cert.gap_ratio);
  else
    w.null();  // +inf: full rank or zero matrix
  w.field("verdict", to_string(cert.verdict));
  w.key("singular_values").begin_array();
  for (double s : cert.singular_values) w.value(s);
  w.end_array();
  w.end_object();
}

void emit_rational(JsonWriter& w, const Rational& r) {
  if (r.denominator() == 1)
    w.value(std::to_string(r.numerator()));
  else
    w.value(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

JsonWriter document_head(std::string_view command) {
  JsonWriter w;
  w.begin_object();
  w.field("tool", kToolName);
  w.field("version", kToolVersion);
  w.field("command", command);
  return w;
}

}  // namespace

std::string render_multmap_document(const MultMapReport& report,
                                    const MultMapRunConfig& config) {
  JsonWriter w = document_head("multmap");
  w.key("config").begin_object();
  w.field("d", config.d);
  w.field("tau_input", config.tau_input);
  w.key("tau");
  emit_tau(w, config.tau);
  w.field("seed", config.seed);
  w.field("oversample", config.oversample);
  w.field("eps_rank", config.eps_rank);
  w.field("gap_min", config.gap_min);
  w.field("eps_tail", config.eps_tail);
  w.field("safety", config.safety);
  w.field("expect", config.expect);
  w.end_object();

  w.key("report").begin_object();
  w.field("d", report.d);
  w.key("tau");
  emit_tau(w, report.tau);
  w.field("seed", report.seed);
  w.field("sym2_dim", report.sym2_dim);
  w.field("target_dim", report.target_dim);
  w.field("rank", report.rank);
  w.key("coker_dim");
  if (report.coker_dim >= 0)
    w.value(report.coker_dim);
  else
    w.null();  // containment failed: report invalid
  w.field("containment_ok", report.containment_ok);
  w.field("surjective", report.surjective);
  w.field("injective", report.injective);
  w.field("prym_verdict", to_string(report.prym_verdict));
  w.key("product_certificate");
  emit_certificate(w, report.product_cert);
  w.key("level2_certificate");
  emit_certificate(w, report.level2_cert);
  w.key("combined_certificate");
  emit_certificate(w, report.combined_cert);
  w.end_object();

  w.end_object();
  return w.str();
}

std::string render_bielliptic_document(const BiellipticG1Report& report,
                                       const BiellipticRunConfig& config) {
  JsonWriter w = document_head("bielliptic-g1");
  w.key("config").begin_object();
  w.key("tau1");
  emit_complex(w, config.tau1.entry(0, 0));
  w.key("delta");
  emit_complex(w, config.delta_lift);
  w.field("m0", config.m0);
  w.field("n0", config.n0);
  w.field("d", config.d);
  w.field("seed", config.seed);
  w.field("count", config.count);
  w.field("eps_rank", config.eps_rank);
  w.field("gap_min", config.gap_min);
  w.field("eps_tail", config.eps_tail);
  w.field("safety", config.safety);
  w.end_object();

  w.key("report").begin_object();
  w.field("d", report.d);
  w.field("num_products", report.num_products);
  w.field("rank", report.rank);
  w.field("target_dim_curve_level", report.target_dim_curve_level);
  w.field("coker_lower_bound", report.coker_lower_bound);
  w.field("consistent_with_paper", report.consistent_with_paper);
  w.field("out_of_theorem_range", report.out_of_theorem_range);
  w.field("indeterminate", report.indeterminate);
  w.key("certificate");
  emit_certificate(w, report.certificate);
  w.end_object();

  w.end_object();
  return w.str();
}

std::string render_basis_check_document(const BasisCheckResult& result,
                                        const BasisCheckRunConfig& config) {
  JsonWriter w = document_head("basis-check");
  w.key("config").begin_object();
  w.field("d", config.d);
  w.field("tau_input", config.tau_input);
  w.key("tau");
  emit_tau(w, config.tau);
  w.field("level", config.level);
  w.field("seed", config.seed);
  w.field("oversample", config.oversample);
  w.field("eps_rank", config.eps_rank);
  w.field("gap_min", config.gap_min);
  w.field("eps_tail", config.eps_tail);
  w.field("safety", config.safety);
  w.end_object();

  w.key("report").begin_object();
  w.field("level", result.level);
  w.field("dimension", result.dimension);
  w.field("rank", result.certificate.rank);
  w.field("ok", result.ok);
  w.key("certificate");
  emit_certificate(w, result.certificate);
  w.end_object();

  w.end_object();
  return w.str();
}

std::string render_heisenberg_document(double residual, bool ok,
                                       const HeisenbergRunConfig& config) {
  JsonWriter w = document_head("heisenberg");
  w.key("config").begin_object();
  w.field("d", config.d);
  w.field("tau_input", config.tau_input);
  w.key("tau");
  emit_tau(w, config.tau);
  w.field("seed", config.seed);
  w.field("count", config.count);
  w.field("threshold", config.threshold);
  w.field("eps_tail", config.eps_tail);
  w.field("safety", config.safety);
  w.end_object();

  w.key("report").begin_object();
  w.field("max_residual", residual);
  w.field("threshold", config.threshold);
  w.field("ok", ok);
  w.end_object();

  w.end_object();
  return w.str();
}

std::string render_theta_document(Complex value, const ThetaRunConfig& config) {
  JsonWriter w = document_head("theta");
  w.key("config").begin_object();
  w.field("tau_input", config.tau_input);
  w.key("tau");
  emit_tau(w, config.tau);
  w.key("z").begin_array();
  for (int i = 0; i < config.z.size(); ++i) emit_complex(w, config.z(i));
  w.end_array();
  w.key("a").begin_array();
  for (const auto& r : config.ch.a()) emit_rational(w, r);
  w.end_array();
  w.key("b").begin_array();
  for (const auto& r : config.ch.b()) emit_rational(w, r);
  w.end_array();
  w.field("level", config.level);
  w.field("eps_tail", config.eps_tail);
  w.field("safety", config.safety);
  w.end_object();

  w.key("report").begin_object();
  w.key("value");
  emit_complex(w, value);
  w.end_object();

  w.end_object();
  return w.str();
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "t,rank,sigma_min_normalized,verdict\n";
  for (const auto& row : rows) {
    out += format_double(row.t);
    if (row.skipped) {
      out += ",,,skipped\n";
    } else {
      out += ',';
      out += std::to_string(row.rank);
      out += ',';
      out += format_double(row.sigma_min_normalized);
      out += ',';
      out += to_string(row.verdict);
      out += '\n';
    }
  }
  return out;
}

std::string render_ledger_document(const std::string& op, long long g, long long d,
                                   bool bielliptic, const std::string& payload_json) {
  JsonWriter w = document_head("ledger");
  w.key("config").begin_object();
  w.field("op", op);
  w.field("g", g);
  w.field("d", d);
  w.field("bielliptic", bielliptic);
  w.end_object();
  w.key("report").raw(payload_json);
  w.end_object();
  return w.str();
}

}  // namespace prymrank

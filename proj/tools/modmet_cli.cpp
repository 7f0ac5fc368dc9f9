// Copyright 2026 The modmet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front door for the library: axiom audits, worked-example
// reproduction tables, sequence diagnostics, and segmented ODE solves.
// Exit status: 0 = every checked property passed, 1 = a checked property
// failed, 2 = usage or configuration error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modmet/axioms.hpp"
#include "modmet/errors.hpp"
#include "modmet/fixed_point.hpp"
#include "modmet/gv_modular.hpp"
#include "modmet/metrics.hpp"
#include "modmet/modular.hpp"
#include "modmet/ode.hpp"
#include "modmet/phi.hpp"
#include "modmet/report_io.hpp"
#include "modmet/sampling.hpp"
#include "modmet/sequences.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.12g", v);
  return b;
}

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

std::string pow2_check(const std::string& s) {
  unsigned long v = 0;
  try {
    v = std::stoul(s);
  } catch (...) {
    return "not a number";
  }
  return is_pow2(v) ? "" : "must be a power of two, at least 2";
}

std::string ascending_check(const std::vector<double>& xs) {
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) return "values must be strictly ascending";
  }
  for (double x : xs) {
    if (!(x > 0.0)) return "values must be positive";
  }
  return "";
}

// Writes content to the path, "-" meaning stdout. Returns false on an I/O
// failure, which callers treat as a configuration error.
bool write_out(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  f << content;
  return static_cast<bool>(f);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

modmet::PhiFunction phi_by_name(const std::string& name) {
  if (name == "exp") return modmet::PhiFunction::exp_minus_one();
  if (name == "linear") return modmet::PhiFunction::linear();
  if (name == "power2") return modmet::PhiFunction::power(2.0);
  throw std::invalid_argument("unknown phi: " + name);
}

// ---------------------------------------------------------------------------
// axioms

struct AxiomsConfig {
  std::string modular = "velocity";
  std::string mode = "auto";
  std::size_t points = 5;
  std::vector<double> lambdas = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
  std::uint64_t seed = 1;
  std::string phi = "exp";
  std::size_t grid = 64;
  std::string out = "-";
  std::string format = "json";
};

modmet::AxiomMode resolve_mode(const std::string& mode,
                               modmet::ModularFlags flags) {
  if (mode == "pseudomodular") return modmet::AxiomMode::Pseudomodular;
  if (mode == "modular") return modmet::AxiomMode::Modular;
  if (mode == "strict") return modmet::AxiomMode::Strict;
  if (mode == "convex") return modmet::AxiomMode::Convex;
  if (flags.claims_convex) return modmet::AxiomMode::Convex;
  if (flags.claims_strict) return modmet::AxiomMode::Strict;
  return modmet::AxiomMode::Modular;
}

int emit_axiom_report(const modmet::AxiomReport& rep,
                      const AxiomsConfig& cfg) {
  const std::string body = cfg.format == "csv"
                               ? modmet::axiom_report_csv(rep)
                               : dump(modmet::axiom_report_json(rep));
  if (!write_out(cfg.out, body)) {
    std::cerr << "cannot write " << cfg.out << "\n";
    return 2;
  }
  return rep.passed() ? 0 : 1;
}

int run_axioms(const AxiomsConfig& cfg) {
  modmet::Rng rng(cfg.seed);
  if (cfg.modular == "gvphi" || cfg.modular == "gvphi-exp") {
    const modmet::PhiFunction phi =
        cfg.modular == "gvphi-exp" ? modmet::PhiFunction::exp_minus_one()
                                   : phi_by_name(cfg.phi);
    std::vector<modmet::ACFunction> pts;
    pts.reserve(cfg.points);
    for (std::size_t i = 0; i < cfg.points; ++i) {
      std::vector<double> deriv(cfg.grid);
      for (double& d : deriv) d = rng.uniform(-2.0, 2.0);
      pts.push_back(modmet::ACFunction(0.0, 1.0, 0.0, std::move(deriv)));
    }
    const auto m = modmet::make_gv_modular(
        phi, modmet::ACFunction::constant(0.0, 1.0, 0.0, cfg.grid));
    const auto rep = modmet::check_axioms<modmet::ACFunction>(
        m, pts, cfg.lambdas, resolve_mode(cfg.mode, m.flags()));
    return emit_axiom_report(rep, cfg);
  }

  modmet::CanonicalKind kind;
  if (cfg.modular == "velocity") {
    kind = modmet::CanonicalKind::Velocity;
  } else if (cfg.modular == "constant") {
    kind = modmet::CanonicalKind::Constant;
  } else if (cfg.modular == "threshold") {
    kind = modmet::CanonicalKind::Threshold;
  } else {
    std::cerr << "unknown modular: " << cfg.modular << "\n";
    return 2;
  }
  const auto pts = modmet::random_points3(rng, cfg.points, -1.0, 1.0);
  const auto m = modmet::canonical_modular<modmet::Point3>(
      modmet::euclidean, kind, modmet::Point3{0.0, 0.0, 0.0});
  const auto rep = modmet::check_axioms<modmet::Point3>(
      m, pts, cfg.lambdas, resolve_mode(cfg.mode, m.flags()));
  return emit_axiom_report(rep, cfg);
}

// ---------------------------------------------------------------------------
// examples

struct ExamplesConfig {
  std::vector<double> alphas = {0.25, 0.5, 1.0};
  std::vector<double> ratios = {0.75, 1.0, 1.5, 2.0, 4.0};
  std::vector<double> betas = {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};
  std::vector<double> lambdas = {0.5, 1.0, 2.0};
  std::size_t grid = 4096;
  double tol = 2e-2;
  std::string out = "-";
  std::string format = "json";
};

int run_examples(const ExamplesConfig& cfg) {
  const auto phi = modmet::PhiFunction::exp_minus_one();
  const auto zero = modmet::ACFunction::constant(0.0, 1.0, 0.0, cfg.grid);
  const auto w_alpha = modmet::make_gv_modular(phi, zero);
  bool all_ok = true;

  json alpha_rows = json::array();
  json dw_rows = json::array();
  for (double a : cfg.alphas) {
    const auto x = modmet::example_x_alpha(a, cfg.grid);
    for (double r : cfg.ratios) {
      const double l = r * a;
      const modmet::ExtReal num = modmet::gv_integral(phi, l, x, zero);
      const modmet::ExtReal closed = modmet::closed_w_alpha(a, l);
      bool ok;
      double err = 0.0;
      if (closed.is_infinite()) {
        ok = num.is_infinite();
      } else if (num.is_infinite()) {
        ok = false;
      } else {
        err = std::abs(num.value() - closed.value());
        ok = err <= cfg.tol * closed.value();
      }
      all_ok = all_ok && ok;
      alpha_rows.push_back(json{{"alpha", a},
                                {"lambda", l},
                                {"numeric", modmet::ext_real_json(num)},
                                {"closed", modmet::ext_real_json(closed)},
                                {"abs_err", err},
                                {"ok", ok}});
    }
    const double ds = modmet::metric_dw_star(w_alpha, x, zero);
    const double err = std::abs(ds - 2.0 * a);
    const bool ok = err <= 1e-3;
    all_ok = all_ok && ok;
    dw_rows.push_back(json{{"alpha", a},
                           {"dw_star", ds},
                           {"law", 2.0 * a},
                           {"abs_err", err},
                           {"ok", ok}});
  }

  const auto limit = modmet::example_x_beta(0.0, cfg.grid);
  const auto w_beta = modmet::make_gv_modular(phi, limit);
  json beta_rows = json::array();
  json beta_dw_rows = json::array();
  json beta_monotone = json::array();
  std::vector<double> betas = cfg.betas;
  std::sort(betas.rbegin(), betas.rend());
  std::vector<std::vector<double>> finite_cols(cfg.lambdas.size());
  for (double b : betas) {
    const auto xb = modmet::example_x_beta(b, cfg.grid);
    for (std::size_t li = 0; li < cfg.lambdas.size(); ++li) {
      const double l = cfg.lambdas[li];
      const modmet::ExtReal num = modmet::gv_integral(phi, l, xb, limit);
      bool ok;
      json bound_field;
      if (l <= 1.0) {
        ok = num.is_infinite();
        bound_field = "inf";
      } else {
        const auto bb = modmet::closed_w_beta_bound(b, l);
        const double bound = bb.ii1 + bb.ii2 - 1.0;
        bound_field = bound;
        ok = num.is_finite() && num.value() <= bound * (1.0 + cfg.tol);
        if (num.is_finite()) finite_cols[li].push_back(num.value());
      }
      all_ok = all_ok && ok;
      beta_rows.push_back(json{{"beta", b},
                               {"lambda", l},
                               {"numeric", modmet::ext_real_json(num)},
                               {"bound", bound_field},
                               {"ok", ok}});
    }
    const double ds = modmet::metric_dw_star(w_beta, xb, limit);
    const bool ok = ds >= 1.0 - 1e-3;
    all_ok = all_ok && ok;
    beta_dw_rows.push_back(
        json{{"beta", b}, {"dw_star", ds}, {"stays_above_one", ok}});
  }
  for (std::size_t li = 0; li < cfg.lambdas.size(); ++li) {
    if (cfg.lambdas[li] <= 1.0) continue;
    bool dec = finite_cols[li].size() == betas.size();
    for (std::size_t i = 0; i + 1 < finite_cols[li].size(); ++i) {
      dec = dec && finite_cols[li][i + 1] < finite_cols[li][i] + 1e-12;
    }
    all_ok = all_ok && dec;
    beta_monotone.push_back(
        json{{"lambda", cfg.lambdas[li]}, {"decreasing_in_beta", dec}});
  }

  json conv_rows = json::array();
  const double ca = cfg.alphas.front();
  const double cl = 2.0 * ca;
  for (std::size_t n = 512; n <= cfg.grid; n *= 2) {
    const auto x = modmet::example_x_alpha(ca, n);
    const auto z = modmet::ACFunction::constant(0.0, 1.0, 0.0, n);
    const modmet::ExtReal num = modmet::gv_integral(phi, cl, x, z);
    const modmet::ExtReal closed = modmet::closed_w_alpha(ca, cl);
    conv_rows.push_back(
        json{{"n", n},
             {"numeric", modmet::ext_real_json(num)},
             {"abs_err", num.is_finite() && closed.is_finite()
                             ? std::abs(num.value() - closed.value())
                             : 0.0}});
  }

  std::string body;
  if (cfg.format == "json") {
    body = dump(json{{"schema", 1},
                     {"grid", cfg.grid},
                     {"alpha_table", alpha_rows},
                     {"alpha_dw_star", dw_rows},
                     {"beta_table", beta_rows},
                     {"beta_dw_star", beta_dw_rows},
                     {"beta_monotone", beta_monotone},
                     {"convergence", conv_rows},
                     {"all_pass", all_ok}});
  } else {
    std::string s = "# alpha_table grid=" + std::to_string(cfg.grid) + "\n";
    s += "alpha,lambda,numeric,closed,abs_err,ok\n";
    for (const auto& r : alpha_rows) {
      s += fmt(r["alpha"].get<double>()) + "," +
           fmt(r["lambda"].get<double>()) + "," +
           (r["numeric"].is_string() ? "inf"
                                     : fmt(r["numeric"].get<double>())) +
           "," +
           (r["closed"].is_string() ? "inf" : fmt(r["closed"].get<double>())) +
           "," + fmt(r["abs_err"].get<double>()) + "," +
           (r["ok"].get<bool>() ? "1" : "0") + "\n";
    }
    s += "# alpha_dw_star\nalpha,dw_star,law,abs_err,ok\n";
    for (const auto& r : dw_rows) {
      s += fmt(r["alpha"].get<double>()) + "," +
           fmt(r["dw_star"].get<double>()) + "," +
           fmt(r["law"].get<double>()) + "," +
           fmt(r["abs_err"].get<double>()) + "," +
           (r["ok"].get<bool>() ? "1" : "0") + "\n";
    }
    s += "# beta_table grid=" + std::to_string(cfg.grid) + "\n";
    s += "beta,lambda,numeric,bound,ok\n";
    for (const auto& r : beta_rows) {
      s += fmt(r["beta"].get<double>()) + "," +
           fmt(r["lambda"].get<double>()) + "," +
           (r["numeric"].is_string() ? "inf"
                                     : fmt(r["numeric"].get<double>())) +
           "," +
           (r["bound"].is_string() ? "inf" : fmt(r["bound"].get<double>())) +
           "," + (r["ok"].get<bool>() ? "1" : "0") + "\n";
    }
    s += "# beta_dw_star\nbeta,dw_star,stays_above_one\n";
    for (const auto& r : beta_dw_rows) {
      s += fmt(r["beta"].get<double>()) + "," +
           fmt(r["dw_star"].get<double>()) + "," +
           (r["stays_above_one"].get<bool>() ? "1" : "0") + "\n";
    }
    s += "# beta_monotone\nlambda,decreasing_in_beta\n";
    for (const auto& r : beta_monotone) {
      s += fmt(r["lambda"].get<double>()) + "," +
           (r["decreasing_in_beta"].get<bool>() ? "1" : "0") + "\n";
    }
    s += "# convergence alpha=" + fmt(ca) + " lambda=" + fmt(cl) + "\n";
    s += "n,numeric,abs_err\n";
    for (const auto& r : conv_rows) {
      s += std::to_string(r["n"].get<std::size_t>()) + "," +
           (r["numeric"].is_string() ? "inf"
                                     : fmt(r["numeric"].get<double>())) +
           "," + fmt(r["abs_err"].get<double>()) + "\n";
    }
    s += "# all_pass " + std::string(all_ok ? "1" : "0") + "\n";
    body = s;
  }
  if (!write_out(cfg.out, body)) {
    std::cerr << "cannot write " << cfg.out << "\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sequences

struct SequencesConfig {
  std::string family = "alpha";
  double start = 0.5;
  std::size_t count = 6;
  std::vector<double> lambdas = {0.5, 1.0, 2.0, 4.0};
  double eps = 1e-3;
  std::size_t tail = 3;
  double lambda0 = 2.0;
  std::size_t grid = 1024;
  std::string out = "-";
  std::string format = "json";
};

int run_sequences(const SequencesConfig& cfg) {
  const auto phi = modmet::PhiFunction::exp_minus_one();
  const modmet::ACFunction target =
      cfg.family == "alpha"
          ? modmet::ACFunction::constant(0.0, 1.0, 0.0, cfg.grid)
          : modmet::example_x_beta(0.0, cfg.grid);
  std::vector<modmet::ACFunction> seq;
  seq.reserve(cfg.count);
  double param = cfg.start;
  for (std::size_t i = 0; i < cfg.count; ++i, param *= 0.5) {
    seq.push_back(cfg.family == "alpha"
                      ? modmet::example_x_alpha(param, cfg.grid)
                      : modmet::example_x_beta(param, cfg.grid));
  }
  const auto w = modmet::make_gv_modular(phi, target);

  const auto cmp = modmet::metric_vs_modular_convergence<modmet::ACFunction>(
      w, seq, target, cfg.lambdas, cfg.eps, cfg.tail);
  const auto probe = modmet::delta2_probe<modmet::ACFunction>(
      w, seq, target, cfg.lambda0, cfg.eps, cfg.tail);

  bool rows_monotone = true;
  for (const auto& row : cmp.profile.rows) {
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
      rows_monotone =
          rows_monotone && modmet::le_with_slack(row[j + 1], row[j], 1e-12);
    }
  }

  json cols = json::array();
  for (std::size_t c = 0; c < cmp.profile.lambdas.size(); ++c) {
    cols.push_back(json{
        {"lambda", cmp.profile.lambdas[c]},
        {"tends_to_zero",
         cmp.profile.column_tends_to_zero(c, cfg.eps, cfg.tail)}});
  }
  const json verdicts{{"metric_converges", cmp.metric_converges},
                      {"modular_converges", cmp.modular_converges},
                      {"all_lambda_converges", cmp.all_lambda_converges},
                      {"dw_star_tail", cmp.dw_star_tail},
                      {"columns", cols},
                      {"halving_premise", probe.premise_holds},
                      {"halving_conclusion", probe.conclusion_holds},
                      {"rows_lambda_monotone", rows_monotone}};

  std::string body;
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < cmp.profile.rows.size(); ++i) {
      json vals = json::array();
      for (const auto& v : cmp.profile.rows[i]) {
        vals.push_back(modmet::ext_real_json(v));
      }
      rows.push_back(json{{"n", i}, {"w", vals}});
    }
    body = dump(json{{"schema", 1},
                     {"family", cfg.family},
                     {"start", cfg.start},
                     {"lambdas", cmp.profile.lambdas},
                     {"profile", rows},
                     {"verdicts", verdicts}});
  } else {
    body = cmp.profile.to_csv();
    body += "# verdicts\n";
    body += "metric_converges," +
            std::string(cmp.metric_converges ? "1" : "0") + "\n";
    body += "modular_converges," +
            std::string(cmp.modular_converges ? "1" : "0") + "\n";
    body += "all_lambda_converges," +
            std::string(cmp.all_lambda_converges ? "1" : "0") + "\n";
    body += "halving_premise," +
            std::string(probe.premise_holds ? "1" : "0") + "\n";
    body += "halving_conclusion," +
            std::string(probe.conclusion_holds ? "1" : "0") + "\n";
    body += "rows_lambda_monotone," + std::string(rows_monotone ? "1" : "0") +
            "\n";
  }
  if (!write_out(cfg.out, body)) {
    std::cerr << "cannot write " << cfg.out << "\n";
    return 2;
  }
  return rows_monotone ? 0 : 1;
}

// ---------------------------------------------------------------------------
// ode

struct OdeConfig {
  std::string problem;
  double t_end = 1.0;
  std::size_t grid = 2048;
  double safety = 0.5;
  double tol = 1e-6;
  std::string out = "-";
  std::string format = "json";
};

int run_ode(const OdeConfig& cfg) {
  const auto problem = modmet::make_registry_problem(cfg.problem, cfg.t_end);
  modmet::SegmentedSolution sol;
  try {
    sol = modmet::solve_ivp(problem, cfg.tol, cfg.grid, cfg.safety);
  } catch (const modmet::SegmentSolveError& e) {
    std::cerr << "solve failed: " << e.what() << "\n";
    return 1;
  }

  const auto exact = modmet::registry_exact_solution(cfg.problem);
  const auto ts = sol.times();
  const auto xs = sol.values();
  double max_err = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    max_err = std::max(max_err, std::abs(xs[i] - exact(ts[i])));
  }

  std::string body;
  if (cfg.format == "csv") {
    body = modmet::solution_to_csv(sol);
  } else {
    json segments = json::array();
    for (const auto& seg : sol.segments) {
      segments.push_back(
          json{{"a", seg.a},
               {"b", seg.b},
               {"k", seg.k},
               {"trace", modmet::trace_summary_json(
                             modmet::summarize(seg.trace))}});
    }
    body = dump(json{{"schema", 1},
                     {"problem", cfg.problem},
                     {"t_end", cfg.t_end},
                     {"grid", cfg.grid},
                     {"safety", cfg.safety},
                     {"tol", cfg.tol},
                     {"verdict", "converged"},
                     {"max_residual", sol.max_residual},
                     {"max_error_vs_exact", max_err},
                     {"knots", sol.knots},
                     {"segments", segments},
                     {"solution", json{{"t", ts}, {"x", xs}}}});
  }
  if (!write_out(cfg.out, body)) {
    std::cerr << "cannot write " << cfg.out << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular metric toolkit"};
  app.require_subcommand(1);

  AxiomsConfig ax;
  auto* cmd_ax = app.add_subcommand("axioms", "audit modular axioms");
  cmd_ax->add_option("--modular", ax.modular, "modular family")
      ->check(CLI::IsMember(
          {"velocity", "constant", "threshold", "gvphi", "gvphi-exp"}));
  cmd_ax->add_option("--mode", ax.mode, "axiom set to audit")
      ->check(CLI::IsMember(
          {"auto", "pseudomodular", "modular", "strict", "convex"}));
  cmd_ax->add_option("--points", ax.points, "sample size")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  cmd_ax->add_option("--lambdas", ax.lambdas, "ascending lambda grid")
      ->delimiter(',');
  cmd_ax->add_option("--seed", ax.seed, "sampling seed");
  cmd_ax->add_option("--phi", ax.phi, "variation gauge for gvphi")
      ->check(CLI::IsMember({"exp", "linear", "power2"}));
  cmd_ax->add_option("--grid", ax.grid, "cells per grid function")
      ->check(CLI::Validator(pow2_check, "POW2"));
  cmd_ax->add_option("--out", ax.out, "output path, - for stdout");
  cmd_ax->add_option("--format", ax.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  ExamplesConfig ex;
  auto* cmd_ex =
      app.add_subcommand("examples", "reproduce the worked variation tables");
  cmd_ex->add_option("--alpha", ex.alphas, "alpha values")->delimiter(',');
  cmd_ex->add_option("--ratio", ex.ratios, "lambda/alpha ratios")
      ->delimiter(',');
  cmd_ex->add_option("--beta", ex.betas, "beta values")->delimiter(',');
  cmd_ex->add_option("--lambda", ex.lambdas, "lambda grid for the beta table")
      ->delimiter(',');
  cmd_ex->add_option("--grid", ex.grid, "cells per grid function")
      ->check(CLI::Validator(pow2_check, "POW2"));
  cmd_ex->add_option("--tol", ex.tol, "relative tolerance for table checks")
      ->check(CLI::PositiveNumber);
  cmd_ex->add_option("--out", ex.out, "output path, - for stdout");
  cmd_ex->add_option("--format", ex.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  SequencesConfig sq;
  auto* cmd_sq =
      app.add_subcommand("sequences", "convergence diagnostics for the "
                                      "worked families");
  cmd_sq->add_option("--family", sq.family, "parameter family")
      ->check(CLI::IsMember({"alpha", "beta"}));
  cmd_sq->add_option("--start", sq.start, "first parameter value, halved "
                                          "at every step")
      ->check(CLI::PositiveNumber);
  cmd_sq->add_option("--count", sq.count, "sequence length")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  cmd_sq->add_option("--lambdas", sq.lambdas, "ascending lambda grid")
      ->delimiter(',');
  cmd_sq->add_option("--eps", sq.eps, "convergence threshold")
      ->check(CLI::PositiveNumber);
  cmd_sq->add_option("--tail", sq.tail, "trailing members examined");
  cmd_sq->add_option("--lambda0", sq.lambda0,
                     "parameter for the halving probe")
      ->check(CLI::PositiveNumber);
  cmd_sq->add_option("--grid", sq.grid, "cells per grid function")
      ->check(CLI::Validator(pow2_check, "POW2"));
  cmd_sq->add_option("--out", sq.out, "output path, - for stdout");
  cmd_sq->add_option("--format", sq.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  OdeConfig od;
  auto* cmd_od =
      app.add_subcommand("ode", "solve a registry initial-value problem");
  cmd_od->add_option("--problem", od.problem, "registry problem name")
      ->required()
      ->check(CLI::IsMember(modmet::registry_names()));
  cmd_od->add_option("--T", od.t_end, "right endpoint of the time interval")
      ->check(CLI::PositiveNumber);
  cmd_od->add_option("--grid", od.grid, "cells per segment")
      ->check(CLI::Validator(pow2_check, "POW2"));
  cmd_od->add_option("--safety", od.safety,
                     "per-segment contraction budget in (0, 1)");
  cmd_od->add_option("--tol", od.tol, "iteration stopping tolerance")
      ->check(CLI::PositiveNumber);
  cmd_od->add_option("--out", od.out, "output path, - for stdout");
  cmd_od->add_option("--format", od.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_ax) {
      if (!ascending_check(ax.lambdas).empty()) {
        std::cerr << "--lambdas: " << ascending_check(ax.lambdas) << "\n";
        return 2;
      }
      return run_axioms(ax);
    }
    if (*cmd_ex) return run_examples(ex);
    if (*cmd_sq) {
      if (!ascending_check(sq.lambdas).empty()) {
        std::cerr << "--lambdas: " << ascending_check(sq.lambdas) << "\n";
        return 2;
      }
      return run_sequences(sq);
    }
    if (*cmd_od) return run_ode(od);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

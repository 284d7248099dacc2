// Copyright 2026 The grouprelax Authors.
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
#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grouprelax/errors.hpp"
#include "grouprelax/generators.hpp"
#include "grouprelax/mps.hpp"
#include "grouprelax/pipeline.hpp"
#include "grouprelax/report.hpp"
#include "grouprelax/short_path.hpp"

namespace fs = std::filesystem;
using namespace grouprelax;
using nlohmann::json;

namespace {

std::uint64_t default_seed() {
  if (const char* s = std::getenv("GROUPRELAX_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      fail(ErrorKind::kInvalidArgument, "GROUPRELAX_SEED is not an integer");
    }
  }
  return 0;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

json rational_json(const Rational& q) { return json{{"exact", q.get_str()}, {"approx", q.get_d()}}; }

json conditions_json(const SpeedupConditions& c) {
  return json{{"degenerate", c.degenerate}, {"log2_ratio", c.log_ratio}, {"cyclic_norm_max", c.cyclic_norm_max},
              {"max_order_sq", c.max_order_sq}, {"r1", c.r1}, {"r2", c.r2},
              {"size_ratio_in_band", c.size_ratio_in_band}, {"gap_ratio_in_band", c.gap_ratio_in_band}};
}

json report_json(const std::string& name, const SPReport& r, double eta) {
  json curve = json::array();
  for (const auto& p : r.overlap_curve) curve.push_back(json{{"mu", p.mu}, {"lambda1", p.lambda1}, {"overlap", p.overlap}});
  json j{{"instance", name},
         {"eta", eta},
         {"k_order", r.k_order},
         {"k_star", r.k_star},
         {"g_order", r.g_order.get_str()},
         {"opt_b", rational_json(r.opt_b)},
         {"f_max", rational_json(r.f_max)},
         {"shift_c", rational_json(r.C)},
         {"e_star", rational_json(r.E_star)},
         {"pi_star", r.pi_star},
         {"sublevel_mass", r.sublevel_mass},
         {"cyclic_norm_max", r.cyclic_norm_max},
         {"delta_p_bound", rational_json(r.delta_p_bound)},
         {"pseudo_lipschitz", rational_json(r.pseudo_lipschitz)},
         {"omega_hat", r.omega_hat},
         {"delta", r.delta},
         {"gamma_ls", r.gamma_ls},
         {"gamma_ls_theta", r.gamma_ls_theta},
         {"gamma_gap", r.gamma_gap},
         {"gamma_gap_theta", r.gamma_gap_theta},
         {"mu_star_ls", r.mu_star_ls},
         {"mu_star_gap", r.mu_star_gap},
         {"mu", r.mu},
         {"alpha_raw", r.alpha_raw},
         {"alpha_hat", r.alpha_hat},
         {"conditions", conditions_json(r.conditions)},
         {"expander_size", r.expander_size},
         {"expander_generates", r.expander_generates},
         {"expander_delta", r.expander_delta},
         {"expander_condition", conditions_json(r.expander_conditions)},
         {"overlap_curve", curve},
         {"overlap_monotonicity_violations", r.overlap_monotonicity_violations},
         {"degenerate", r.degenerate}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::vector<fs::path> mps_files(const std::string& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) fail(ErrorKind::kInvalidArgument, "'" + dir + "' is not a directory");
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::string ext = e.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (ext == ".mps") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SearchFlags {
  std::string method = "mcs";
  std::uint64_t seed = 0;
  std::uint64_t max_samples = 1000;
  std::uint64_t mix_steps = 0;
  double beta = 1.0;
  unsigned chains = 1;
  double expander_c = 8.0;
  bool compress = false;

  void attach(CLI::App* app) {
    app->add_option("--method", method, "mcs, mcs-expander, mcs-metropolis, dijkstra or brute");
    app->add_option("--seed", seed, "random seed (default: GROUPRELAX_SEED or 0)");
    app->add_option("--max-samples", max_samples, "Markov chain search samples");
    app->add_option("--mix-steps", mix_steps, "walk steps per sample (0: automatic)");
    app->add_option("--beta", beta, "Metropolis inverse temperature");
    app->add_option("--chains", chains, "independent chains");
    app->add_option("--expander-c", expander_c, "expander generator constant");
    app->add_flag("--compress", compress, "compress the kernel domain");
  }

  PipelineConfig config() const {
    PipelineConfig cfg;
    cfg.search.method = parse_method(method);
    cfg.search.seed = seed;
    cfg.search.max_samples = max_samples;
    if (mix_steps) cfg.search.mix_steps = mix_steps;
    cfg.search.beta = beta;
    cfg.search.chains = std::max(1u, chains);
    cfg.search.expander_c = expander_c;
    cfg.compress = compress;
    return cfg;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Group relaxation bounds for pure integer programs"};
  app.require_subcommand(1);
  const std::uint64_t env_seed = default_seed();

  std::string file;
  SearchFlags sflags;
  sflags.seed = env_seed;
  std::string known_path;
  auto* solve = app.add_subcommand("solve", "solve the group relaxation and report the bound chain");
  solve->add_option("file", file, "MPS file")->required();
  sflags.attach(solve);
  solve->add_option("--known-optima", known_path, "CSV of instance,opt_ilp");

  auto* relax = app.add_subcommand("relax", "LP and group bounds only");
  relax->add_option("file", file, "MPS file")->required();

  bool kcompress = false;
  auto* kernel = app.add_subcommand("kernel", "print the kernel of the group relaxation");
  kernel->add_option("file", file, "MPS file")->required();
  kernel->add_flag("--compress", kcompress, "compress the kernel domain");

  SPConfig spc;
  spc.seed = env_seed;
  bool dcompress = false;
  auto* diag = app.add_subcommand("diagnose", "short-path diagnostics as one JSON line");
  diag->add_option("file", file, "MPS file")->required();
  diag->add_option("--eta", spc.eta, "eta in (0,1)");
  diag->add_option("--dense-limit", spc.dense_limit, "largest dense state space");
  diag->add_option("--expander-c", spc.expander_c, "expander generator constant");
  diag->add_option("--mu-sweep", spc.mu_sweep, "points in the overlap sweep");
  diag->add_option("--seed", spc.seed, "random seed");
  diag->add_option("--band-lo", spc.band.lo, "lower edge of the ratio band");
  diag->add_option("--band-hi", spc.band.hi, "upper edge of the ratio band");
  diag->add_flag("--compress", dcompress, "compress the kernel domain");

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  CutStockSpec cs;
  cs.seed = env_seed;
  std::string out_path;
  auto* gcut = gen->add_subcommand("cutgen", "cutting stock instance");
  gcut->add_option("--m", cs.m, "item types");
  gcut->add_option("--v1", cs.v1, "lower width fraction");
  gcut->add_option("--v2", cs.v2, "upper width fraction");
  gcut->add_option("--L", cs.L, "stock length");
  gcut->add_option("--dbar", cs.dbar, "mean demand");
  gcut->add_option("--seed", cs.seed, "random seed");
  gcut->add_option("--pattern-cap", cs.pattern_cap, "maximal pattern cap");
  gcut->add_option("--out", out_path, "output MPS file (default stdout)");
  std::int64_t pt = 2, pell = 1;
  std::size_t pm = 2;
  std::uint64_t pseed = env_seed;
  std::string pstyle = "identity";
  auto* gplant = gen->add_subcommand("planted", "planted instance with known group structure");
  gplant->add_option("--t", pt, "t >= 2");
  gplant->add_option("--m", pm, "rows");
  gplant->add_option("--ell", pell, "1 <= ell < t");
  gplant->add_option("--seed", pseed, "random seed");
  gplant->add_option("--style", pstyle, "identity or random-lower-unit");
  gplant->add_option("--out", out_path, "output MPS file (default stdout)");

  std::string dir, supplied_path, hist_path, rknown_path;
  unsigned workers = 1;
  bool timing = false;
  SearchFlags rflags;
  rflags.seed = env_seed;
  auto* report = app.add_subcommand("report", "run every MPS file in a directory");
  report->add_option("dir", dir, "directory of MPS files")->required();
  report->add_option("--out", out_path, "CSV output (default stdout)");
  report->add_option("--workers", workers, "concurrent instances");
  report->add_option("--supplied", supplied_path, "CSV of instance,opt_lp,opt_b,opt_ilp rows to append");
  report->add_option("--known-optima", rknown_path, "CSV of instance,opt_ilp");
  report->add_option("--histogram", hist_path, "histogram output");
  report->add_flag("--timing", timing, "record wall time");
  rflags.attach(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (solve->parsed()) {
    PipelineConfig cfg = sflags.config();
    if (!known_path.empty()) cfg.known_optima = parse_known_optima(read_text_file(known_path));
    ILPInstance inst = read_mps_file(file);
    PipelineResult res = run_pipeline_full(inst, cfg);
    std::cout << kCsvHeader << "\n" << csv_line(res.row) << "\n";
    std::cout << "opt_ilp_source " << opt_source_name(res.row.opt_source) << "\n";
    std::cout << "group_x " << join(res.search.best.original_x(inst.num_vars())) << "\n";
    std::cout << "group_x_ilp_feasible " << (res.search.best.ilp_feasible ? "true" : "false") << "\n";
    if (res.ilp) {
      std::cout << "ilp_x " << join(res.ilp->x) << "\n";
    }
    return 0;
  }
  if (relax->parsed()) {
    ILPInstance inst = read_mps_file(file);
    StandardFormILP sf = to_standard_form(inst);
    BasisSolution bs = solve_lp_exact(sf);
    GroupRelaxationData grd = build_group_relaxation(sf, bs);
    FeasibleCoset fc = build_feasible_coset(grd, false);
    SearchResult sr = gomory_shortest_path(grd);
    std::cout << "opt_lp " << format_rational(bs.opt_lp + sf.obj_offset) << "\n";
    std::cout << "opt_b " << format_rational(sr.best.objective) << "\n";
    std::cout << "r_abs " << format_rational(sr.best.objective - bs.opt_lp - sf.obj_offset) << "\n";
    std::cout << "degenerate_lp " << (bs.degenerate_primal ? "true" : "false") << "\n";
    std::cout << "k_order " << fc.basis.kernel_order.get_str() << "\n";
    std::cout << "g_order " << fc.basis.range_order.get_str() << "\n";
    return 0;
  }
  if (kernel->parsed()) {
    ILPInstance inst = read_mps_file(file);
    StandardFormILP sf = to_standard_form(inst);
    BasisSolution bs = solve_lp_exact(sf);
    GroupRelaxationData grd = build_group_relaxation(sf, bs);
    FeasibleCoset fc = build_feasible_coset(grd, kcompress);
    std::cout << "moduli " << join(fc.basis.moduli) << "\n";
    std::cout << "x_hat " << join(fc.x_hat) << "\n";
    for (std::size_t j = 0; j < fc.basis.rank(); ++j)
      std::cout << "generator " << join(fc.basis.generators[j]) << " order " << fc.basis.orders[j].get_str() << "\n";
    std::cout << "k_order " << fc.basis.kernel_order.get_str() << "\n";
    std::cout << "g_order " << fc.basis.range_order.get_str() << "\n";
    return 0;
  }
  if (diag->parsed()) {
    ILPInstance inst = read_mps_file(file);
    StandardFormILP sf = to_standard_form(inst);
    BasisSolution bs = solve_lp_exact(sf);
    GroupRelaxationData grd = build_group_relaxation(sf, bs);
    FeasibleCoset fc = build_feasible_coset(grd, dcompress);
    SPReport rep = diagnose(grd, fc, spc);
    std::cout << report_json(inst.name, rep, spc.eta).dump() << "\n";
    return 0;
  }
  if (gcut->parsed()) {
    write_output(out_path, emit_mps(cutgen(cs)));
    return 0;
  }
  if (gplant->parsed()) {
    write_output(out_path, emit_mps(planted(pt, pm, pell, pseed, parse_style(pstyle)).ilp));
    return 0;
  }
  if (report->parsed()) {
    PipelineConfig cfg = rflags.config();
    cfg.timing = timing;
    if (!rknown_path.empty()) cfg.known_optima = parse_known_optima(read_text_file(rknown_path));
    std::vector<fs::path> files = mps_files(dir);
    std::vector<std::optional<ReportRow>> rows(files.size());
    std::vector<std::string> errors(files.size());
    std::vector<int> codes(files.size(), 0);
    const auto n = static_cast<std::int64_t>(files.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1u, workers))
    for (std::int64_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        rows[k] = run_pipeline(read_mps_file(files[k].string()), cfg);
      } catch (const Error& e) {
        errors[k] = e.what();
        codes[k] = exit_code_for(e.kind());
      } catch (const std::exception& e) {
        errors[k] = e.what();
        codes[k] = 1;
      }
    }
    std::vector<ReportRow> done;
    int code = 0;
    for (std::size_t k = 0; k < files.size(); ++k) {
      if (rows[k]) done.push_back(*rows[k]);
      if (!errors[k].empty()) {
        std::cerr << "grouprelax: " << files[k].filename().string() << ": " << errors[k] << "\n";
        if (!code) code = codes[k];
      }
    }
    if (!supplied_path.empty())
      for (const auto& t : parse_supplied(read_text_file(supplied_path)))
        done.push_back(supplied_row(t.instance, t.opt_lp, t.opt_b, t.opt_ilp));
    ReportText text = emit_report(done);
    write_output(out_path, text.csv);
    if (!hist_path.empty()) write_output(hist_path, text.histogram);
    return code;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "grouprelax: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "grouprelax: " << e.what() << "\n";
    return 1;
  }
}

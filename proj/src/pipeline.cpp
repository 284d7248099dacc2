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
#include "grouprelax/pipeline.hpp"

#include <chrono>

#include "grouprelax/errors.hpp"

namespace grouprelax {

const char* opt_source_name(OptSource s) {
  switch (s) {
    case OptSource::kNone: return "none";
    case OptSource::kBruteForce: return "brute";
    case OptSource::kBranchAndBound: return "bnb";
    case OptSource::kSupplied: return "supplied";
  }
  return "none";
}

namespace {

// Every point outside {0..M}^n costs at least (M+1) min c when c > 0.
bool box_certifies(const ILPInstance& inst, std::int64_t M, const IlpOptimum& opt) {
  if (inst.c.empty()) return true;
  Rational cmin = inst.c[0];
  for (const Rational& v : inst.c) cmin = v < cmin ? v : cmin;
  if (cmin <= 0) return false;
  return opt.value - inst.obj_offset < Rational(M + 1) * cmin;
}

bool box_fits(const ILPInstance& inst, std::int64_t M, const BigInt& cap) {
  BigInt size = 1;
  for (std::size_t j = 0; j < inst.num_vars(); ++j) {
    size *= M + 1;
    if (size > cap) return false;
  }
  return true;
}

}  // namespace

std::optional<IlpOptimum> exact_ilp(const ILPInstance& inst, const PipelineConfig& cfg, OptSource* source) {
  *source = OptSource::kNone;
  bool positive = !inst.c.empty();
  for (const Rational& v : inst.c) positive = positive && v > 0;
  if (positive && box_fits(inst, cfg.brute_box, cfg.ilp_cap)) {
    try {
      IlpOptimum opt = brute_force_ilp(inst, cfg.brute_box, cfg.ilp_cap);
      if (box_certifies(inst, cfg.brute_box, opt)) {
        *source = OptSource::kBruteForce;
        return opt;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasible) throw;
    }
  }
  std::optional<IlpOptimum> bnb = branch_and_bound_ilp(inst, cfg.bnb_nodes);
  if (bnb) *source = OptSource::kBranchAndBound;
  return bnb;
}

PipelineResult run_pipeline_full(const ILPInstance& inst, const PipelineConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  try {
    PipelineResult out;
    out.sf = to_standard_form(inst);
    out.bs = solve_lp_exact(out.sf);
    out.grd = build_group_relaxation(out.sf, out.bs);
    out.fc = build_feasible_coset(out.grd, cfg.compress);
    out.search = solve_group(out.grd, out.fc, cfg.search);

    const Rational opt_lp = out.bs.opt_lp + out.sf.obj_offset;
    const Rational opt_b = out.search.best.objective;
    std::optional<Rational> opt_ilp;
    OptSource src = OptSource::kNone;
    out.ilp = exact_ilp(inst, cfg, &src);
    if (out.ilp) {
      opt_ilp = out.ilp->value;
    } else if (auto it = cfg.known_optima.find(inst.name); it != cfg.known_optima.end()) {
      opt_ilp = it->second;
      src = OptSource::kSupplied;
    }
    // A heuristic group value is only an upper estimate of OPT_B, so the
    // chain check needs a certified optimum.
    ReportRow& row = out.row;
    row.instance = inst.name;
    row.certified = out.search.certified_optimal;
    if (row.certified || !opt_ilp) {
      row.chain = bound_chain(opt_lp, opt_b, opt_ilp);
    } else {
      row.chain = bound_chain(opt_lp, opt_b, std::nullopt);
      row.chain.opt_ilp = opt_ilp;
      row.chain.delta_lp_ilp = *opt_ilp - opt_lp;
      row.chain.delta_b = *opt_ilp - opt_b;
      if (*row.chain.delta_lp_ilp != 0) row.chain.r_pct = Rational(100) * row.chain.r_abs / *row.chain.delta_lp_ilp;
    }
    row.opt_source = src;
    row.degenerate_lp = out.bs.degenerate_primal;
    row.k_order = out.fc.basis.kernel_order;
    row.g_order = out.fc.basis.range_order;
    row.method = method_name(cfg.search.method);
    row.seed = cfg.search.seed;
    if (cfg.timing) {
      row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    return out;
  } catch (const Error& e) {
    throw Error(e.kind(), inst.name + ": " + e.what());
  }
}

ReportRow run_pipeline(const ILPInstance& inst, const PipelineConfig& cfg) { return run_pipeline_full(inst, cfg).row; }

ReportRow supplied_row(const std::string& name, const Rational& opt_lp, const Rational& opt_b,
                       const std::optional<Rational>& opt_ilp) {
  ReportRow row;
  row.instance = name;
  row.chain = bound_chain(opt_lp, opt_b, opt_ilp);
  row.opt_source = opt_ilp ? OptSource::kSupplied : OptSource::kNone;
  row.method = "supplied";
  return row;
}

}  // namespace grouprelax

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
// Acceptance checks; prints one PASS/FAIL line per criterion.

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "grouprelax/errors.hpp"
#include "grouprelax/exact_algebra.hpp"
#include "grouprelax/generators.hpp"
#include "grouprelax/pipeline.hpp"
#include "grouprelax/report.hpp"
#include "grouprelax/search.hpp"
#include "grouprelax/short_path.hpp"
#include "grouprelax/walks.hpp"
#include "test_support.hpp"

#ifndef GROUPRELAX_FIXTURES_DIR
#define GROUPRELAX_FIXTURES_DIR "fixtures"
#endif

using namespace grouprelax;
using namespace grouprelax::testing;

namespace {

// Tolerances and limits.
constexpr double kTableTolerance = 0.05;
constexpr double kOverlapTolerance = 1e-10;
constexpr double kMonotoneTolerance = 1e-9;
constexpr double kStationaryTolerance = 1e-10;
constexpr double kExpanderGap = 0.1;
constexpr int kExpanderTrials = 100;
constexpr int kExpanderRequired = 90;
constexpr double kPlantedSeconds = 30.0;
constexpr double kChainSeconds = 120.0;
constexpr double kExpanderSeconds = 60.0;
constexpr double kSweepSeconds = 10.0;
constexpr std::uint64_t kRandomInstances = 200;
constexpr long kBox = 10;
constexpr long kAmbientLimit = 100000;
constexpr std::uint64_t kWalkSteps = 100000;
constexpr std::uint64_t kTvLimit = 1024;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// The shared random family: m <= 3, n <= 6, |A_ij| <= 5, feasible by construction.
const std::vector<Built>& random_family() {
  static const std::vector<Built> family = [] {
    std::vector<Built> out;
    for (std::uint64_t seed = 0; seed < kRandomInstances; ++seed) out.push_back(build(random_instance(random_spec(seed))));
    return out;
  }();
  return family;
}

BigInt power(long base, std::size_t e) {
  BigInt p = 1;
  for (std::size_t i = 0; i < e; ++i) p *= base;
  return p;
}

Outcome ac1_planted_exactness() {
  Timer timer;
  Outcome out;
  int cases = 0;
  for (long t : {2L, 3L}) {
    for (std::size_t m = 1; m <= 6; ++m) {
      Built b = build(planted(t, m, 1, 0).ilp);
      const Rational expect(static_cast<long>(m));
      const BigInt tm = power(t, m);
      bool ok = b.fc.basis.kernel_order == tm && b.fc.basis.range_order == tm;
      ok = ok && gomory_shortest_path(b.grd).best.objective == expect;
      ok = ok && brute_force_group(b.grd, b.fc, BigInt(1000000)).best.objective == expect;
      SearchConfig cfg;
      cfg.method = SearchMethod::kMcs;
      cfg.seed = 1;
      const double k = tm.get_d();
      cfg.max_samples = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(32.0 * k * std::log(k))));
      ok = ok && markov_chain_search(b.grd, b.fc, cfg).best.objective == expect;
      if (!ok) {
        out.pass = false;
        out.detail += " mismatch t=" + std::to_string(t) + " m=" + std::to_string(m);
      }
      ++cases;
    }
  }
  const double s = timer.seconds();
  if (s >= kPlantedSeconds) out.pass = false;
  out.detail = std::to_string(cases) + " cases, " + fmt("%.1fs", s) + out.detail;
  return out;
}

Outcome ac2_bound_chain() {
  Timer timer;
  Outcome out;
  int violations = 0;
  for (std::uint64_t seed = 0; seed < kRandomInstances; ++seed) {
    const Built& b = random_family()[seed];
    const Rational opt_lp = b.bs.opt_lp + b.sf.obj_offset;
    const Rational opt_b = gomory_shortest_path(b.grd).best.objective;
    const Rational opt = brute_force_ilp(b.inst, kBox, BigInt(100000000)).value;
    if (!(opt_lp <= opt_b && opt_b <= opt)) ++violations;
  }
  const double s = timer.seconds();
  out.pass = violations == 0 && s < kChainSeconds;
  out.detail = std::to_string(kRandomInstances) + " instances, " + std::to_string(violations) + " violations, " +
               fmt("%.1fs", s);
  return out;
}

std::set<Point> generator_span(const KernelBasis& kb) {
  FeasibleCoset zero;
  zero.basis = kb;
  zero.x_hat.assign(kb.dimension(), 0);
  auto pts = oracle_span(zero);
  return std::set<Point>(pts.begin(), pts.end());
}

Outcome ac3_kernel_oracle() {
  Outcome out;
  int checked = 0, mismatches = 0;
  for (const Built& b : random_family()) {
    const KernelBasis& kb = b.fc.basis;
    if (ambient_size(kb.moduli) > kAmbientLimit) continue;
    ++checked;
    std::set<Point> span = generator_span(kb);
    BigInt prod = 1;
    for (const auto& u : kb.orders) prod *= u;
    if (span != oracle_kernel_set(b.grd, kb.moduli) || prod != static_cast<long>(span.size())) ++mismatches;
  }
  out.pass = mismatches == 0 && checked > 0;
  out.detail = std::to_string(checked) + " instances, " + std::to_string(mismatches) + " mismatches";
  return out;
}

Outcome ac4_compression() {
  Outcome out;
  int checked = 0, mismatches = 0;
  for (const Built& b : random_family()) {
    if (ambient_size(b.fc.basis.moduli) > kAmbientLimit) continue;
    ++checked;
    Built c = build(b.inst, true);
    auto minimum = [](const Built& x) {
      std::optional<Rational> best;
      for (const auto& p : oracle_span(x.fc)) {
        Rational v = cost_of(x.grd, p);
        if (!best || v < *best) best = v;
      }
      return best;
    };
    const KernelBasis& ck = c.fc.basis;
    if (minimum(b) != minimum(c) || ck.kernel_order * ck.range_order != ambient_size(ck.moduli) ||
        ck.range_order != b.fc.basis.range_order)
      ++mismatches;
  }
  out.pass = mismatches == 0 && checked > 0;
  out.detail = std::to_string(checked) + " instances, " + std::to_string(mismatches) + " mismatches";
  return out;
}

Outcome ac5_snf() {
  Outcome out;
  Rng rng(2026);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = 1 + rng.uniform(8), cols = 1 + rng.uniform(8);
    IntMatrix M = random_matrix(rng, rows, cols, -9, 9);
    SNFResult s = snf(M);
    bool ok = s.U * s.diagonal_matrix() * s.V == M;
    ok = ok && abs(oracle_det(s.U)) == 1 && abs(oracle_det(s.V)) == 1;
    const std::vector<BigInt>& f = s.D;
    for (std::size_t i = 1; i < f.size(); ++i)
      ok = ok && (f[i - 1] == 0 ? f[i] == 0 : f[i] % f[i - 1] == 0);
    for (const auto& v : f) ok = ok && v >= 0;
    if (rows == cols) {
      Rational det = oracle_det(M);
      if (det != 0) {
        BigInt prod = 1;
        for (const auto& v : f) prod *= v;
        ok = ok && prod == abs(det.get_num());
      }
    }
    if (!ok) ++failures;
  }
  out.pass = failures == 0;
  out.detail = "500 matrices, " + std::to_string(failures) + " failures";
  return out;
}

Outcome ac6_table() {
  struct Printed {
    const char* name;
    double delta_lp_ilp, delta_b, r_abs;
    const char* r_pct;
  };
  const Printed printed[] = {{"qap10", 7.43, 4.00, 3.43, "46.2"},
                             {"gen02", 56.81, 33.59, 23.22, "40.9"},
                             {"ex10", 0.00, 0.00, 0.00, "NA"},
                             {"supp19", 346.00, 346.00, 0.00, "0.0"}};
  Outcome out;
  std::vector<SuppliedTriple> triples =
      parse_supplied(read_text_file(std::string(GROUPRELAX_FIXTURES_DIR) + "/reference_rows.csv"));
  std::vector<ReportRow> rows;
  for (const auto& t : triples) rows.push_back(supplied_row(t.instance, t.opt_lp, t.opt_b, t.opt_ilp));
  std::istringstream csv(emit_report(rows).csv);
  std::string line;
  std::getline(csv, line);
  int matched = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    for (const Printed& p : printed) {
      if (f.empty() || f[0] != p.name) continue;
      bool ok = f.size() >= 8;
      ok = ok && std::fabs(std::stod(f[4]) - p.delta_lp_ilp) <= kTableTolerance;
      ok = ok && std::fabs(std::stod(f[5]) - p.delta_b) <= kTableTolerance;
      ok = ok && std::fabs(std::stod(f[6]) - p.r_abs) <= kTableTolerance;
      if (std::string(p.r_pct) == "NA") {
        ok = ok && f[7] == "NA";
      } else {
        ok = ok && f[7] != "NA" && std::fabs(std::stod(f[7]) - std::stod(p.r_pct)) <= kTableTolerance;
      }
      if (ok) ++matched;
      else out.detail += std::string(" mismatch ") + p.name;
    }
  }
  out.pass = matched == 4;
  out.detail = std::to_string(matched) + "/4 rows match" + out.detail;
  return out;
}

Outcome ac7_walk_laws() {
  Outcome out;
  int escapes = 0, bad_matrices = 0, tv_failures = 0, walks = 0;
  std::vector<Built> cases;
  cases.push_back(build(planted(3, 4, 1, 0).ilp));
  cases.push_back(build(planted(2, 5, 1, 2, UnimodularStyle::kRandomLowerUnit).ilp));
  for (std::size_t i = 0; i < 4; ++i) cases.push_back(random_family()[i * 7 + 1]);
  for (const Built& b : cases) {
    CompactCoset cc = CompactCoset::from(b.fc);
    Rng rng(b.inst.name.size());
    for (const CayleyWalkSpec& walk : {CayleyWalkSpec::product_of_cycles(cc), expander_generation(cc, 8.0, rng)}) {
      std::vector<std::int64_t> s = cc.x_hat;
      for (std::uint64_t i = 0; i < kWalkSteps; ++i) {
        step(s, walk, rng);
        if (!satisfies_group_constraint(b.grd, std::vector<BigInt>(s.begin(), s.end()))) {
          ++escapes;
          break;
        }
      }
    }
  }
  std::vector<Built> dense(cases.begin(), cases.begin() + 2);
  for (const Built& b : random_family()) dense.push_back(b);
  for (const Built& b : dense) {
    CompactCoset cc = CompactCoset::from(b.fc);
    if (cc.size < 2 || cc.size > kTvLimit) continue;
    ++walks;
    CayleyWalkSpec walk = CayleyWalkSpec::product_of_cycles(cc);
    TransitionMatrix tm = transition_matrix(walk, cc);
    if (!tm.is_symmetric() || !tm.is_doubly_stochastic()) ++bad_matrices;
    const double delta = spectral_gap(tm.dense());
    const auto t = static_cast<std::size_t>(std::ceil(std::log(2.0 * static_cast<double>(cc.size)) / delta));
    const double bound = 2.0 * std::pow(1.0 - delta, static_cast<double>(t));
    for (std::size_t start : {std::size_t{0}, static_cast<std::size_t>(cc.size - 1)})
      if (tv_from_uniform(tm.evolve(start, t)) > bound) ++tv_failures;
  }
  out.pass = escapes == 0 && bad_matrices == 0 && tv_failures == 0;
  out.detail = std::to_string(cases.size() * 2) + " walks x 1e5 steps, " + std::to_string(escapes) + " escapes; " +
               std::to_string(walks) + " dense walks, " + std::to_string(bad_matrices) + " bad matrices, " +
               std::to_string(tv_failures) + " TV failures";
  return out;
}

Outcome ac8_expander() {
  Timer timer;
  Outcome out;
  FeasibleCoset fc;
  fc.x_hat.assign(10, 0);
  fc.basis.moduli.assign(10, 2);
  fc.basis.orders.assign(10, 2);
  for (std::size_t i = 0; i < 10; ++i) {
    std::vector<BigInt> e(10, 0);
    e[i] = 1;
    fc.basis.generators.push_back(e);
  }
  fc.basis.kernel_order = 1024;
  fc.basis.range_order = 1;
  CompactCoset cc = CompactCoset::from(fc);
  int good = 0, route_mismatch = 0;
  for (int seed = 0; seed < kExpanderTrials; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    CayleyWalkSpec ex = expander_generation(cc, 8.0, rng);
    const double dense = spectral_gap(transition_matrix(ex, cc).dense());
    if (std::fabs(dense - spectral_gap_characters(ex, cc)) > 1e-9) ++route_mismatch;
    if (generates_kernel(ex, cc) && dense >= kExpanderGap) ++good;
  }
  const double s = timer.seconds();
  out.pass = good >= kExpanderRequired && route_mismatch == 0 && s < kExpanderSeconds;
  out.detail = std::to_string(good) + "/" + std::to_string(kExpanderTrials) + " trials, " +
               std::to_string(route_mismatch) + " route mismatches, " + fmt("%.1fs", s);
  return out;
}

Outcome ac9_pseudo_lipschitz() {
  Outcome out;
  int checked = 0, violations = 0;
  std::vector<Built> dense;
  for (std::size_t m = 1; m <= 6; ++m) dense.push_back(build(planted(3, m, 1, 0).ilp));
  for (const Built& b : random_family()) dense.push_back(b);
  for (const Built& b : dense) {
    CompactCoset cc = CompactCoset::from(b.fc);
    if (cc.size > kDefaultDenseLimit) continue;
    ++checked;
    CayleyWalkSpec walk = CayleyWalkSpec::product_of_cycles(cc);
    PseudoLipschitz pl = pseudo_lipschitz(LinearCost::from(b.grd), walk, cc);
    Rational bound = 0;
    for (const auto& h : walk.generators) {
      Rational v = cyclic_metric(h, b.grd.cbold, cc.moduli);
      if (v > bound) bound = v;
    }
    if (!pl.exact || *pl.exact > bound * bound || std::sqrt(pl.exact->get_d()) > bound.get_d() * (1 + 1e-15))
      ++violations;
  }
  out.pass = violations == 0 && checked > 0;
  out.detail = std::to_string(checked) + " dense instances, " + std::to_string(violations) + " violations";
  return out;
}

Outcome ac10_sp_sanity() {
  Timer timer;
  Outcome out;
  Built b = build(planted(2, 3, 1, 0).ilp);
  SPConfig cfg;
  cfg.mu_sweep = 4;
  SPReport rep = diagnose(b.grd, b.fc, cfg);
  const auto& c = rep.overlap_curve;
  bool ok = rep.k_order == 8 && c.size() == 4;
  ok = ok && std::fabs(c[0].overlap - static_cast<double>(rep.k_star) / static_cast<double>(rep.k_order)) <= kOverlapTolerance;
  for (std::size_t i = 1; i < c.size(); ++i) {
    ok = ok && c[i].overlap >= c[i - 1].overlap - kMonotoneTolerance;
    ok = ok && c[i].lambda1 <= c[i - 1].lambda1 + kMonotoneTolerance;
    ok = ok && std::fabs(c[i].mu - rep.mu_star_ls * static_cast<double>(i) / 4.0) <= 1e-15;
  }
  const double s = timer.seconds();
  out.pass = ok && s < kSweepSeconds;
  std::string curve;
  for (const auto& p : c) curve += fmt(" %.6f", p.overlap);
  out.detail = "overlaps" + curve + ", " + fmt("%.2fs", s);
  return out;
}

Outcome ac11_conditions() {
  Outcome out;
  bool ok = true;
  double r1_lo = 1e9, r1_hi = 0, r2_lo = 1e9, r2_hi = 0;
  for (std::size_t m = 2; m <= 8; ++m) {
    Built b = build(planted(2, m, 1, 0).ilp);
    CompactCoset cc = CompactCoset::from(b.fc);
    SearchResult brute = brute_force_group(b.grd, b.fc, BigInt(1000000));
    ShiftedCost sc = shifted_cost(LinearCost::from(b.grd), cc);
    CayleyWalkSpec walk = CayleyWalkSpec::product_of_cycles(cc);
    SpeedupConditions c = speedup_conditions(walk.generators, cc.orders, cc.moduli, b.grd.cbold, sc.E_star,
                                             b.fc.basis.kernel_order, BigInt(static_cast<long>(brute.argmin.size())));
    ok = ok && brute.argmin.size() == 1 && c.size_ratio_in_band && c.gap_ratio_in_band;
    r1_lo = std::min(r1_lo, c.r1);
    r1_hi = std::max(r1_hi, c.r1);
    r2_lo = std::min(r2_lo, c.r2);
    r2_hi = std::max(r2_hi, c.r2);
  }
  // One generator touching every coordinate of planted t=2, m=8.
  Built b = build(planted(2, 8, 1, 0).ilp);
  CompactCoset cc = CompactCoset::from(b.fc);
  ShiftedCost sc = shifted_cost(LinearCost::from(b.grd), cc);
  std::vector<std::vector<std::int64_t>> dense{std::vector<std::int64_t>(8, 2)};
  SpeedupConditions d = speedup_conditions(dense, {2}, cc.moduli, b.grd.cbold, sc.E_star, b.fc.basis.kernel_order, 1);
  ok = ok && !d.size_ratio_in_band;
  out.pass = ok;
  out.detail = fmt("planted R1 in [%.4f, ", r1_lo) + fmt("%.4f], ", r1_hi) + fmt("R2 in [%.4f, ", r2_lo) +
               fmt("%.4f]; dense R1 = ", r2_hi) + fmt("%.4f", d.r1);
  return out;
}

Outcome ac12_metropolis() {
  Outcome out;
  Built b = build(planted(2, 2, 1, 0).ilp);
  CompactCoset cc = CompactCoset::from(b.fc);
  LinearCost f = LinearCost::from(b.grd);
  const double beta = 2.0;
  Eigen::MatrixXd M = metropolis_matrix(CayleyWalkSpec::product_of_cycles(cc), cc, f, beta);
  Eigen::VectorXd pi = stationary_vector(M);
  Eigen::VectorXd target(M.rows());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    target(i) = std::exp(-beta * f.approx(f.raw(cc.point(static_cast<std::uint64_t>(i)))));
  target /= target.sum();
  const double l1 = (pi - target).lpNorm<1>();
  out.pass = l1 < kStationaryTolerance;
  out.detail = fmt("L1 error %.3e", l1);
  return out;
}

Outcome ac13_cutgen() {
  Outcome out;
  CutStockSpec spec;
  spec.m = 4;
  spec.L = 10;
  spec.seed = 0;
  PipelineConfig cfg;
  cfg.search.method = SearchMethod::kDijkstra;
  cfg.search.seed = 7;
  auto csv = [&] { return emit_report({run_pipeline(cutgen(spec), cfg)}).csv; };
  ReportRow row = run_pipeline(cutgen(spec), cfg);
  const auto& ch = row.chain;
  bool ok = row.certified && ch.opt_ilp && ch.opt_lp <= ch.opt_b && ch.opt_b <= *ch.opt_ilp;
  ok = ok && ch.delta_lp_ilp && (ch.r_pct || *ch.delta_lp_ilp == 0);
  const std::string first = csv(), second = csv();
  ok = ok && first == second;
  out.pass = ok;
  out.detail = row.instance + ", R% " + format_r_pct(ch) + (first == second ? ", CSV reproducible" : ", CSV differs");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"planted-family exactness", ac1_planted_exactness},
      {"bound chain", ac2_bound_chain},
      {"kernel oracle equivalence", ac3_kernel_oracle},
      {"compression preserves optima", ac4_compression},
      {"Smith normal form contract", ac5_snf},
      {"report arithmetic on reference rows", ac6_table},
      {"walk laws", ac7_walk_laws},
      {"expander gap", ac8_expander},
      {"pseudo-Lipschitz bound", ac9_pseudo_lipschitz},
      {"short-path simulation sanity", ac10_sp_sanity},
      {"speedup condition discrimination", ac11_conditions},
      {"Metropolis stationary law", ac12_metropolis},
      {"CUTGEN end-to-end", ac13_cutgen},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("AC%zu %s %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

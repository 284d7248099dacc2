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
#include <benchmark/benchmark.h>

#include "grouprelax/coset.hpp"
#include "grouprelax/generators.hpp"
#include "grouprelax/group_relaxation.hpp"
#include "grouprelax/kernel.hpp"
#include "grouprelax/lp.hpp"
#include "grouprelax/search.hpp"
#include "grouprelax/short_path.hpp"
#include "grouprelax/walks.hpp"

namespace {

using namespace grouprelax;

struct Prepared {
  GroupRelaxationData grd;
  FeasibleCoset fc;
  CompactCoset cc;
  LinearCost f;
};

Prepared prepare(std::int64_t t, std::size_t m) {
  PlantedInstance p = planted(t, m, 1, 7, UnimodularStyle::kRandomLowerUnit);
  StandardFormILP sf = to_standard_form(p.ilp);
  BasisSolution bs = solve_lp_exact(sf);
  Prepared out{build_group_relaxation(sf, bs), {}, {}, {}};
  out.fc = build_feasible_coset(out.grd, false);
  out.cc = CompactCoset::from(out.fc);
  out.f = LinearCost::from(out.grd);
  return out;
}

const Prepared& big_coset() {
  static const Prepared p = prepare(4, 8);  // |K| = 65536
  return p;
}

const Prepared& dense_coset() {
  static const Prepared p = prepare(2, 12);  // |K| = 4096
  return p;
}

void BM_CosetMinimumSerial(benchmark::State& st) {
  const Prepared& p = big_coset();
  for (auto _ : st) benchmark::DoNotOptimize(coset_minimum_serial(p.cc, p.f));
}
void BM_CosetMinimumParallel(benchmark::State& st) {
  const Prepared& p = big_coset();
  for (auto _ : st) benchmark::DoNotOptimize(coset_minimum_parallel(p.cc, p.f));
}

void BM_TransitionSerial(benchmark::State& st) {
  const Prepared& p = dense_coset();
  CayleyWalkSpec w = CayleyWalkSpec::product_of_cycles(p.cc);
  for (auto _ : st) benchmark::DoNotOptimize(transition_matrix_serial(w, p.cc));
}
void BM_TransitionParallel(benchmark::State& st) {
  const Prepared& p = dense_coset();
  CayleyWalkSpec w = CayleyWalkSpec::product_of_cycles(p.cc);
  for (auto _ : st) benchmark::DoNotOptimize(transition_matrix(w, p.cc));
}

void BM_PseudoLipschitzSerial(benchmark::State& st) {
  const Prepared& p = big_coset();
  CayleyWalkSpec w = CayleyWalkSpec::product_of_cycles(p.cc);
  for (auto _ : st) benchmark::DoNotOptimize(pseudo_lipschitz_exact_serial(p.f, w, p.cc));
}
void BM_PseudoLipschitzParallel(benchmark::State& st) {
  const Prepared& p = big_coset();
  CayleyWalkSpec w = CayleyWalkSpec::product_of_cycles(p.cc);
  for (auto _ : st) benchmark::DoNotOptimize(pseudo_lipschitz_exact_parallel(p.f, w, p.cc));
}

ILPInstance box_instance() {
  RandomInstanceSpec s;
  s.m = 3;
  s.n = 6;
  s.seed = 11;
  return random_instance(s);
}

void BM_BruteForceIlpSerial(benchmark::State& st) {
  ILPInstance inst = box_instance();
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_ilp_serial(inst, 10, BigInt(10000000)));
}
void BM_BruteForceIlpParallel(benchmark::State& st) {
  ILPInstance inst = box_instance();
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_ilp(inst, 10, BigInt(10000000)));
}

struct SweepInput {
  Eigen::MatrixXd P;
  std::vector<double> ft;
  double e_abs;
  std::vector<std::uint64_t> opt;
  std::vector<double> mus;
};

const SweepInput& sweep_input() {
  static const SweepInput in = [] {
    Prepared p = prepare(2, 9);
    SweepInput s;
    ShiftedCost sc = shifted_cost(p.f, p.cc);
    for (const auto& v : sc.values) s.ft.push_back(v.get_d());
    s.e_abs = -sc.E_star.get_d();
    s.opt = sc.optimal;
    s.P = transition_matrix(CayleyWalkSpec::product_of_cycles(p.cc), p.cc).dense();
    for (int i = 0; i < 4; ++i) s.mus.push_back(0.01 * i);
    return s;
  }();
  return in;
}

void BM_OverlapSweepSerial(benchmark::State& st) {
  const SweepInput& s = sweep_input();
  for (auto _ : st) benchmark::DoNotOptimize(overlap_sweep_serial(s.P, s.ft, s.e_abs, 0.5, s.mus, s.opt));
}
void BM_OverlapSweepParallel(benchmark::State& st) {
  const SweepInput& s = sweep_input();
  for (auto _ : st) benchmark::DoNotOptimize(overlap_sweep(s.P, s.ft, s.e_abs, 0.5, s.mus, s.opt));
}

BENCHMARK(BM_CosetMinimumSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CosetMinimumParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitionParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PseudoLipschitzSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PseudoLipschitzParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceIlpSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceIlpParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OverlapSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OverlapSweepParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

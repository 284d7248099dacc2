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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/coset.hpp"
#include "grouprelax/group_relaxation.hpp"
#include "grouprelax/kernel.hpp"
#include "grouprelax/lp.hpp"

namespace grouprelax {

enum class SearchMethod { kMcs, kMcsExpander, kMcsMetropolis, kDijkstra, kBrute };

SearchMethod parse_method(const std::string& name);
const char* method_name(SearchMethod m);

struct SearchConfig {
  SearchMethod method = SearchMethod::kMcs;
  std::uint64_t seed = 0;
  std::uint64_t max_samples = 1000;
  std::optional<std::uint64_t> mix_steps;
  double beta = 1.0;
  double epsilon = 0.01;
  BigInt cap = 10000000;
  double expander_c = 8.0;
  unsigned chains = 1;
  // Chains stop early once the best objective is at most this value.
  std::optional<Rational> stop_at;
};

struct TracePoint {
  std::uint64_t iteration;
  Rational objective;
};

struct SearchResult {
  GroupSolution best;
  std::uint64_t samples_used = 0;
  std::uint64_t mix_steps = 0;
  bool certified_optimal = false;
  std::vector<TracePoint> trace;
  std::uint64_t visited = 0;
  // Coefficient indices of all minimizers (brute force only).
  std::vector<std::uint64_t> argmin;
};

// ceil(k u_max^2 ln(|K|/eps)) for the product-of-cycles walk.
std::uint64_t default_mix_steps(const CompactCoset& cc, double epsilon);
// ceil(ln(|K|/eps) / 0.1) for expander walks, whose gap is a constant.
std::uint64_t expander_mix_steps(const CompactCoset& cc, double epsilon);
// ceil(2 (|K|/|K*|) ln(1/eps)).
std::uint64_t samples_for_confidence(const BigInt& k_order, const BigInt& k_star, double epsilon);

SearchResult markov_chain_search(const GroupRelaxationData& grd, const FeasibleCoset& fc, const SearchConfig& cfg);

SearchResult gomory_shortest_path(const GroupRelaxationData& grd);

SearchResult brute_force_group(const GroupRelaxationData& grd, const FeasibleCoset& fc, const BigInt& cap);

// Dispatches on cfg.method.
SearchResult solve_group(const GroupRelaxationData& grd, const FeasibleCoset& fc, const SearchConfig& cfg);

struct IlpOptimum {
  Rational value;  // includes obj_offset
  std::vector<BigInt> x;
};

// Exhaustive search over the box {0..M}^n. Throws CapExceeded or Infeasible.
IlpOptimum brute_force_ilp(const ILPInstance& inst, std::int64_t M, const BigInt& cap);
IlpOptimum brute_force_ilp_serial(const ILPInstance& inst, std::int64_t M, const BigInt& cap);

// Exact LP-based branch and bound; empty when the node limit is reached.
// Throws Infeasible or Unbounded.
std::optional<IlpOptimum> branch_and_bound_ilp(const ILPInstance& inst, std::uint64_t node_limit);

}  // namespace grouprelax

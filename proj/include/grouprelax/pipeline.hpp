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
#include <map>
#include <optional>
#include <string>

#include "grouprelax/bigint.hpp"
#include "grouprelax/group_relaxation.hpp"
#include "grouprelax/kernel.hpp"
#include "grouprelax/lp.hpp"
#include "grouprelax/search.hpp"

namespace grouprelax {

enum class OptSource { kNone, kBruteForce, kBranchAndBound, kSupplied };

const char* opt_source_name(OptSource s);

struct ReportRow {
  std::string instance;
  BoundChain chain;
  OptSource opt_source = OptSource::kNone;
  bool certified = false;
  bool degenerate_lp = false;
  std::optional<BigInt> k_order;
  std::optional<BigInt> g_order;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::int64_t wall_ms = 0;
};

struct PipelineConfig {
  SearchConfig search;
  bool compress = false;
  std::int64_t brute_box = 10;
  BigInt ilp_cap = 10000000;
  std::uint64_t bnb_nodes = 20000;
  std::map<std::string, Rational> known_optima;
  bool timing = false;
};

struct PipelineResult {
  ReportRow row;
  StandardFormILP sf;
  BasisSolution bs;
  GroupRelaxationData grd;
  FeasibleCoset fc;
  SearchResult search;
  std::optional<IlpOptimum> ilp;
};

// Errors keep their kind; messages gain the instance name.
PipelineResult run_pipeline_full(const ILPInstance& inst, const PipelineConfig& cfg);
ReportRow run_pipeline(const ILPInstance& inst, const PipelineConfig& cfg);

// Row from externally supplied (OPT_LP, OPT_B, OPT_ILP).
ReportRow supplied_row(const std::string& name, const Rational& opt_lp, const Rational& opt_b,
                       const std::optional<Rational>& opt_ilp);

// Exact ILP optimum: box enumeration when the box provably holds every
// optimum and fits the cap, else branch and bound.
std::optional<IlpOptimum> exact_ilp(const ILPInstance& inst, const PipelineConfig& cfg, OptSource* source);

}  // namespace grouprelax

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
#include <string>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/lp.hpp"

namespace grouprelax {

inline constexpr std::size_t kDefaultPatternCap = 5000;

struct CutStockSpec {
  std::size_t m = 4;
  std::int64_t L = 1000;
  double v1 = 0.01;
  double v2 = 0.5;
  double dbar = 10.0;
  std::uint64_t seed = 0;
  std::size_t pattern_cap = kDefaultPatternCap;
};

// All maximal cutting patterns for the given widths (descending order),
// each as a count vector. Throws PatternLimitExceeded beyond cap.
std::vector<std::vector<std::int64_t>> maximal_patterns(const std::vector<std::int64_t>& widths, std::int64_t L,
                                                        std::size_t cap = kDefaultPatternCap);

// Pattern formulation: min sum x_p s.t. sum_p a_ip x_p >= d_i.
ILPInstance cutting_stock(const std::string& name, const std::vector<std::int64_t>& widths,
                          const std::vector<std::int64_t>& demands, std::int64_t L,
                          std::size_t cap = kDefaultPatternCap);

struct CutStockDraw {
  std::vector<std::int64_t> widths;
  std::vector<std::int64_t> demands;
};

// Seeded widths and demands; throws EmptyWidthBand.
CutStockDraw cutgen_draw(const CutStockSpec& spec);
ILPInstance cutgen(const CutStockSpec& spec);
std::string cutgen_name(const CutStockSpec& spec);

enum class UnimodularStyle { kIdentity, kRandomLowerUnit };

UnimodularStyle parse_style(const std::string& s);

struct PlantedInstance {
  ILPInstance ilp;
  Rational expected_opt_lp = 0;
  Rational expected_opt_b = 0;
  BigInt k_order = 1;
  BigInt g_order = 1;
  BigInt k_star = 1;
  // t e_j in the nonbasic coordinates.
  std::vector<std::vector<BigInt>> kernel_generators;
};

// A = [t^2 U V | t I], b = l t 1, c = (0, 1).
PlantedInstance planted(std::int64_t t, std::size_t m, std::int64_t ell, std::uint64_t seed,
                        UnimodularStyle style = UnimodularStyle::kIdentity);

struct RandomInstanceSpec {
  std::size_t m = 3;
  std::size_t n = 6;
  std::int64_t coeff = 5;
  std::int64_t box = 10;
  std::uint64_t seed = 0;
};

// Feasible bounded instance whose optimal solutions all lie in {0..box}^n:
// costs are positive and c.x0 <= box * min c for a planted feasible x0.
ILPInstance random_instance(const RandomInstanceSpec& spec);

}  // namespace grouprelax

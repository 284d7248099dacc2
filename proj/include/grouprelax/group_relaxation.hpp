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

#include <cstddef>
#include <optional>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/exact_algebra.hpp"
#include "grouprelax/int_matrix.hpp"
#include "grouprelax/lp.hpp"

namespace grouprelax {

// The group problem  min shift + cbold.x  s.t.  Abold x = bbold (mod R Z^m)
// over the nonbasic columns that survive reduction.
struct GroupRelaxationData {
  SNFResult snf_basis;
  IntMatrix A_basis;
  IntMatrix A_nonbasic;
  std::vector<BigInt> rhs;
  IntMatrix Abold;
  std::vector<BigInt> bbold;
  std::vector<Rational> cbold;
  std::vector<BigInt> r;
  BigInt r_max = 1;
  std::vector<std::size_t> basis;
  std::vector<std::size_t> nonbasic;
  // Standard-form column of every Abold column.
  std::vector<std::size_t> kept_cols;
  // Position of every Abold column inside nonbasic.
  std::vector<std::size_t> kept_positions;
  std::vector<std::size_t> dropped_cols;
  Rational shift;
  std::size_t num_columns = 0;
  std::size_t num_original = 0;

  std::size_t m() const { return r.size(); }
  std::size_t d() const { return kept_cols.size(); }
};

struct GroupSolution {
  std::vector<BigInt> x_N_kernelspace;
  Rational objective;
  // Over all standard-form columns.
  std::vector<BigInt> lifted_x;
  bool ilp_feasible = false;

  // Restriction of lifted_x to the original ILP variables.
  std::vector<BigInt> original_x(std::size_t num_original) const;
};

GroupRelaxationData build_group_relaxation(const StandardFormILP& sf, const BasisSolution& bs);

// Group objective shift + cbold.x for a point over the kept columns.
Rational group_objective(const GroupRelaxationData& grd, const std::vector<BigInt>& x_N);

// True iff Abold x = bbold (mod R Z^m).
bool satisfies_group_constraint(const GroupRelaxationData& grd, const std::vector<BigInt>& x_N);

GroupSolution lift_to_ilp(const GroupRelaxationData& grd, const std::vector<BigInt>& x_N);

struct BoundChain {
  Rational opt_lp;
  Rational opt_b;
  std::optional<Rational> opt_ilp;
  std::optional<Rational> delta_lp_ilp;  // OPT - OPT_LP
  std::optional<Rational> delta_b;       // OPT - OPT_B
  Rational r_abs;                        // OPT_B - OPT_LP
  // Percentage of the LP-ILP gap closed; empty when the gap is zero or OPT unknown.
  std::optional<Rational> r_pct;
};

BoundChain bound_chain(const Rational& opt_lp, const Rational& opt_b,
                       const std::optional<Rational>& opt_ilp);

// "46.2" or "NA".
std::string format_r_pct(const BoundChain& chain);

}  // namespace grouprelax

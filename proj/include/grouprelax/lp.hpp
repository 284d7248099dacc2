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
#include <string>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/int_matrix.hpp"

namespace grouprelax {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

// Pure integer program: min c.x + obj_offset  s.t.  A x (sense) b,  x >= 0 integer.
struct ILPInstance {
  std::string name;
  IntMatrix A;
  std::vector<BigInt> b;
  std::vector<Rational> c;
  std::vector<RowSense> senses;
  std::vector<std::string> var_names;
  std::vector<std::string> row_names;
  Rational obj_offset = 0;

  std::size_t num_rows() const { return A.rows(); }
  std::size_t num_vars() const { return A.cols(); }
  // Throws InvalidArgument on inconsistent dimensions.
  void validate() const;
  // Fills default names where missing.
  void ensure_names();
};

struct SlackColumn {
  std::size_t column;
  std::size_t row;      // row index in the standard form
  int coefficient;      // +1 slack, -1 surplus
};

struct StandardFormILP {
  IntMatrix A;
  std::vector<BigInt> b;
  std::vector<Rational> c;
  std::size_t num_original = 0;
  std::vector<SlackColumn> slack_map;
  // Original row index of every standard-form row.
  std::vector<std::size_t> kept_rows;
  Rational obj_offset = 0;

  std::size_t num_rows() const { return A.rows(); }
  std::size_t num_cols() const { return A.cols(); }
};

struct BasisSolution {
  std::vector<std::size_t> basis;     // ascending
  std::vector<std::size_t> nonbasic;  // ascending
  std::vector<Rational> x_lp;         // over all standard-form columns
  std::vector<Rational> reduced_costs;  // over nonbasic, same order
  Rational opt_lp;                    // c.x_lp, without obj_offset
  bool degenerate_primal = false;
};

StandardFormILP to_standard_form(const ILPInstance& inst);

BasisSolution solve_lp_exact(const StandardFormILP& sf);

bool check_asymptotic_sufficiency(const StandardFormILP& sf, const BasisSolution& bs);

// Objective of a standard-form point, without obj_offset.
Rational objective_value(const StandardFormILP& sf, const std::vector<BigInt>& x);

}  // namespace grouprelax

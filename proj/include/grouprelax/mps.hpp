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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/lp.hpp"

namespace grouprelax {

struct MpsRow {
  std::string name;
  char type = 'N';  // N, L, G, E
};

struct MpsColumn {
  std::string name;
  bool integer = false;
  std::optional<Rational> lower;  // empty: -inf
  std::optional<Rational> upper;  // empty: +inf
};

// Parsed model with exact coefficients, before conversion to an ILP.
struct MpsModel {
  std::string name;
  bool maximize = false;
  std::string objective;
  std::vector<MpsRow> rows;        // constraint rows, file order
  std::vector<MpsColumn> columns;  // file order
  // entries[row][col]
  std::map<std::size_t, std::map<std::size_t, Rational>> entries;
  std::map<std::size_t, Rational> objective_coeffs;
  std::map<std::size_t, Rational> rhs;
  std::map<std::size_t, Rational> ranges;
  Rational objective_rhs = 0;
};

// Fixed and free MPS. Throws MalformedMPS with a line number.
MpsModel parse_mps_model(const std::string& text);

// Throws NotPureILP for continuous or unbounded-below columns.
ILPInstance to_ilp(const MpsModel& model);

ILPInstance parse_mps(const std::string& text);
ILPInstance read_mps_file(const std::string& path);

// Free-format writer; parse_mps(emit_mps(x)) reproduces x up to row scaling.
std::string emit_mps(const ILPInstance& inst);

// Collapses runs of whitespace and trims every line.
std::string normalize_whitespace(const std::string& text);

}  // namespace grouprelax

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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouprelax/pipeline.hpp"

namespace grouprelax {

inline constexpr const char* kCsvHeader =
    "instance,opt_lp,opt_b,opt_ilp,delta_lp_ilp,delta_b,r_abs,r_pct,certified,degenerate_lp,k_order,g_order,method,seed,wall_ms";

// Exact decimal when terminating, else 6 significant digits.
std::string format_rational(const Rational& q);

std::string csv_line(const ReportRow& row);

struct Histogram {
  std::array<std::size_t, 10> bins{};  // [0,10), ..., [90,100]
  std::size_t full_closure = 0;        // rows with R% = 100
  std::size_t not_available = 0;
};

Histogram r_pct_histogram(const std::vector<ReportRow>& rows);
std::string format_histogram(const Histogram& h);

struct ReportText {
  std::string csv;
  std::string histogram;
};

// Rows are ordered by instance name. Throws InvalidArgument when empty.
ReportText emit_report(std::vector<ReportRow> rows);

struct SuppliedTriple {
  std::string instance;
  Rational opt_lp;
  Rational opt_b;
  std::optional<Rational> opt_ilp;
};

// "instance,opt_lp,opt_b,opt_ilp" lines; an optional header is skipped.
std::vector<SuppliedTriple> parse_supplied(const std::string& text);
// "instance,opt_ilp" lines.
std::map<std::string, Rational> parse_known_optima(const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace grouprelax

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
#include "grouprelax/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "grouprelax/errors.hpp"

namespace grouprelax {

std::string format_rational(const Rational& q) {
  std::string s = to_exact_string(q);
  if (s.find('/') == std::string::npos) return s;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", q.get_d());
  return buf;
}

namespace {

std::string opt_field(const std::optional<Rational>& q) { return q ? format_rational(*q) : std::string(); }

std::string big_field(const std::optional<BigInt>& v) { return v ? v->get_str() : std::string(); }

}  // namespace

std::string csv_line(const ReportRow& r) {
  std::string s;
  s += r.instance;
  s += ',' + format_rational(r.chain.opt_lp);
  s += ',' + format_rational(r.chain.opt_b);
  s += ',' + opt_field(r.chain.opt_ilp);
  s += ',' + opt_field(r.chain.delta_lp_ilp);
  s += ',' + opt_field(r.chain.delta_b);
  s += ',' + format_rational(r.chain.r_abs);
  s += ',' + (r.chain.opt_ilp ? format_r_pct(r.chain) : std::string());
  s += std::string(",") + (r.certified ? "true" : "false");
  s += std::string(",") + (r.degenerate_lp ? "true" : "false");
  s += ',' + big_field(r.k_order);
  s += ',' + big_field(r.g_order);
  s += ',' + r.method;
  s += ',' + (r.seed ? std::to_string(*r.seed) : std::string());
  s += ',' + std::to_string(r.wall_ms);
  return s;
}

Histogram r_pct_histogram(const std::vector<ReportRow>& rows) {
  Histogram h;
  for (const auto& r : rows) {
    if (!r.chain.r_pct) {
      ++h.not_available;
      continue;
    }
    const Rational& p = *r.chain.r_pct;
    BigInt bin = floor_of(p / 10);
    if (bin < 0) bin = 0;
    if (bin > 9) bin = 9;
    ++h.bins[bin.get_ui()];
    if (p == 100) ++h.full_closure;
  }
  return h;
}

std::string format_histogram(const Histogram& h) {
  std::string s = "bin_start,count\n";
  for (std::size_t i = 0; i < h.bins.size(); ++i) s += std::to_string(10 * i) + "," + std::to_string(h.bins[i]) + "\n";
  s += "100," + std::to_string(h.full_closure) + "\n";
  return s;
}

ReportText emit_report(std::vector<ReportRow> rows) {
  if (rows.empty()) fail(ErrorKind::kInvalidArgument, "no report rows");
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.instance < b.instance; });
  ReportText out;
  out.csv = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) out.csv += csv_line(r) + "\n";
  out.histogram = format_histogram(r_pct_histogram(rows));
  return out;
}

namespace {

std::vector<std::vector<std::string>> csv_records(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string f;
    std::istringstream ls(line);
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (!out.empty() || fields.empty() || fields[0] != "instance") out.push_back(fields);
  }
  return out;
}

Rational field_value(const std::string& s) {
  Rational v;
  if (!parse_decimal(s, &v)) fail(ErrorKind::kMalformedInput, "bad number '" + s + "'");
  return v;
}

}  // namespace

std::vector<SuppliedTriple> parse_supplied(const std::string& text) {
  std::vector<SuppliedTriple> out;
  for (const auto& r : csv_records(text)) {
    if (r.size() != 4) fail(ErrorKind::kMalformedInput, "supplied rows need 4 fields");
    SuppliedTriple t;
    t.instance = r[0];
    t.opt_lp = field_value(r[1]);
    t.opt_b = field_value(r[2]);
    if (!r[3].empty() && r[3] != "NA") t.opt_ilp = field_value(r[3]);
    out.push_back(t);
  }
  return out;
}

std::map<std::string, Rational> parse_known_optima(const std::string& text) {
  std::map<std::string, Rational> out;
  for (const auto& r : csv_records(text)) {
    if (r.size() != 2) fail(ErrorKind::kMalformedInput, "known optima rows need 2 fields");
    out[r[0]] = field_value(r[1]);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kMalformedInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace grouprelax

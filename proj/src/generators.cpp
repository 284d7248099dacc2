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
#include "grouprelax/generators.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "grouprelax/errors.hpp"
#include "grouprelax/rng.hpp"

namespace grouprelax {
namespace {

void pattern_dfs(const std::vector<std::int64_t>& w, std::int64_t wmin, std::size_t i, std::int64_t rem,
                 std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out, std::size_t cap) {
  if (i == w.size()) {
    if (rem < wmin) {
      if (out.size() >= cap)
        fail(ErrorKind::kPatternLimitExceeded, "more than " + std::to_string(cap) + " maximal patterns");
      out.push_back(cur);
    }
    return;
  }
  for (std::int64_t a = rem / w[i]; a >= 0; --a) {
    cur[i] = a;
    pattern_dfs(w, wmin, i + 1, rem - a * w[i], cur, out, cap);
  }
  cur[i] = 0;
}

std::string knob(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

}  // namespace

std::vector<std::vector<std::int64_t>> maximal_patterns(const std::vector<std::int64_t>& widths, std::int64_t L,
                                                        std::size_t cap) {
  if (widths.empty()) fail(ErrorKind::kInvalidArgument, "no item widths");
  for (std::int64_t w : widths)
    if (w < 1 || w > L) fail(ErrorKind::kInvalidArgument, "width outside [1, L]");
  std::int64_t wmin = *std::min_element(widths.begin(), widths.end());
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(widths.size(), 0);
  pattern_dfs(widths, wmin, 0, L, cur, out, cap);
  return out;
}

ILPInstance cutting_stock(const std::string& name, const std::vector<std::int64_t>& widths,
                          const std::vector<std::int64_t>& demands, std::int64_t L, std::size_t cap) {
  if (widths.size() != demands.size()) fail(ErrorKind::kInvalidArgument, "widths and demands differ in length");
  for (std::int64_t d : demands)
    if (d < 1) fail(ErrorKind::kInvalidArgument, "demand below 1");
  auto pats = maximal_patterns(widths, L, cap);
  ILPInstance inst;
  inst.name = name;
  inst.A = IntMatrix(widths.size(), pats.size());
  for (std::size_t p = 0; p < pats.size(); ++p) {
    for (std::size_t i = 0; i < widths.size(); ++i) inst.A(i, p) = BigInt(static_cast<long>(pats[p][i]));
    inst.c.push_back(Rational(1));
    inst.var_names.push_back("p" + std::to_string(p));
  }
  for (std::size_t i = 0; i < widths.size(); ++i) {
    inst.b.push_back(BigInt(static_cast<long>(demands[i])));
    inst.senses.push_back(RowSense::kGreaterEqual);
    inst.row_names.push_back("d" + std::to_string(i));
  }
  inst.validate();
  return inst;
}

std::string cutgen_name(const CutStockSpec& s) {
  return "cutgen_m" + std::to_string(s.m) + "_L" + std::to_string(s.L) + "_v1-" + knob(s.v1) + "_v2-" + knob(s.v2) +
         "_d" + knob(s.dbar) + "_s" + std::to_string(s.seed);
}

CutStockDraw cutgen_draw(const CutStockSpec& s) {
  if (s.m < 1) fail(ErrorKind::kInvalidArgument, "m must be positive");
  if (s.L < 1) fail(ErrorKind::kInvalidArgument, "L must be positive");
  const auto lo = static_cast<std::int64_t>(std::ceil(s.v1 * static_cast<double>(s.L) - 1e-9));
  const auto hi = static_cast<std::int64_t>(std::floor(s.v2 * static_cast<double>(s.L) + 1e-9));
  const std::int64_t wlo = std::max<std::int64_t>(lo, 1);
  const std::int64_t whi = std::min(hi, s.L);
  if (wlo > whi) fail(ErrorKind::kEmptyWidthBand, "width band [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
  const auto total = static_cast<std::int64_t>(std::llround(static_cast<double>(s.m) * s.dbar));
  if (total < static_cast<std::int64_t>(s.m)) fail(ErrorKind::kInvalidArgument, "round(m * dbar) below m");

  Rng rng(s.seed);
  CutStockDraw d;
  for (std::size_t i = 0; i < s.m; ++i) d.widths.push_back(rng.uniform_int(wlo, whi));
  std::sort(d.widths.begin(), d.widths.end(), std::greater<>());
  const std::int64_t rest = total - static_cast<std::int64_t>(s.m);
  std::vector<std::int64_t> cuts;
  for (std::size_t i = 0; i + 1 < s.m; ++i) cuts.push_back(rng.uniform_int(0, rest));
  std::sort(cuts.begin(), cuts.end());
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < s.m; ++i) {
    std::int64_t next = i + 1 < s.m ? cuts[i] : rest;
    d.demands.push_back(1 + next - prev);
    prev = next;
  }
  return d;
}

ILPInstance cutgen(const CutStockSpec& s) {
  CutStockDraw d = cutgen_draw(s);
  return cutting_stock(cutgen_name(s), d.widths, d.demands, s.L, s.pattern_cap);
}

UnimodularStyle parse_style(const std::string& s) {
  if (s == "identity") return UnimodularStyle::kIdentity;
  if (s == "random-lower-unit") return UnimodularStyle::kRandomLowerUnit;
  fail(ErrorKind::kInvalidArgument, "unknown unimodular style '" + s + "'");
}

PlantedInstance planted(std::int64_t t, std::size_t m, std::int64_t ell, std::uint64_t seed, UnimodularStyle style) {
  if (t < 2 || m < 1 || ell < 1 || ell >= t) fail(ErrorKind::kInvalidArgument, "planted needs t >= 2, m >= 1, 1 <= l < t");
  Rng rng(seed);
  auto lower_unit = [&]() {
    IntMatrix M = IntMatrix::identity(m);
    if (style == UnimodularStyle::kRandomLowerUnit)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (rng.uniform(2)) M(i, j) = -1;
    return M;
  };
  IntMatrix U = lower_unit();
  IntMatrix V = lower_unit();
  IntMatrix UV = U * V;
  const BigInt tb(static_cast<long>(t));

  PlantedInstance out;
  ILPInstance& inst = out.ilp;
  inst.name = "planted_t" + std::to_string(t) + "_m" + std::to_string(m) + "_l" + std::to_string(ell) + "_s" +
              std::to_string(seed) + (style == UnimodularStyle::kIdentity ? "_id" : "_rlu");
  inst.A = IntMatrix(m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) inst.A(i, j) = tb * tb * UV(i, j);
    inst.A(i, m + i) = tb;
    inst.b.push_back(BigInt(static_cast<long>(ell)) * tb);
    inst.senses.push_back(RowSense::kEqual);
    inst.row_names.push_back("r" + std::to_string(i));
  }
  for (std::size_t j = 0; j < 2 * m; ++j) {
    inst.c.push_back(Rational(j < m ? 0 : 1));
    inst.var_names.push_back(j < m ? "y" + std::to_string(j) : "z" + std::to_string(j - m));
  }
  inst.validate();
  out.expected_opt_lp = 0;
  out.expected_opt_b = Rational(static_cast<long>(m) * ell);
  BigInt km = 1;
  for (std::size_t i = 0; i < m; ++i) km *= tb;
  out.k_order = km;
  out.g_order = km;
  out.k_star = 1;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<BigInt> h(m, 0);
    h[j] = tb;
    out.kernel_generators.push_back(h);
  }
  return out;
}

ILPInstance random_instance(const RandomInstanceSpec& s) {
  if (s.m < 1 || s.n < 1 || s.coeff < 1 || s.box < 1) fail(ErrorKind::kInvalidArgument, "bad random instance spec");
  Rng rng(s.seed);
  ILPInstance inst;
  inst.name = "rand_m" + std::to_string(s.m) + "_n" + std::to_string(s.n) + "_s" + std::to_string(s.seed);
  inst.A = IntMatrix(s.m, s.n);
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.n; ++j) inst.A(i, j) = BigInt(static_cast<long>(rng.uniform_int(-s.coeff, s.coeff)));
  std::vector<std::int64_t> c(s.n);
  for (auto& v : c) v = rng.uniform_int(5, 9);
  const std::int64_t cmin = *std::min_element(c.begin(), c.end());
  std::vector<std::int64_t> x0(s.n, 0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::int64_t cost = 0;
    for (std::size_t j = 0; j < s.n; ++j) {
      x0[j] = rng.uniform_int(0, 2);
      cost += c[j] * x0[j];
    }
    if (cost <= s.box * cmin) break;
    std::fill(x0.begin(), x0.end(), 0);
  }
  for (std::size_t i = 0; i < s.m; ++i) {
    BigInt ax = 0;
    for (std::size_t j = 0; j < s.n; ++j) ax += inst.A(i, j) * x0[j];
    const auto kind = rng.uniform(3);
    const auto slack = static_cast<long>(rng.uniform_int(0, 2));
    if (kind == 0) {
      inst.senses.push_back(RowSense::kLessEqual);
      inst.b.push_back(ax + slack);
    } else if (kind == 1) {
      inst.senses.push_back(RowSense::kGreaterEqual);
      inst.b.push_back(ax - slack);
    } else {
      inst.senses.push_back(RowSense::kEqual);
      inst.b.push_back(ax);
    }
  }
  for (std::int64_t v : c) inst.c.push_back(Rational(static_cast<long>(v)));
  inst.ensure_names();
  inst.validate();
  return inst;
}

}  // namespace grouprelax

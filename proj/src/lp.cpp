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
#include "grouprelax/lp.hpp"

#include <algorithm>
#include <utility>

#include "grouprelax/errors.hpp"
#include "grouprelax/exact_algebra.hpp"

namespace grouprelax {

void ILPInstance::validate() const {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (b.size() != m || senses.size() != m) {
    fail(ErrorKind::kInvalidArgument, "ILP row data does not match A");
  }
  if (c.size() != n) fail(ErrorKind::kInvalidArgument, "ILP cost vector does not match A");
  if (!var_names.empty() && var_names.size() != n) {
    fail(ErrorKind::kInvalidArgument, "ILP variable names do not match A");
  }
  if (!row_names.empty() && row_names.size() != m) {
    fail(ErrorKind::kInvalidArgument, "ILP row names do not match A");
  }
}

void ILPInstance::ensure_names() {
  if (var_names.size() != A.cols()) {
    var_names.clear();
    for (std::size_t j = 0; j < A.cols(); ++j) var_names.push_back("x" + std::to_string(j + 1));
  }
  if (row_names.size() != A.rows()) {
    row_names.clear();
    for (std::size_t i = 0; i < A.rows(); ++i) row_names.push_back("r" + std::to_string(i + 1));
  }
}

StandardFormILP to_standard_form(const ILPInstance& inst) {
  inst.validate();
  const std::size_t m = inst.num_rows();
  const std::size_t n = inst.num_vars();
  std::size_t slacks = 0;
  for (RowSense s : inst.senses) slacks += s == RowSense::kEqual ? 0 : 1;
  const std::size_t width = n + slacks;

  IntMatrix full(m, width);
  std::vector<int> slack_of_row(m, 0);
  std::vector<std::size_t> slack_col(m, 0);
  std::size_t next = n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) full(i, j) = inst.A(i, j);
    if (inst.senses[i] != RowSense::kEqual) {
      slack_of_row[i] = inst.senses[i] == RowSense::kLessEqual ? 1 : -1;
      slack_col[i] = next;
      full(i, next++) = slack_of_row[i];
    }
  }

  // Exact elimination: keep a row iff it is independent of the rows kept so far.
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(width + 1);
    for (std::size_t j = 0; j < width; ++j) row[j] = full(i, j);
    row[width] = inst.b[i];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const std::size_t p = pivots[e];
      if (row[p] == 0) continue;
      Rational f = row[p];
      for (std::size_t j = 0; j <= width; ++j) {
        if (echelon[e][j] != 0) row[j] -= f * echelon[e][j];
      }
    }
    std::size_t p = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (row[j] != 0) { p = j; break; }
    }
    if (p == width) {
      if (row[width] != 0) fail(ErrorKind::kInfeasible, "inconsistent redundant equality rows");
      continue;
    }
    Rational inv = 1 / row[p];
    for (Rational& v : row) v *= inv;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      if (echelon[e][p] == 0) continue;
      Rational f = echelon[e][p];
      for (std::size_t j = 0; j <= width; ++j) {
        if (row[j] != 0) echelon[e][j] -= f * row[j];
      }
    }
    echelon.push_back(std::move(row));
    pivots.push_back(p);
    kept.push_back(i);
  }

  StandardFormILP sf;
  sf.num_original = n;
  sf.obj_offset = inst.obj_offset;
  sf.kept_rows = kept;
  sf.A = full.select_rows(kept);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    sf.b.push_back(inst.b[i]);
    if (slack_of_row[i] != 0) sf.slack_map.push_back({slack_col[i], k, slack_of_row[i]});
  }
  sf.c.assign(width, Rational(0));
  for (std::size_t j = 0; j < n; ++j) sf.c[j] = inst.c[j];
  return sf;
}

namespace {

class Tableau {
 public:
  Tableau(const StandardFormILP& sf) : m_(sf.num_rows()), n_(sf.num_cols()) {
    const std::size_t w = n_ + m_ + 1;
    t_.assign(m_, std::vector<Rational>(w));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sf.b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        t_[i][j] = flip ? BigInt(-sf.A(i, j)) : sf.A(i, j);
      }
      t_[i][n_ + i] = 1;
      t_[i][w - 1] = flip ? BigInt(-sf.b[i]) : sf.b[i];
      basis_[i] = n_ + i;
    }
  }

  // Phase 1 minimizes the sum of artificials.
  bool phase_one() {
    std::vector<Rational> cost(n_ + m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = 1;
    run(cost, n_ + m_);
    Rational w = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) w += t_[i].back();
    }
    if (w > 0) return false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t j = 0;
      while (j < n_ && t_[i][j] == 0) ++j;
      check_internal(j < n_, "redundant row survived rank repair");
      pivot(i, j);
    }
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& c) { return run(c, n_); }

  const std::vector<std::size_t>& basis() const { return basis_; }
  Rational rhs(std::size_t i) const { return t_[i].back(); }

 private:
  bool run(const std::vector<Rational>& cost, std::size_t allowed) {
    std::vector<Rational> d(allowed);
    for (std::size_t j = 0; j < allowed; ++j) {
      d[j] = cost[j];
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][j] != 0) d[j] -= cost[basis_[i]] * t_[i][j];
      }
    }
    for (;;) {
      std::size_t e = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (d[j] < 0) { e = j; break; }
      }
      if (e == allowed) return true;
      std::size_t r = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][e] <= 0) continue;
        Rational ratio = t_[i].back() / t_[i][e];
        if (r == m_ || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == m_) return false;
      pivot(r, e);
      Rational f = d[e];
      for (std::size_t j = 0; j < allowed; ++j) {
        if (t_[r][j] != 0) d[j] -= f * t_[r][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    Rational inv = 1 / t_[r][e];
    for (Rational& v : t_[r]) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][e] == 0) continue;
      Rational f = t_[i][e];
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = e;
  }

  std::size_t m_, n_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

BasisSolution solve_lp_exact(const StandardFormILP& sf) {
  const std::size_t m = sf.num_rows();
  const std::size_t n = sf.num_cols();
  Tableau tab(sf);
  if (!tab.phase_one()) fail(ErrorKind::kInfeasible, "LP relaxation is infeasible");
  if (!tab.phase_two(sf.c)) fail(ErrorKind::kUnbounded, "LP relaxation is unbounded");

  BasisSolution bs;
  bs.basis = tab.basis();
  std::sort(bs.basis.begin(), bs.basis.end());
  std::vector<bool> in_basis(n, false);
  for (std::size_t j : bs.basis) in_basis[j] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!in_basis[j]) bs.nonbasic.push_back(j);
  }

  // Recompute the solution from the basis matrix itself and assert optimality.
  bs.x_lp.assign(n, Rational(0));
  bs.opt_lp = 0;
  if (m > 0) {
    IntMatrix AB = sf.A.select_columns(bs.basis);
    std::vector<Rational> rhs(sf.b.begin(), sf.b.end());
    std::vector<Rational> xb = solve_rational(AB, rhs);
    std::vector<Rational> cb(m);
    for (std::size_t i = 0; i < m; ++i) {
      check_internal(xb[i] >= 0, "basic solution is not primal feasible");
      bs.x_lp[bs.basis[i]] = xb[i];
      cb[i] = sf.c[bs.basis[i]];
      bs.opt_lp += cb[i] * xb[i];
      if (xb[i] == 0) bs.degenerate_primal = true;
    }
    std::vector<Rational> y = solve_rational_transposed(AB, cb);
    for (std::size_t j : bs.nonbasic) {
      Rational rc = sf.c[j];
      for (std::size_t i = 0; i < m; ++i) {
        if (sf.A(i, j) != 0) rc -= y[i] * sf.A(i, j);
      }
      check_internal(rc >= 0, "negative reduced cost at termination");
      bs.reduced_costs.push_back(rc);
    }
  } else {
    for (std::size_t j : bs.nonbasic) {
      if (sf.c[j] < 0) fail(ErrorKind::kUnbounded, "LP relaxation is unbounded");
      bs.reduced_costs.push_back(sf.c[j]);
    }
  }
  return bs;
}

bool check_asymptotic_sufficiency(const StandardFormILP& sf, const BasisSolution& bs) {
  const std::size_t m = sf.num_rows();
  if (m == 0) return true;
  IntMatrix AB = sf.A.select_columns(bs.basis);
  Rational max_entry = 0;
  for (std::size_t j : bs.nonbasic) {
    std::vector<Rational> col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = sf.A(i, j);
    for (const Rational& v : solve_rational(AB, col)) {
      Rational a = abs(v);
      if (a > max_entry) max_entry = a;
    }
  }
  Rational threshold = max_entry * Rational(abs(determinant(AB)));
  for (std::size_t i = 0; i < m; ++i) {
    if (bs.x_lp[bs.basis[i]] < threshold) return false;
  }
  return true;
}

Rational objective_value(const StandardFormILP& sf, const std::vector<BigInt>& x) {
  check_internal(x.size() == sf.c.size(), "objective_value dimension");
  Rational v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) v += sf.c[j] * x[j];
  }
  return v;
}

}  // namespace grouprelax

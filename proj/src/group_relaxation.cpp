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
#include "grouprelax/group_relaxation.hpp"

#include "grouprelax/errors.hpp"

namespace grouprelax {

std::vector<BigInt> GroupSolution::original_x(std::size_t num_original) const {
  return std::vector<BigInt>(lifted_x.begin(), lifted_x.begin() + static_cast<std::ptrdiff_t>(num_original));
}

GroupRelaxationData build_group_relaxation(const StandardFormILP& sf, const BasisSolution& bs) {
  const std::size_t m = sf.num_rows();
  check_internal(bs.basis.size() == m, "basis size differs from row count");
  GroupRelaxationData g;
  g.basis = bs.basis;
  g.nonbasic = bs.nonbasic;
  g.num_columns = sf.num_cols();
  g.num_original = sf.num_original;
  g.shift = bs.opt_lp + sf.obj_offset;
  g.rhs = sf.b;
  g.A_basis = sf.A.select_columns(bs.basis);
  g.A_nonbasic = sf.A.select_columns(bs.nonbasic);
  if (m == 0) {
    g.dropped_cols = bs.nonbasic;
    return g;
  }
  g.snf_basis = snf(g.A_basis);
  g.r = g.snf_basis.D;
  for (const BigInt& ri : g.r) check_internal(ri >= 1, "singular basis matrix");
  g.r_max = g.r.back();

  IntMatrix UA = g.snf_basis.Uinv * g.A_nonbasic;
  std::vector<std::size_t> keep;
  for (std::size_t p = 0; p < bs.nonbasic.size(); ++p) {
    bool zero = true;
    for (std::size_t i = 0; i < m; ++i) {
      UA(i, p) = mod_floor(UA(i, p), g.r[i]);
      if (UA(i, p) != 0) zero = false;
    }
    if (zero) {
      g.dropped_cols.push_back(bs.nonbasic[p]);
    } else {
      keep.push_back(p);
      g.kept_positions.push_back(p);
      g.kept_cols.push_back(bs.nonbasic[p]);
      g.cbold.push_back(bs.reduced_costs[p]);
    }
  }
  g.Abold = UA.select_columns(keep);
  if (keep.empty()) g.Abold = IntMatrix(m, 0);
  g.bbold = g.snf_basis.Uinv * sf.b;
  for (std::size_t i = 0; i < m; ++i) g.bbold[i] = mod_floor(g.bbold[i], g.r[i]);
  return g;
}

Rational group_objective(const GroupRelaxationData& grd, const std::vector<BigInt>& x_N) {
  check_internal(x_N.size() == grd.d(), "group point dimension");
  Rational v = grd.shift;
  for (std::size_t j = 0; j < x_N.size(); ++j) {
    if (x_N[j] != 0) v += grd.cbold[j] * x_N[j];
  }
  return v;
}

bool satisfies_group_constraint(const GroupRelaxationData& grd, const std::vector<BigInt>& x_N) {
  check_internal(x_N.size() == grd.d(), "group point dimension");
  for (std::size_t i = 0; i < grd.m(); ++i) {
    if (grd.r[i] == 1) continue;
    BigInt s = -grd.bbold[i];
    for (std::size_t j = 0; j < x_N.size(); ++j) s += grd.Abold(i, j) * x_N[j];
    if (!mpz_divisible_p(s.get_mpz_t(), grd.r[i].get_mpz_t())) return false;
  }
  return true;
}

GroupSolution lift_to_ilp(const GroupRelaxationData& grd, const std::vector<BigInt>& x_N) {
  check_internal(x_N.size() == grd.d(), "group point dimension");
  const std::size_t m = grd.m();
  GroupSolution sol;
  sol.x_N_kernelspace = x_N;
  sol.objective = group_objective(grd, x_N);
  sol.lifted_x.assign(grd.num_columns, BigInt(0));
  std::vector<BigInt> full_n(grd.nonbasic.size());
  for (std::size_t k = 0; k < x_N.size(); ++k) {
    full_n[grd.kept_positions[k]] = x_N[k];
    sol.lifted_x[grd.kept_cols[k]] = x_N[k];
  }
  bool feasible = true;
  for (const BigInt& v : x_N) feasible = feasible && v >= 0;
  if (m > 0) {
    std::vector<BigInt> residual = grd.rhs;
    std::vector<BigInt> an = grd.A_nonbasic * full_n;
    for (std::size_t i = 0; i < m; ++i) residual[i] -= an[i];
    std::vector<BigInt> w = grd.snf_basis.Uinv * residual;
    for (std::size_t i = 0; i < m; ++i) {
      check_internal(mpz_divisible_p(w[i].get_mpz_t(), grd.r[i].get_mpz_t()) != 0,
                     "lifted basic variables are not integral");
      mpz_divexact(w[i].get_mpz_t(), w[i].get_mpz_t(), grd.r[i].get_mpz_t());
    }
    std::vector<BigInt> xb = grd.snf_basis.Vinv * w;
    for (std::size_t i = 0; i < m; ++i) {
      sol.lifted_x[grd.basis[i]] = xb[i];
      if (xb[i] < 0) feasible = false;
    }
  }
  sol.ilp_feasible = feasible;
  return sol;
}

BoundChain bound_chain(const Rational& opt_lp, const Rational& opt_b,
                       const std::optional<Rational>& opt_ilp) {
  check_internal(opt_lp <= opt_b, "bound chain violated: OPT_LP > OPT_B");
  BoundChain chain;
  chain.opt_lp = opt_lp;
  chain.opt_b = opt_b;
  chain.opt_ilp = opt_ilp;
  chain.r_abs = opt_b - opt_lp;
  if (opt_ilp) {
    check_internal(opt_b <= *opt_ilp, "bound chain violated: OPT_B > OPT");
    chain.delta_lp_ilp = *opt_ilp - opt_lp;
    chain.delta_b = *opt_ilp - opt_b;
    if (*chain.delta_lp_ilp != 0) chain.r_pct = Rational(100) * chain.r_abs / *chain.delta_lp_ilp;
  }
  return chain;
}

std::string format_r_pct(const BoundChain& chain) {
  return chain.r_pct ? to_fixed(*chain.r_pct, 1) : std::string("NA");
}

}  // namespace grouprelax

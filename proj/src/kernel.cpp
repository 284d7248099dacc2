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
#include "grouprelax/kernel.hpp"

#include <algorithm>

#include "grouprelax/errors.hpp"
#include "grouprelax/exact_algebra.hpp"

namespace grouprelax {

BigInt KernelBasis::max_order() const {
  BigInt u = 1;
  for (const BigInt& o : orders) u = std::max(u, o);
  return u;
}

namespace {

// Rows of diag(r / r_i) * M for the rows with r_i > 1; all congruences are
// then modulo the single modulus r.
struct Preconditioned {
  BigInt r = 1;
  IntMatrix BM;
  std::vector<std::size_t> rows;
  std::vector<BigInt> scale;
};

Preconditioned precondition(const IntMatrix& M, const std::vector<BigInt>& row_moduli) {
  check_internal(row_moduli.size() == M.rows(), "row moduli size mismatch");
  Preconditioned p;
  for (const BigInt& ri : row_moduli) {
    check_internal(ri >= 1, "modulus must be positive");
    p.r = lcm(p.r, ri);
  }
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (row_moduli[i] > 1) {
      p.rows.push_back(i);
      p.scale.push_back(p.r / row_moduli[i]);
    }
  }
  p.BM = IntMatrix(p.rows.size(), M.cols());
  for (std::size_t k = 0; k < p.rows.size(); ++k) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      p.BM(k, j) = mod_floor(p.scale[k] * M(p.rows[k], j), p.r);
    }
  }
  return p;
}

BigInt diag_entry(const SNFResult& s, std::size_t i) {
  return i < s.D.size() ? s.D[i] : BigInt(0);
}

BigInt product(const std::vector<BigInt>& v) {
  BigInt p = 1;
  for (const BigInt& x : v) p *= x;
  return p;
}

BigInt power(const BigInt& base, std::size_t e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

bool satisfies(const IntMatrix& M, const std::vector<BigInt>& x, const std::vector<BigInt>& rhs,
               const std::vector<BigInt>& row_moduli) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (row_moduli[i] == 1) continue;
    BigInt s = -rhs[i];
    for (std::size_t j = 0; j < M.cols(); ++j) s += M(i, j) * x[j];
    if (!mpz_divisible_p(s.get_mpz_t(), row_moduli[i].get_mpz_t())) return false;
  }
  return true;
}

}  // namespace

BigInt element_order(const std::vector<BigInt>& v, const std::vector<BigInt>& moduli) {
  BigInt o = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    o = lcm(o, moduli[i] / gcd(moduli[i], v[i]));
  }
  return o;
}

KernelBasis congruence_kernel(const IntMatrix& M, const std::vector<BigInt>& row_moduli) {
  Preconditioned p = precondition(M, row_moduli);
  const std::size_t d = M.cols();
  KernelBasis kb;
  kb.moduli.assign(d, p.r);
  if (d == 0 || p.r == 1) {
    kb.range_order = 1;
    return kb;
  }
  IntMatrix Vinv = IntMatrix::identity(d);
  SNFResult s;
  if (!p.rows.empty()) {
    s = snf(p.BM);
    Vinv = s.Vinv;
  }
  for (std::size_t i = 0; i < d; ++i) {
    BigInt t = p.rows.empty() ? BigInt(0) : diag_entry(s, i);
    BigInt u = gcd(p.r, t);
    if (u == 1) continue;
    BigInt z = p.r / u;
    std::vector<BigInt> h(d);
    for (std::size_t j = 0; j < d; ++j) h[j] = mod_floor(z * Vinv(j, i), p.r);
    check_internal(element_order(h, kb.moduli) == u, "generator order mismatch");
    kb.generators.push_back(std::move(h));
    kb.orders.push_back(u);
  }
  std::vector<BigInt> zero(M.rows());
  for (const auto& h : kb.generators) {
    check_internal(satisfies(M, h, zero, row_moduli), "generator is not in the kernel");
  }
  kb.kernel_order = product(kb.orders);
  kb.range_order = power(p.r, d) / kb.kernel_order;
  return kb;
}

std::optional<std::vector<BigInt>> congruence_solve(const IntMatrix& M,
                                                    const std::vector<BigInt>& rhs,
                                                    const std::vector<BigInt>& row_moduli) {
  Preconditioned p = precondition(M, row_moduli);
  const std::size_t d = M.cols();
  std::vector<BigInt> x(d);
  if (p.rows.empty()) return x;
  std::vector<BigInt> brhs(p.rows.size());
  for (std::size_t k = 0; k < p.rows.size(); ++k) brhs[k] = p.scale[k] * rhs[p.rows[k]];
  if (d == 0) {
    for (const BigInt& v : brhs) {
      if (mod_floor(v, p.r) != 0) return std::nullopt;
    }
    return x;
  }
  SNFResult s = snf(p.BM);
  std::vector<BigInt> bp = s.Uinv * brhs;
  std::vector<BigInt> y(d);
  for (std::size_t i = 0; i < bp.size(); ++i) {
    BigInt t = diag_entry(s, i);
    std::optional<ModSolution> sol = solve_mod(t, bp[i], p.r);
    if (!sol) return std::nullopt;
    if (i < d) y[i] = sol->particular;
  }
  x = s.Vinv * y;
  for (BigInt& v : x) v = mod_floor(v, p.r);
  check_internal(satisfies(M, x, rhs, row_moduli), "feasible point fails substitution");
  return x;
}

std::vector<BigInt> solve_feasible_point(const GroupRelaxationData& grd) {
  std::optional<std::vector<BigInt>> x = congruence_solve(grd.Abold, grd.bbold, grd.r);
  if (!x) fail(ErrorKind::kInfeasible, "group relaxation is infeasible for this basis");
  check_internal(satisfies_group_constraint(grd, *x), "feasible point fails substitution");
  return *x;
}

KernelBasis null_gen_finding(const GroupRelaxationData& grd) {
  KernelBasis kb = congruence_kernel(grd.Abold, grd.r);
  kb.moduli.assign(grd.d(), grd.r_max);
  return kb;
}

bool in_group_kernel(const GroupRelaxationData& grd, const std::vector<BigInt>& x) {
  std::vector<BigInt> zero(grd.m());
  return satisfies(grd.Abold, x, zero, grd.r);
}

namespace {

std::vector<BigInt> prime_divisors(BigInt n) {
  std::vector<BigInt> out;
  for (unsigned long p = 2; p < 1000000 && BigInt(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n > 1) {
    check_internal(mpz_probab_prime_p(n.get_mpz_t(), 30) != 0, "could not factor column order");
    out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<BigInt> column_orders(const GroupRelaxationData& grd) {
  std::vector<BigInt> s(grd.d());
  for (std::size_t j = 0; j < grd.d(); ++j) {
    BigInt o = 1;
    for (std::size_t i = 0; i < grd.m(); ++i) {
      o = lcm(o, grd.r[i] / gcd(grd.r[i], grd.Abold(i, j)));
    }
    check_internal(o > 1, "zero column survived reduction");
    check_internal(mpz_divisible_p(grd.r_max.get_mpz_t(), o.get_mpz_t()) != 0, "column order does not divide r_m");
    std::vector<BigInt> col = grd.Abold.column(j);
    auto annihilates = [&](const BigInt& k) {
      for (std::size_t i = 0; i < grd.m(); ++i) {
        BigInt v = k * col[i];
        if (!mpz_divisible_p(v.get_mpz_t(), grd.r[i].get_mpz_t())) return false;
      }
      return true;
    };
    check_internal(annihilates(o), "column order does not annihilate its column");
    for (const BigInt& p : prime_divisors(o)) {
      check_internal(!annihilates(o / p), "column order is not minimal");
    }
    s[j] = o;
  }
  return s;
}

KernelBasis compress_kernel(const GroupRelaxationData& grd, const KernelBasis& kb) {
  const std::size_t d = grd.d();
  const std::vector<BigInt> s = column_orders(grd);
  KernelBasis out;
  out.moduli = s;
  out.range_order = kb.range_order;
  const BigInt rm = grd.r_max;
  const std::size_t k = kb.rank();
  if (k > 0) {
    // Coefficient vectors n (for n -> sum n_i h_i) that vanish modulo S.
    IntMatrix BD(d, k);
    for (std::size_t j = 0; j < d; ++j) {
      BigInt scale = rm / s[j];
      for (std::size_t i = 0; i < k; ++i) BD(j, i) = mod_floor(scale * kb.generators[i][j], rm);
    }
    KernelBasis rel = congruence_kernel(BD, std::vector<BigInt>(d, rm));
    const std::size_t t = rel.rank();
    IntMatrix C(k, t + k);
    for (std::size_t c = 0; c < t; ++c) {
      for (std::size_t i = 0; i < k; ++i) C(i, c) = rel.generators[c][i];
    }
    for (std::size_t i = 0; i < k; ++i) C(i, t + i) = rm;
    SNFResult cs = snf(C);
    for (std::size_t j = 0; j < k; ++j) {
      const BigInt& mjj = cs.D[j];
      check_internal(mjj != 0, "relation lattice is not full rank");
      if (mjj == 1) continue;
      std::vector<BigInt> g(d);
      for (std::size_t c = 0; c < d; ++c) {
        BigInt acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc += kb.generators[i][c] * cs.U(i, j);
        g[c] = mod_floor(acc, s[c]);
      }
      check_internal(element_order(g, s) == mjj, "compressed generator order mismatch");
      check_internal(in_group_kernel(grd, g), "compressed generator is not in the kernel");
      out.generators.push_back(std::move(g));
      out.orders.push_back(mjj);
    }
  }
  out.kernel_order = product(out.orders);
  check_internal(out.kernel_order * out.range_order == product(s),
                 "compressed kernel order disagrees with the column orders");
  return out;
}

FeasibleCoset build_feasible_coset(const GroupRelaxationData& grd, bool compress) {
  FeasibleCoset fc;
  fc.x_hat = solve_feasible_point(grd);
  fc.basis = null_gen_finding(grd);
  check_internal(fc.basis.kernel_order * fc.basis.range_order == power(grd.r_max, grd.d()),
                 "|K||G| differs from the ambient order");
  if (compress) {
    fc.basis = compress_kernel(grd, fc.basis);
    for (std::size_t j = 0; j < grd.d(); ++j) fc.x_hat[j] = mod_floor(fc.x_hat[j], fc.basis.moduli[j]);
    check_internal(satisfies_group_constraint(grd, fc.x_hat), "compressed feasible point fails substitution");
    fc.compressed = true;
  }
  return fc;
}

CosetEnumerator::CosetEnumerator(const FeasibleCoset& fc, const BigInt& cap)
    : fc_(fc), coeff_(fc.basis.rank()) {
  if (fc.basis.kernel_order > cap) {
    fail(ErrorKind::kCapExceeded, "coset of size " + fc.basis.kernel_order.get_str() + " exceeds cap");
  }
}

bool CosetEnumerator::next(std::vector<BigInt>* point) {
  if (done_) return false;
  const KernelBasis& kb = fc_.basis;
  std::vector<BigInt> x = fc_.x_hat;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += coeff_[i] * kb.generators[i][j];
  }
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = mod_floor(x[j], kb.moduli[j]);
  *point = std::move(x);
  std::size_t i = 0;
  for (; i < coeff_.size(); ++i) {
    coeff_[i] += 1;
    if (coeff_[i] < kb.orders[i]) break;
    coeff_[i] = 0;
  }
  if (i == coeff_.size()) done_ = true;
  return true;
}

std::vector<std::vector<BigInt>> enumerate_coset(const FeasibleCoset& fc, const BigInt& cap) {
  CosetEnumerator e(fc, cap);
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> x;
  while (e.next(&x)) out.push_back(x);
  return out;
}

}  // namespace grouprelax

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
#include "grouprelax/walks.hpp"

#include <omp.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "grouprelax/errors.hpp"
#include "grouprelax/exact_algebra.hpp"

namespace grouprelax {

namespace {

struct HoldWeights {
  std::int64_t hold;  // out of 2 * den per generator
  std::int64_t move;  // each of a = +1 and a = -1
  std::int64_t total;
};

HoldWeights hold_weights(const CayleyWalkSpec& spec) {
  const Rational& p = spec.hold_probability;
  if (p < 0 || p >= 1) fail(ErrorKind::kInvalidArgument, "hold probability must lie in [0, 1)");
  const std::int64_t num = to_int64(p.get_num());
  const std::int64_t den = to_int64(p.get_den());
  return HoldWeights{2 * num, den - num, 2 * den};
}

std::vector<std::int64_t> add_coefficients(const std::vector<std::int64_t>& n, const std::vector<std::int64_t>& g,
                                           std::int64_t a, const std::vector<std::int64_t>& orders) {
  std::vector<std::int64_t> out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::int64_t v = (n[i] + a * (g[i] % orders[i])) % orders[i];
    out[i] = v < 0 ? v + orders[i] : v;
  }
  return out;
}

void check_dense(const CompactCoset& cc, std::size_t dense_limit) {
  if (cc.size > dense_limit) {
    fail(ErrorKind::kDenseLimitExceeded,
         "coset of size " + std::to_string(cc.size) + " exceeds dense limit " + std::to_string(dense_limit));
  }
}

std::vector<std::pair<std::uint32_t, std::int64_t>> transition_row(const CayleyWalkSpec& spec,
                                                                   const CompactCoset& cc,
                                                                   const HoldWeights& hw, std::size_t x) {
  std::map<std::uint32_t, std::int64_t> acc;
  const std::vector<std::int64_t> n = cc.coefficients(x);
  acc[static_cast<std::uint32_t>(x)] += hw.hold * static_cast<std::int64_t>(spec.size());
  for (const auto& g : spec.coefficients) {
    for (int a : {1, -1}) {
      std::uint64_t y = cc.index_of(add_coefficients(n, g, a, cc.orders));
      acc[static_cast<std::uint32_t>(y)] += hw.move;
    }
  }
  return {acc.begin(), acc.end()};
}

}  // namespace

CayleyWalkSpec CayleyWalkSpec::product_of_cycles(const CompactCoset& cc) {
  CayleyWalkSpec spec;
  spec.moduli = cc.moduli;
  spec.generators = cc.generators;
  for (std::size_t i = 0; i < cc.rank(); ++i) {
    std::vector<std::int64_t> e(cc.rank(), 0);
    e[i] = 1;
    spec.coefficients.push_back(std::move(e));
  }
  return spec;
}

CayleyWalkSpec CayleyWalkSpec::from_coefficients(const CompactCoset& cc,
                                                 std::vector<std::vector<std::int64_t>> coeffs) {
  CayleyWalkSpec spec;
  spec.moduli = cc.moduli;
  for (const auto& n : coeffs) {
    check_internal(n.size() == cc.rank(), "coefficient vector length");
    std::vector<std::int64_t> h(cc.dimension(), 0);
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] != 0) cc.add(h, cc.generators[i], n[i]);
    }
    spec.generators.push_back(std::move(h));
  }
  spec.coefficients = std::move(coeffs);
  return spec;
}

Move draw_move(const CayleyWalkSpec& spec, Rng& rng) {
  Move mv;
  if (spec.size() == 0) return mv;
  mv.generator = static_cast<std::size_t>(rng.uniform(spec.size()));
  const HoldWeights hw = hold_weights(spec);
  const std::uint64_t u = rng.uniform(static_cast<std::uint64_t>(hw.total));
  if (u < static_cast<std::uint64_t>(hw.hold)) {
    mv.a = 0;
  } else {
    mv.a = (u - static_cast<std::uint64_t>(hw.hold)) % 2 == 0 ? 1 : -1;
  }
  return mv;
}

void apply_move(std::vector<std::int64_t>& state, const CayleyWalkSpec& spec, const Move& mv) {
  if (mv.a == 0 || spec.size() == 0) return;
  const auto& h = spec.generators[mv.generator];
  for (std::size_t j = 0; j < state.size(); ++j) {
    if (h[j] == 0) continue;
    std::int64_t v = mv.a > 0 ? state[j] + h[j] : state[j] - h[j];
    if (v >= spec.moduli[j]) v -= spec.moduli[j];
    if (v < 0) v += spec.moduli[j];
    state[j] = v;
  }
}

void step(std::vector<std::int64_t>& state, const CayleyWalkSpec& spec, Rng& rng) {
  apply_move(state, spec, draw_move(spec, rng));
}

std::size_t expander_sample_count(std::uint64_t kernel_order, double C) {
  if (kernel_order <= 1) return 0;
  return static_cast<std::size_t>(std::ceil(C * std::log(static_cast<double>(kernel_order))));
}

CayleyWalkSpec expander_generation(const CompactCoset& cc, double C, Rng& rng) {
  const std::size_t count = expander_sample_count(cc.size, C);
  std::vector<std::vector<std::int64_t>> coeffs;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::int64_t> n(cc.rank());
    for (std::size_t i = 0; i < n.size(); ++i) {
      n[i] = static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(cc.orders[i])));
    }
    coeffs.push_back(std::move(n));
  }
  return CayleyWalkSpec::from_coefficients(cc, std::move(coeffs));
}

bool generates_kernel(const CayleyWalkSpec& spec, const CompactCoset& cc) {
  const std::size_t k = cc.rank();
  if (k == 0) return true;
  IntMatrix M(k, spec.size() + k);
  for (std::size_t c = 0; c < spec.size(); ++c) {
    for (std::size_t i = 0; i < k; ++i) M(i, c) = static_cast<long>(spec.coefficients[c][i]);
  }
  for (std::size_t i = 0; i < k; ++i) M(i, spec.size() + i) = static_cast<long>(cc.orders[i]);
  SNFResult s = snf(M);
  for (const BigInt& d : s.D) {
    if (d != 1) return false;
  }
  return true;
}

std::int64_t TransitionMatrix::count(std::size_t x, std::size_t y) const {
  const auto& row = rows[x];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(static_cast<std::uint32_t>(y), INT64_MIN));
  return it != row.end() && it->first == y ? it->second : 0;
}

bool TransitionMatrix::is_symmetric() const {
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& [y, w] : rows[x]) {
      if (count(y, x) != w) return false;
    }
  }
  return true;
}

bool TransitionMatrix::is_doubly_stochastic() const {
  std::vector<std::int64_t> col(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::int64_t s = 0;
    for (const auto& [y, w] : rows[x]) {
      if (w < 0) return false;
      s += w;
      col[y] += w;
    }
    if (s != denominator) return false;
  }
  for (std::int64_t c : col) {
    if (c != denominator) return false;
  }
  return true;
}

Eigen::MatrixXd TransitionMatrix::dense() const {
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double inv = 1.0 / static_cast<double>(denominator);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& [y, w] : rows[x]) {
      P(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = static_cast<double>(w) * inv;
    }
  }
  return P;
}

std::vector<double> TransitionMatrix::evolve(std::size_t start, std::size_t t) const {
  std::vector<double> p(n, 0.0), q(n);
  p[start] = 1.0;
  const double inv = 1.0 / static_cast<double>(denominator);
  for (std::size_t s = 0; s < t; ++s) {
    std::fill(q.begin(), q.end(), 0.0);
    for (std::size_t x = 0; x < n; ++x) {
      if (p[x] == 0.0) continue;
      for (const auto& [y, w] : rows[x]) q[y] += p[x] * static_cast<double>(w) * inv;
    }
    std::swap(p, q);
  }
  return p;
}

TransitionMatrix transition_matrix_serial(const CayleyWalkSpec& spec, const CompactCoset& cc,
                                          std::size_t dense_limit) {
  check_dense(cc, dense_limit);
  TransitionMatrix tm;
  tm.n = cc.size;
  tm.rows.resize(tm.n);
  if (spec.size() == 0) {
    for (std::size_t x = 0; x < tm.n; ++x) tm.rows[x] = {{static_cast<std::uint32_t>(x), 1}};
    return tm;
  }
  const HoldWeights hw = hold_weights(spec);
  tm.denominator = hw.total * static_cast<std::int64_t>(spec.size());
  for (std::size_t x = 0; x < tm.n; ++x) tm.rows[x] = transition_row(spec, cc, hw, x);
  return tm;
}

TransitionMatrix transition_matrix(const CayleyWalkSpec& spec, const CompactCoset& cc, std::size_t dense_limit) {
  check_dense(cc, dense_limit);
  if (spec.size() == 0) return transition_matrix_serial(spec, cc, dense_limit);
  TransitionMatrix tm;
  tm.n = cc.size;
  tm.rows.resize(tm.n);
  const HoldWeights hw = hold_weights(spec);
  tm.denominator = hw.total * static_cast<std::int64_t>(spec.size());
  const std::int64_t n = static_cast<std::int64_t>(tm.n);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < n; ++x) {
    tm.rows[static_cast<std::size_t>(x)] = transition_row(spec, cc, hw, static_cast<std::size_t>(x));
  }
  return tm;
}

double tv_from_uniform(const std::vector<double>& p) {
  const double u = 1.0 / static_cast<double>(p.size());
  double s = 0.0;
  for (double v : p) s += std::abs(v - u);
  return 0.5 * s;
}

double spectral_gap(const Eigen::MatrixXd& P) {
  const Eigen::Index n = P.rows();
  if (n <= 1) return 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(P, Eigen::EigenvaluesOnly);
  check_internal(es.info() == Eigen::Success, "eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  double worst = std::max(std::abs(ev(0)), std::abs(ev(n - 2)));
  return std::clamp(1.0 - worst, 0.0, 1.0);
}

std::vector<double> cayley_eigenvalues(const CayleyWalkSpec& spec, const CompactCoset& cc) {
  if (cc.size > (std::uint64_t{1} << 26)) fail(ErrorKind::kDenseLimitExceeded, "character table too large");
  std::vector<double> out(cc.size, 1.0);
  if (spec.size() == 0) return out;
  const double p = spec.hold_probability.get_d();
  const double scale = (1.0 - p) / static_cast<double>(spec.size());
  for (std::uint64_t idx = 0; idx < cc.size; ++idx) {
    const std::vector<std::int64_t> xi = cc.coefficients(idx);
    double s = 0.0;
    for (const auto& g : spec.coefficients) {
      double phase = 0.0;
      for (std::size_t i = 0; i < xi.size(); ++i) {
        const std::int64_t prod = (xi[i] * (g[i] % cc.orders[i])) % cc.orders[i];
        phase += static_cast<double>(prod) / static_cast<double>(cc.orders[i]);
      }
      s += std::cos(2.0 * std::numbers::pi * phase);
    }
    out[idx] = p + scale * s;
  }
  return out;
}

double spectral_gap_characters(const CayleyWalkSpec& spec, const CompactCoset& cc) {
  if (cc.size <= 1) return 1.0;
  std::vector<double> ev = cayley_eigenvalues(spec, cc);
  double worst = 0.0;
  for (std::size_t i = 1; i < ev.size(); ++i) worst = std::max(worst, std::abs(ev[i]));
  return std::clamp(1.0 - worst, 0.0, 1.0);
}

double log_sobolev_lower(const CompactCoset& cc) {
  if (cc.rank() == 0) return 1.0;
  const double u = static_cast<double>(cc.max_order());
  return 1.0 / (2.0 * static_cast<double>(cc.rank()) * u * u);
}

Rational cyclic_metric(const std::vector<std::int64_t>& v, const std::vector<Rational>& w,
                       const std::vector<std::int64_t>& moduli, CyclicMode mode) {
  check_internal(v.size() == w.size() && v.size() == moduli.size(), "cyclic metric dimensions");
  Rational total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::int64_t vi = v[i] % moduli[i];
    if (vi < 0) vi += moduli[i];
    if (vi == 0 && mode == CyclicMode::kSupport) continue;
    const std::int64_t span = std::max(vi, moduli[i] - vi);
    total += abs(w[i]) * Rational(static_cast<long>(span));
  }
  return total;
}

namespace {

// Numerator of E_y (f(x)-f(y))^2 over the common denominator 2*den*k*costden^2.
BigInt local_energy(const LinearCost& f, const CayleyWalkSpec& spec, const CompactCoset& cc,
                    const HoldWeights& hw, std::uint64_t idx) {
  std::vector<std::int64_t> x = cc.point(idx);
  const Int128 fx = f.raw(x);
  BigInt acc = 0;
  for (std::size_t g = 0; g < spec.size(); ++g) {
    for (int a : {1, -1}) {
      std::vector<std::int64_t> y = x;
      apply_move(y, spec, Move{g, a});
      Rational diff = int128_to_rational(f.raw(y) - fx);
      BigInt dn = diff.get_num();
      acc += dn * dn * hw.move;
    }
  }
  return acc;
}

Rational energy_to_rational(const BigInt& num, const LinearCost& f, const CayleyWalkSpec& spec,
                            const HoldWeights& hw) {
  BigInt den = f.denominator * f.denominator * hw.total * static_cast<long>(spec.size());
  return make_rational(num, den);
}

}  // namespace

Rational pseudo_lipschitz_exact_serial(const LinearCost& f, const CayleyWalkSpec& spec, const CompactCoset& cc) {
  if (spec.size() == 0) return Rational(0);
  const HoldWeights hw = hold_weights(spec);
  BigInt best = 0;
  for (std::uint64_t idx = 0; idx < cc.size; ++idx) {
    BigInt e = local_energy(f, spec, cc, hw, idx);
    if (e > best) best = e;
  }
  return energy_to_rational(best, f, spec, hw);
}

Rational pseudo_lipschitz_exact_parallel(const LinearCost& f, const CayleyWalkSpec& spec, const CompactCoset& cc) {
  if (spec.size() == 0) return Rational(0);
  const HoldWeights hw = hold_weights(spec);
  std::vector<BigInt> best(static_cast<std::size_t>(omp_get_max_threads()), BigInt(0));
  const std::int64_t n = static_cast<std::int64_t>(cc.size);
#pragma omp parallel
  {
    BigInt& mine = best[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      BigInt e = local_energy(f, spec, cc, hw, static_cast<std::uint64_t>(idx));
      if (e > mine) mine = e;
    }
  }
  BigInt top = 0;
  for (const BigInt& b : best) top = std::max(top, b);
  return energy_to_rational(top, f, spec, hw);
}

PseudoLipschitz pseudo_lipschitz(const LinearCost& f, const CayleyWalkSpec& spec, const CompactCoset& cc,
                                 std::size_t dense_limit) {
  PseudoLipschitz out;
  std::vector<Rational> w;
  for (std::int64_t c : f.weights) w.push_back(make_rational(BigInt(static_cast<long>(c)), f.denominator));
  out.delta_p_bound = 0;
  for (const auto& h : spec.generators) {
    Rational c = cyclic_metric(h, w, spec.moduli);
    if (c > out.delta_p_bound) out.delta_p_bound = c;
  }
  if (cc.size <= dense_limit) out.exact = pseudo_lipschitz_exact_parallel(f, spec, cc);
  return out;
}

void metropolis_step(std::vector<std::int64_t>& state, Int128& raw, double beta, const CayleyWalkSpec& spec,
                     const LinearCost& f, Rng& rng) {
  const Move mv = draw_move(spec, rng);
  if (mv.a == 0 || spec.size() == 0) return;
  std::vector<std::int64_t> y = state;
  apply_move(y, spec, mv);
  const Int128 ry = f.raw(y);
  const double df = static_cast<double>(ry - raw) * f.scale();
  if (beta != 0.0 && df > 0.0) {
    if (rng.uniform01() >= std::exp(-beta * df)) return;
  }
  state = std::move(y);
  raw = ry;
}

Eigen::MatrixXd metropolis_matrix(const CayleyWalkSpec& spec, const CompactCoset& cc, const LinearCost& f,
                                  double beta, std::size_t dense_limit) {
  TransitionMatrix base = transition_matrix(spec, cc, dense_limit);
  std::vector<double> fx(cc.size);
  std::vector<Int128> raw = coset_objectives_parallel(cc, f);
  for (std::size_t i = 0; i < cc.size; ++i) fx[i] = static_cast<double>(raw[i]) * f.scale();
  const Eigen::Index n = static_cast<Eigen::Index>(cc.size);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
  const double inv = 1.0 / static_cast<double>(base.denominator);
  for (std::size_t x = 0; x < cc.size; ++x) {
    double off = 0.0;
    for (const auto& [y, w] : base.rows[x]) {
      if (y == x) continue;
      const double acc = std::min(1.0, std::exp(-beta * (fx[y] - fx[x])));
      const double pxy = static_cast<double>(w) * inv * acc;
      P(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = pxy;
      off += pxy;
    }
    P(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = 1.0 - off;
  }
  return P;
}

Eigen::VectorXd stationary_vector(const Eigen::MatrixXd& P) {
  const Eigen::Index n = P.rows();
  Eigen::MatrixXd M = P.transpose() - Eigen::MatrixXd::Identity(n, n);
  M.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;
  return M.fullPivLu().solve(rhs);
}

}  // namespace grouprelax

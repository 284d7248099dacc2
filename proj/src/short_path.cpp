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
#include "grouprelax/short_path.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "grouprelax/errors.hpp"
#include "grouprelax/rng.hpp"

namespace grouprelax {

ShiftedCost shifted_cost(const LinearCost& f, const CompactCoset& cc, std::size_t dense_limit) {
  if (cc.size > dense_limit) fail(ErrorKind::kDenseLimitExceeded, "coset too large for dense diagnostics");
  std::vector<Int128> raw = coset_objectives_parallel(cc, f);
  Int128 lo = raw[0], hi = raw[0];
  for (Int128 v : raw) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  ShiftedCost out;
  out.opt_b = f.value(lo);
  out.f_max = f.value(hi);
  out.C = out.f_max + 1;
  out.E_star = out.opt_b - out.C;
  out.values.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.values.push_back(f.value(raw[i]) - out.C);
    if (raw[i] == lo) out.optimal.push_back(i);
  }
  return out;
}

double theta_eta(double x, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) fail(ErrorKind::kInvalidArgument, "eta must lie in (0,1)");
  return std::min(0.0, (x + 1.0 - eta) / eta);
}

Rational theta_eta(const Rational& x, const Rational& eta) {
  if (eta <= 0 || eta >= 1) fail(ErrorKind::kInvalidArgument, "eta must lie in (0,1)");
  Rational v = (x + 1 - eta) / eta;
  return v < 0 ? v : Rational(0);
}

Eigen::MatrixXd build_sp_hamiltonian(const Eigen::MatrixXd& P, const std::vector<double>& ftilde, double e_star_abs,
                                     double mu, double eta) {
  const Eigen::Index n = P.rows();
  if (P.cols() != n || static_cast<std::size_t>(n) != ftilde.size())
    fail(ErrorKind::kInvalidArgument, "hamiltonian dimension mismatch");
  if (!(e_star_abs > 0.0)) fail(ErrorKind::kInvalidArgument, "|E*| must be positive");
  Eigen::MatrixXd H = -P;
  for (Eigen::Index i = 0; i < n; ++i) {
    double th = theta_eta(ftilde[static_cast<std::size_t>(i)] / e_star_abs, eta);
    check_internal(th >= -1.0 - 1e-12 && th <= 0.0, "theta_eta outside [-1, 0]");
    H(i, i) += mu * th;
  }
  return H;
}

GroundState ground_overlap(const Eigen::MatrixXd& H, const std::vector<std::uint64_t>& optimal) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  check_internal(es.info() == Eigen::Success, "eigensolver failed");
  GroundState gs;
  gs.lambda1 = es.eigenvalues()(0);
  gs.psi = es.eigenvectors().col(0);
  double norm = std::max(1.0, H.cwiseAbs().rowwise().sum().maxCoeff());
  gs.residual = (H * gs.psi - gs.lambda1 * gs.psi).norm() / norm;
  check_internal(gs.residual <= kEigenResidualTolerance * std::sqrt(static_cast<double>(H.rows())),
                 "eigen residual above tolerance");
  for (std::uint64_t i : optimal) gs.overlap += gs.psi(static_cast<Eigen::Index>(i)) * gs.psi(static_cast<Eigen::Index>(i));
  return gs;
}

bool ConditionBand::contains(double v) const {
  const double tol = 1e-12;
  return v >= lo * (1.0 - tol) && v <= hi * (1.0 + tol);
}

SpeedupConditions speedup_conditions(const std::vector<std::vector<std::int64_t>>& generators,
                                     const std::vector<std::int64_t>& orders,
                                     const std::vector<std::int64_t>& moduli, const std::vector<Rational>& c,
                                     const Rational& e_star, const BigInt& k_order, const BigInt& k_star,
                                     const ConditionBand& band) {
  if (k_star <= 0 || k_star > k_order) fail(ErrorKind::kDiagnosticUnavailable, "|K*| unknown");
  SpeedupConditions sc;
  for (const auto& h : generators) {
    double v = cyclic_metric(h, c, moduli).get_d();
    sc.cyclic_norm_max = std::max(sc.cyclic_norm_max, v);
  }
  for (std::int64_t u : orders) sc.max_order_sq = std::max(sc.max_order_sq, static_cast<double>(u) * static_cast<double>(u));
  if (k_star == k_order || generators.empty()) {
    sc.degenerate = true;
    return sc;
  }
  Rational ratio(k_order, k_star);
  ratio.canonicalize();
  sc.log_ratio = std::log2(ratio.get_d());
  double e_abs = std::fabs(e_star.get_d());
  sc.r1 = sc.cyclic_norm_max / (e_abs / sc.log_ratio);
  sc.r2 = sc.max_order_sq * static_cast<double>(generators.size()) / sc.log_ratio;
  sc.size_ratio_in_band = band.contains(sc.r1);
  sc.gap_ratio_in_band = band.contains(sc.r2);
  return sc;
}

std::vector<OverlapPoint> overlap_sweep_serial(const Eigen::MatrixXd& P, const std::vector<double>& ftilde,
                                               double e_star_abs, double eta, const std::vector<double>& mus,
                                               const std::vector<std::uint64_t>& optimal) {
  std::vector<OverlapPoint> out;
  for (double mu : mus) {
    GroundState gs = ground_overlap(build_sp_hamiltonian(P, ftilde, e_star_abs, mu, eta), optimal);
    out.push_back({mu, gs.lambda1, gs.overlap});
  }
  return out;
}

std::vector<OverlapPoint> overlap_sweep(const Eigen::MatrixXd& P, const std::vector<double>& ftilde,
                                        double e_star_abs, double eta, const std::vector<double>& mus,
                                        const std::vector<std::uint64_t>& optimal) {
  std::vector<OverlapPoint> out(mus.size());
  std::vector<std::string> errors(mus.size());
  const auto n = static_cast<std::int64_t>(mus.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const double mu = mus[static_cast<std::size_t>(i)];
      GroundState gs = ground_overlap(build_sp_hamiltonian(P, ftilde, e_star_abs, mu, eta), optimal);
      out[static_cast<std::size_t>(i)] = {mu, gs.lambda1, gs.overlap};
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) fail(ErrorKind::kInternalFault, e);
  return out;
}

namespace {

std::vector<std::int64_t> ambient_orders(const std::vector<std::vector<std::int64_t>>& gens,
                                         const std::vector<std::int64_t>& moduli) {
  std::vector<std::int64_t> out;
  for (const auto& h : gens) {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < h.size(); ++i) o = std::lcm(o, moduli[i] / std::gcd(h[i], moduli[i]));
    out.push_back(o);
  }
  return out;
}

}  // namespace

SPReport diagnose(const GroupRelaxationData& grd, const FeasibleCoset& fc, const SPConfig& cfg) {
  if (!(cfg.eta > 0.0 && cfg.eta < 1.0)) fail(ErrorKind::kInvalidArgument, "eta must lie in (0,1)");
  CompactCoset cc = CompactCoset::from(fc);
  if (cc.size > cfg.dense_limit) fail(ErrorKind::kDenseLimitExceeded, "coset too large for dense diagnostics");
  LinearCost f = LinearCost::from(grd);
  ShiftedCost sc = shifted_cost(f, cc, cfg.dense_limit);

  SPReport rep;
  rep.k_order = cc.size;
  rep.k_star = sc.optimal.size();
  rep.g_order = fc.basis.range_order;
  rep.opt_b = sc.opt_b;
  rep.f_max = sc.f_max;
  rep.C = sc.C;
  rep.E_star = sc.E_star;
  const double n = static_cast<double>(cc.size);
  rep.pi_star = static_cast<double>(rep.k_star) / n;

  std::vector<double> ft(sc.values.size());
  for (std::size_t i = 0; i < ft.size(); ++i) ft[i] = sc.values[i].get_d();
  const double e_abs = std::fabs(sc.E_star.get_d());
  Rational level = (1 - Rational(cfg.eta)) * sc.E_star;
  std::size_t below = 0;
  double mean_h = 0.0, mean_theta = 0.0;
  for (std::size_t i = 0; i < ft.size(); ++i) {
    if (sc.values[i] <= level) ++below;
    mean_h += ft[i];
    mean_theta += theta_eta(ft[i] / e_abs, cfg.eta);
  }
  mean_h /= n;
  mean_theta /= n;
  rep.sublevel_mass = static_cast<double>(below) / n;

  CayleyWalkSpec walk = CayleyWalkSpec::product_of_cycles(cc);
  PseudoLipschitz pl = pseudo_lipschitz(f, walk, cc, cfg.dense_limit);
  rep.delta_p_bound = pl.delta_p_bound;
  rep.pseudo_lipschitz = pl.exact.value_or(pl.norm_bound());
  rep.cyclic_norm_max = pl.delta_p_bound.get_d();
  rep.omega_hat = log_sobolev_lower(cc);

  Eigen::MatrixXd P;
  if (cc.size > 1) {
    P = transition_matrix(walk, cc, cfg.dense_limit).dense();
    rep.delta = spectral_gap(P);
  } else {
    P = Eigen::MatrixXd::Ones(1, 1);
    rep.delta = 1.0;
  }

  rep.conditions = speedup_conditions(walk.generators, cc.orders, cc.moduli, grd.cbold, sc.E_star,
                                      BigInt(static_cast<unsigned long>(rep.k_order)),
                                      BigInt(static_cast<unsigned long>(rep.k_star)), cfg.band);

  Rng rng(cfg.seed);
  CayleyWalkSpec ex = expander_generation(cc, cfg.expander_c, rng);
  rep.expander_size = ex.size();
  rep.expander_generates = cc.size == 1 || generates_kernel(ex, cc);
  if (cc.size > 1 && rep.expander_generates) {
    rep.expander_delta = spectral_gap(transition_matrix(ex, cc, cfg.dense_limit).dense());
  } else if (cc.size > 1) {
    rep.expander_delta = 0.0;
  }
  if (rep.k_star < rep.k_order) {
    rep.expander_conditions = speedup_conditions(ex.generators, ambient_orders(ex.generators, cc.moduli), cc.moduli,
                                                 grd.cbold, sc.E_star, BigInt(static_cast<unsigned long>(rep.k_order)),
                                                 BigInt(static_cast<unsigned long>(rep.k_star)), cfg.band);
  } else {
    rep.expander_conditions.degenerate = true;
  }

  if (rep.k_star == rep.k_order) {
    rep.degenerate = true;
    rep.note = "degenerate: all feasible points optimal";
  } else {
    const double log_inv_pi = std::log(n / static_cast<double>(rep.k_star));
    const double h_p = rep.pseudo_lipschitz.get_d();
    const double base = (1.0 - cfg.eta) * e_abs;
    if (h_p > 0.0) {
      rep.gamma_ls = rep.omega_hat * std::pow(base - mean_h, 2) / (h_p * log_inv_pi);
      rep.gamma_ls_theta = rep.omega_hat * std::pow(base - mean_theta, 2) / (h_p * log_inv_pi);
      rep.gamma_gap = std::sqrt(rep.delta) * (base - mean_h) / (std::sqrt(h_p) * log_inv_pi);
      rep.gamma_gap_theta = std::sqrt(rep.delta) * (base - mean_theta) / (std::sqrt(h_p) * log_inv_pi);
    }
    rep.mu_star_ls = 2.0 / 3.0 * rep.gamma_ls * rep.omega_hat * log_inv_pi;
    rep.mu_star_gap = rep.delta / 4.0;
    rep.mu = 0.9 * std::min(rep.mu_star_ls, rep.mu_star_gap);
    const double dp = rep.delta_p_bound.get_d();
    if (dp > 0.0) rep.alpha_raw = cfg.eta * (1.0 - cfg.eta) * e_abs * rep.mu / (2.0 * dp * log_inv_pi);
    rep.alpha_hat = std::clamp(rep.alpha_raw, 0.0, std::nextafter(0.5, 0.0));
  }

  std::vector<double> mus;
  const double top = rep.mu_star_ls > 0.0 ? rep.mu_star_ls : rep.mu_star_gap;
  const std::size_t sweep = std::max<std::size_t>(cfg.mu_sweep, 1);
  for (std::size_t i = 0; i < sweep; ++i) mus.push_back(top * static_cast<double>(i) / static_cast<double>(sweep));
  rep.overlap_curve = overlap_sweep(P, ft, e_abs, cfg.eta, mus, sc.optimal);

  check_internal(std::fabs(rep.overlap_curve.front().overlap - rep.pi_star) <= 1e-10, "mu=0 overlap differs from pi(E*)");
  for (std::size_t i = 1; i < rep.overlap_curve.size(); ++i) {
    const auto& a = rep.overlap_curve[i - 1];
    const auto& b = rep.overlap_curve[i];
    check_internal(b.lambda1 <= a.lambda1 + 1e-9, "lambda1 increased along the mu sweep");
    if (b.overlap < a.overlap - 1e-9) ++rep.overlap_monotonicity_violations;
  }
  if (pl.exact) {
    check_internal(*pl.exact <= pl.norm_bound(), "pseudo-Lipschitz bound violated");
  }
  return rep;
}

}  // namespace grouprelax

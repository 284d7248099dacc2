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

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/coset.hpp"
#include "grouprelax/group_relaxation.hpp"
#include "grouprelax/kernel.hpp"
#include "grouprelax/walks.hpp"

namespace grouprelax {

struct ShiftedCost {
  std::vector<Rational> values;  // f - C per coset index
  Rational f_max;
  Rational opt_b;
  Rational C;
  Rational E_star;
  std::vector<std::uint64_t> optimal;  // K*, coset indices
};

ShiftedCost shifted_cost(const LinearCost& f, const CompactCoset& cc,
                         std::size_t dense_limit = kDefaultDenseLimit);

double theta_eta(double x, double eta);
Rational theta_eta(const Rational& x, const Rational& eta);

// H = -P + mu * diag(theta_eta(ftilde / |E*|)).
Eigen::MatrixXd build_sp_hamiltonian(const Eigen::MatrixXd& P, const std::vector<double>& ftilde, double e_star_abs,
                                     double mu, double eta);

struct GroundState {
  double lambda1 = 0.0;
  double overlap = 0.0;
  double residual = 0.0;
  Eigen::VectorXd psi;
};

inline constexpr double kEigenResidualTolerance = 1e-12;

// Lowest eigenpair; throws InternalFault when the scaled residual exceeds
// kEigenResidualTolerance.
GroundState ground_overlap(const Eigen::MatrixXd& H, const std::vector<std::uint64_t>& optimal);

struct ConditionBand {
  double lo = 0.25;
  double hi = 4.0;
  bool contains(double v) const;
};

struct SpeedupConditions {
  bool degenerate = false;  // |K*| = |K|
  double log_ratio = 0.0;   // log2(|K|/|K*|)
  double cyclic_norm_max = 0.0;
  double max_order_sq = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  bool size_ratio_in_band = false;
  bool gap_ratio_in_band = false;
};

// R1 = max_j cyclic(h_j) / (|E*| / log2(|K|/|K*|)),  R2 = max_j u_j^2 k / log2(|K|/|K*|).
SpeedupConditions speedup_conditions(const std::vector<std::vector<std::int64_t>>& generators,
                                     const std::vector<std::int64_t>& orders,
                                     const std::vector<std::int64_t>& moduli, const std::vector<Rational>& c,
                                     const Rational& e_star, const BigInt& k_order, const BigInt& k_star,
                                     const ConditionBand& band = {});

struct SPConfig {
  double eta = 0.5;
  std::size_t dense_limit = kDefaultDenseLimit;
  double expander_c = 8.0;
  std::size_t mu_sweep = 8;
  std::uint64_t seed = 0;
  ConditionBand band;
};

struct OverlapPoint {
  double mu;
  double lambda1;
  double overlap;
};

struct SPReport {
  std::uint64_t k_order = 1;
  std::uint64_t k_star = 1;
  BigInt g_order = 1;
  Rational opt_b, f_max, C, E_star;
  double pi_star = 1.0;
  double sublevel_mass = 1.0;
  double cyclic_norm_max = 0.0;
  Rational delta_p_bound;
  Rational pseudo_lipschitz;
  double omega_hat = 1.0;
  double delta = 1.0;
  double gamma_ls = 0.0;
  double gamma_ls_theta = 0.0;
  double gamma_gap = 0.0;
  double gamma_gap_theta = 0.0;
  double mu_star_ls = 0.0;
  double mu_star_gap = 0.0;
  double mu = 0.0;
  double alpha_raw = 0.0;
  double alpha_hat = 0.0;
  SpeedupConditions conditions;
  std::size_t expander_size = 0;
  bool expander_generates = false;
  double expander_delta = 1.0;
  SpeedupConditions expander_conditions;
  std::vector<OverlapPoint> overlap_curve;
  std::size_t overlap_monotonicity_violations = 0;
  bool degenerate = false;
  std::string note;
};

SPReport diagnose(const GroupRelaxationData& grd, const FeasibleCoset& fc, const SPConfig& cfg);

// Ground states along mu values, serial reference and OpenMP version.
std::vector<OverlapPoint> overlap_sweep_serial(const Eigen::MatrixXd& P, const std::vector<double>& ftilde,
                                               double e_star_abs, double eta, const std::vector<double>& mus,
                                               const std::vector<std::uint64_t>& optimal);
std::vector<OverlapPoint> overlap_sweep(const Eigen::MatrixXd& P, const std::vector<double>& ftilde,
                                        double e_star_abs, double eta, const std::vector<double>& mus,
                                        const std::vector<std::uint64_t>& optimal);

}  // namespace grouprelax

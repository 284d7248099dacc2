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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/coset.hpp"
#include "grouprelax/rng.hpp"

namespace grouprelax {

inline constexpr std::size_t kDefaultDenseLimit = 4096;

// Lazy Cayley walk on the coset. Each generator is stored both in ambient
// coordinates and as a coefficient vector over the coset basis.
struct CayleyWalkSpec {
  std::vector<std::vector<std::int64_t>> generators;
  std::vector<std::vector<std::int64_t>> coefficients;
  std::vector<std::int64_t> moduli;
  Rational hold_probability = Rational(1, 3);

  static CayleyWalkSpec product_of_cycles(const CompactCoset& cc);
  // Generators given by coefficient vectors over the coset basis.
  static CayleyWalkSpec from_coefficients(const CompactCoset& cc,
                                          std::vector<std::vector<std::int64_t>> coeffs);
  std::size_t size() const { return generators.size(); }
};

struct Move {
  std::size_t generator = 0;
  int a = 0;  // -1, 0, +1
};

Move draw_move(const CayleyWalkSpec& spec, Rng& rng);
void apply_move(std::vector<std::int64_t>& state, const CayleyWalkSpec& spec, const Move& mv);
void step(std::vector<std::int64_t>& state, const CayleyWalkSpec& spec, Rng& rng);

// ceil(C ln|K|) uniform elements of K; empty when |K| = 1.
CayleyWalkSpec expander_generation(const CompactCoset& cc, double C, Rng& rng);
std::size_t expander_sample_count(std::uint64_t kernel_order, double C);

// True iff the generators span the whole kernel.
bool generates_kernel(const CayleyWalkSpec& spec, const CompactCoset& cc);

// Exact transition matrix P = counts / denominator over coset indices.
struct TransitionMatrix {
  std::size_t n = 0;
  std::int64_t denominator = 1;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;

  std::int64_t count(std::size_t x, std::size_t y) const;
  bool is_symmetric() const;
  bool is_doubly_stochastic() const;
  Eigen::MatrixXd dense() const;
  // Distribution after t steps from a point mass at start.
  std::vector<double> evolve(std::size_t start, std::size_t t) const;
};

TransitionMatrix transition_matrix_serial(const CayleyWalkSpec& spec, const CompactCoset& cc,
                                          std::size_t dense_limit = kDefaultDenseLimit);
TransitionMatrix transition_matrix(const CayleyWalkSpec& spec, const CompactCoset& cc,
                                   std::size_t dense_limit = kDefaultDenseLimit);

// Total-variation distance from the uniform distribution.
double tv_from_uniform(const std::vector<double>& p);

// 1 - max |lambda| over all eigenvalues but the top one of a symmetric P.
double spectral_gap(const Eigen::MatrixXd& P);

// Spectrum via the characters of the abelian kernel; matches the dense
// eigenvalues and needs no matrix.
std::vector<double> cayley_eigenvalues(const CayleyWalkSpec& spec, const CompactCoset& cc);
double spectral_gap_characters(const CayleyWalkSpec& spec, const CompactCoset& cc);

double log_sobolev_lower(const CompactCoset& cc);

enum class CyclicMode { kSupport, kStrictLiteral };

Rational cyclic_metric(const std::vector<std::int64_t>& v, const std::vector<Rational>& w,
                       const std::vector<std::int64_t>& moduli,
                       CyclicMode mode = CyclicMode::kSupport);

struct PseudoLipschitz {
  std::optional<Rational> exact;  // ||f||_P when enumerable
  Rational delta_p_bound;         // max_j cyclic_metric(h_j, c)
  Rational norm_bound() const { return delta_p_bound * delta_p_bound; }
};

PseudoLipschitz pseudo_lipschitz(const LinearCost& f, const CayleyWalkSpec& spec, const CompactCoset& cc,
                                 std::size_t dense_limit = kDefaultDenseLimit);
Rational pseudo_lipschitz_exact_serial(const LinearCost& f, const CayleyWalkSpec& spec, const CompactCoset& cc);
Rational pseudo_lipschitz_exact_parallel(const LinearCost& f, const CayleyWalkSpec& spec, const CompactCoset& cc);

// One Metropolis step targeting pi ~ exp(-beta f); raw is kept in sync.
void metropolis_step(std::vector<std::int64_t>& state, Int128& raw, double beta,
                     const CayleyWalkSpec& spec, const LinearCost& f, Rng& rng);

Eigen::MatrixXd metropolis_matrix(const CayleyWalkSpec& spec, const CompactCoset& cc, const LinearCost& f,
                                  double beta, std::size_t dense_limit = kDefaultDenseLimit);

// Left fixed point of a row-stochastic matrix, normalized to sum 1.
Eigen::VectorXd stationary_vector(const Eigen::MatrixXd& P);

}  // namespace grouprelax

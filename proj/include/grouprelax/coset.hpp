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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/group_relaxation.hpp"
#include "grouprelax/kernel.hpp"

namespace grouprelax {

using Int128 = __int128;

// Machine-word view of a feasible coset used by enumeration and the walks.
struct CompactCoset {
  std::vector<std::int64_t> moduli;
  std::vector<std::int64_t> x_hat;
  std::vector<std::vector<std::int64_t>> generators;
  std::vector<std::int64_t> orders;
  std::uint64_t size = 1;

  // Throws CapExceeded when entries or |K| do not fit in 64 bits.
  static CompactCoset from(const FeasibleCoset& fc);

  std::size_t dimension() const { return moduli.size(); }
  std::size_t rank() const { return orders.size(); }
  std::int64_t max_order() const;

  // Point with mixed-radix coefficient index (digit 0 fastest).
  std::vector<std::int64_t> point(std::uint64_t index) const;
  std::vector<std::int64_t> coefficients(std::uint64_t index) const;
  std::uint64_t index_of(const std::vector<std::int64_t>& coeff) const;
  // x += a*h (mod moduli)
  void add(std::vector<std::int64_t>& x, const std::vector<std::int64_t>& h, std::int64_t a) const;
};

// f(x) = shift + (weights . x) / denominator with integer weights.
struct LinearCost {
  std::vector<std::int64_t> weights;
  BigInt denominator = 1;
  Rational shift = 0;

  static LinearCost from(const GroupRelaxationData& grd);
  static LinearCost from_rational(const std::vector<Rational>& c, const Rational& shift);

  Int128 raw(const std::vector<std::int64_t>& x) const;
  Rational value(Int128 raw) const;
  double approx(Int128 raw) const;
  double scale() const;  // 1 / denominator
};

Rational int128_to_rational(Int128 v);

struct CosetMinimum {
  Int128 best_raw = 0;
  // Coefficient indices of all minimizers, ascending.
  std::vector<std::uint64_t> argmin;
};

// Exhaustive minimum over the coset. The serial version is the reference the
// OpenMP version is tested against.
CosetMinimum coset_minimum_serial(const CompactCoset& cc, const LinearCost& f);
CosetMinimum coset_minimum_parallel(const CompactCoset& cc, const LinearCost& f);

// Objective raw value at every coset index (index order).
std::vector<Int128> coset_objectives_serial(const CompactCoset& cc, const LinearCost& f);
std::vector<Int128> coset_objectives_parallel(const CompactCoset& cc, const LinearCost& f);

}  // namespace grouprelax

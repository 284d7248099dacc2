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
#include <optional>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/group_relaxation.hpp"
#include "grouprelax/int_matrix.hpp"

namespace grouprelax {

// Independent cyclic generators of a subgroup K of the ambient group
// Z_{moduli[0]} x ... x Z_{moduli[d-1]}, so that K = <h_1> + ... + <h_k>
// is a direct sum.
struct KernelBasis {
  std::vector<std::vector<BigInt>> generators;
  std::vector<BigInt> orders;
  std::vector<BigInt> moduli;
  BigInt kernel_order = 1;
  BigInt range_order = 1;

  std::size_t dimension() const { return moduli.size(); }
  std::size_t rank() const { return generators.size(); }
  BigInt max_order() const;
};

struct FeasibleCoset {
  std::vector<BigInt> x_hat;
  KernelBasis basis;
  bool compressed = false;
};

// Kernel of x -> M x (mod row_moduli) over Z_r^cols, r = lcm(row_moduli).
KernelBasis congruence_kernel(const IntMatrix& M, const std::vector<BigInt>& row_moduli);

// A solution of M x = rhs (mod row_moduli) over Z_r^cols, or empty.
std::optional<std::vector<BigInt>> congruence_solve(const IntMatrix& M,
                                                    const std::vector<BigInt>& rhs,
                                                    const std::vector<BigInt>& row_moduli);

// Throws Infeasible when the group relaxation has no solution.
std::vector<BigInt> solve_feasible_point(const GroupRelaxationData& grd);

KernelBasis null_gen_finding(const GroupRelaxationData& grd);

std::vector<BigInt> column_orders(const GroupRelaxationData& grd);

// Cyclic decomposition of the kernel over the compressed domain
// Z_{s_1} x ... x Z_{s_d}, s the column orders.
KernelBasis compress_kernel(const GroupRelaxationData& grd, const KernelBasis& kb);

FeasibleCoset build_feasible_coset(const GroupRelaxationData& grd, bool compress);

// Abold x = 0 (mod R Z^m).
bool in_group_kernel(const GroupRelaxationData& grd, const std::vector<BigInt>& x);

// Additive order of v in the ambient group.
BigInt element_order(const std::vector<BigInt>& v, const std::vector<BigInt>& moduli);

// Streams x_hat + sum n_i h_i over all coefficient vectors in mixed-radix order.
class CosetEnumerator {
 public:
  CosetEnumerator(const FeasibleCoset& fc, const BigInt& cap);
  bool next(std::vector<BigInt>* point);

 private:
  const FeasibleCoset& fc_;
  std::vector<BigInt> coeff_;
  bool done_ = false;
};

std::vector<std::vector<BigInt>> enumerate_coset(const FeasibleCoset& fc, const BigInt& cap);

}  // namespace grouprelax

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

#include <optional>
#include <vector>

#include "grouprelax/bigint.hpp"
#include "grouprelax/int_matrix.hpp"

namespace grouprelax {

struct SNFResult {
  IntMatrix U;
  IntMatrix V;
  IntMatrix Uinv;
  IntMatrix Vinv;
  // min(rows, cols) invariant factors, nonnegative, zeros trailing.
  std::vector<BigInt> D;

  // The rows x cols matrix with D on its diagonal.
  IntMatrix diagonal_matrix() const;
  std::size_t rank() const;
};

// Smith normal form M = U * diag(D) * V with unimodular U, V. The inverses
// are accumulated alongside the elementary operations.
SNFResult snf(const IntMatrix& M);

struct ExtGcd {
  BigInt g;
  BigInt x;
  BigInt y;
};

ExtGcd ext_gcd(const BigInt& a, const BigInt& b);

struct ModSolution {
  BigInt particular;
  BigInt count;
};

// Solves t*y = b (mod r). Empty when gcd(r, t) does not divide b.
std::optional<ModSolution> solve_mod(const BigInt& t, const BigInt& b,
                                     const BigInt& r);

// Modular inverse of a modulo r; requires gcd(a, r) = 1.
BigInt mod_inverse(const BigInt& a, const BigInt& r);

// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& M);

bool is_unimodular(const IntMatrix& M);

// Solves the square nonsingular system M x = rhs over the rationals.
std::vector<Rational> solve_rational(const IntMatrix& M,
                                     const std::vector<Rational>& rhs);

// Solves M^T y = rhs.
std::vector<Rational> solve_rational_transposed(const IntMatrix& M,
                                                const std::vector<Rational>& rhs);

// Exact rank over the rationals.
std::size_t rank(const IntMatrix& M);

}  // namespace grouprelax

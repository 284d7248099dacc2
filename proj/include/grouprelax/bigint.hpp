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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace grouprelax {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Least nonnegative residue of a modulo r (r > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& r) {
  BigInt out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), r.get_mpz_t());
  return out;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt floor_of(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline BigInt ceil_of(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline bool fits_int64(const BigInt& v) {
  return mpz_fits_slong_p(v.get_mpz_t()) != 0 && sizeof(long) == 8;
}

std::int64_t to_int64(const BigInt& v);

// Natural log of a positive integer, accurate for very large values.
double log_big(const BigInt& v);

// Decimal rendering rounded half away from zero to a fixed number of digits.
std::string to_fixed(const Rational& q, int digits);

// Exact decimal when the denominator has only factors 2 and 5, otherwise
// numerator/denominator.
std::string to_exact_string(const Rational& q);

// Parses decimal text such as "-12", "2.5", "1.5E-3" exactly.
// Returns false on malformed text.
bool parse_decimal(const std::string& text, Rational* out);

std::vector<BigInt> to_big(const std::vector<long>& v);

}  // namespace grouprelax

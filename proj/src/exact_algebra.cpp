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
#include "grouprelax/exact_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "grouprelax/errors.hpp"

namespace grouprelax {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInfeasible: return "Infeasible";
    case ErrorKind::kUnbounded: return "Unbounded";
    case ErrorKind::kNotPureILP: return "NotPureILP";
    case ErrorKind::kMalformedInput: return "MalformedMPS";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kDenseLimitExceeded: return "DenseLimitExceeded";
    case ErrorKind::kPatternLimitExceeded: return "PatternLimitExceeded";
    case ErrorKind::kEmptyWidthBand: return "EmptyWidthBand";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kDiagnosticUnavailable: return "DiagnosticUnavailable";
    case ErrorKind::kInternalFault: return "InternalFault";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInfeasible: return 2;
    case ErrorKind::kUnbounded: return 3;
    case ErrorKind::kNotPureILP: return 4;
    case ErrorKind::kCapExceeded:
    case ErrorKind::kDenseLimitExceeded:
    case ErrorKind::kPatternLimitExceeded: return 5;
    default: return 1;
  }
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) {
    fail(ErrorKind::kCapExceeded, "integer " + v.get_str() + " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v.get_si());
}

double log_big(const BigInt& v) {
  check_internal(v > 0, "log of nonpositive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::string to_fixed(const Rational& q, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt num = abs(q.get_num()) * scale * 2 + q.get_den();
  BigInt den = q.get_den() * 2;
  BigInt scaled = floor_div(num, den);
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (q < 0 && scaled != 0) s.insert(0, "-");
  return s;
}

std::string to_exact_string(const Rational& q) {
  BigInt den = q.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return q.get_str();
  int digits = std::max(twos, fives);
  if (digits == 0) return q.get_num().get_str();
  std::string s = to_fixed(q, digits);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

bool parse_decimal(const std::string& text, Rational* out) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < n; ++i) {
    char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return false;
  long exponent = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E' || text[i] == 'd' || text[i] == 'D')) {
    ++i;
    bool exp_negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i >= n) return false;
    long e = 0;
    for (; i < n; ++i) {
      if (text[i] < '0' || text[i] > '9') return false;
      e = e * 10 + (text[i] - '0');
      if (e > 100000) return false;
    }
    exponent = exp_negative ? -e : e;
  }
  if (i != n) return false;
  BigInt mant(digits, 10);
  long shift = exponent - frac_digits;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational value = shift >= 0 ? Rational(mant * ten_pow) : make_rational(mant, ten_pow);
  if (negative) value = -value;
  *out = value;
  return true;
}

std::vector<BigInt> to_big(const std::vector<long>& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    check_internal(r.size() == cols_, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return std::vector<BigInt>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, const std::vector<BigInt>& v) {
  check_internal(v.size() == rows_, "column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = (*this)(i, idx[k]);
  }
  return out;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix out(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(idx[k], j);
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(src, j) != 0) (*this)(dst, j) += q * (*this)(src, j);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, src) != 0) (*this)(i, dst) += q * (*this)(i, src);
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  check_internal(a.cols() == b.rows(), "matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x) {
  check_internal(a.cols() == x.size(), "matrix-vector dimension mismatch");
  std::vector<BigInt> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << "]";
}

IntMatrix SNFResult::diagonal_matrix() const {
  IntMatrix out(U.rows(), V.rows());
  for (std::size_t i = 0; i < D.size(); ++i) out(i, i) = D[i];
  return out;
}

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  for (const BigInt& d : D) r += d != 0 ? 1 : 0;
  return r;
}

namespace {

// Working state for the reduction: S = Uinv * M * Vinv and M = U * S * V.
struct SnfState {
  IntMatrix S, U, Uinv, V, Vinv;

  void row_add(std::size_t dst, std::size_t src, const BigInt& q) {
    S.add_row_multiple(dst, src, q);
    Uinv.add_row_multiple(dst, src, q);
    U.add_col_multiple(src, dst, -q);
  }
  void row_swap(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    Uinv.swap_rows(a, b);
    U.swap_cols(a, b);
  }
  void row_negate(std::size_t i) {
    S.negate_row(i);
    Uinv.negate_row(i);
    U.negate_col(i);
  }
  void col_add(std::size_t dst, std::size_t src, const BigInt& q) {
    S.add_col_multiple(dst, src, q);
    Vinv.add_col_multiple(dst, src, q);
    V.add_row_multiple(src, dst, -q);
  }
  void col_swap(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    Vinv.swap_cols(a, b);
    V.swap_rows(a, b);
  }
};

}  // namespace

SNFResult snf(const IntMatrix& M) {
  check_internal(!M.empty(), "snf of an empty matrix");
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  SnfState st{M, IntMatrix::identity(m), IntMatrix::identity(m),
              IntMatrix::identity(n), IntMatrix::identity(n)};
  const std::size_t k = std::min(m, n);
  for (std::size_t t = 0; t < k; ++t) {
    bool done = false;
    while (!done) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          const BigInt& v = st.S(i, j);
          if (v == 0) continue;
          if (pi == m || mpz_cmpabs(v.get_mpz_t(), st.S(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) {
        SNFResult out{std::move(st.U), std::move(st.V), std::move(st.Uinv),
                      std::move(st.Vinv), std::vector<BigInt>(k)};
        for (std::size_t i = 0; i < t; ++i) out.D[i] = st.S(i, i);
        return out;
      }
      st.row_swap(t, pi);
      st.col_swap(t, pj);
      const BigInt pivot = st.S(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (st.S(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), st.S(i, t).get_mpz_t(), pivot.get_mpz_t());
        st.row_add(i, t, -q);
        if (st.S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (st.S(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), st.S(t, j).get_mpz_t(), pivot.get_mpz_t());
        st.col_add(j, t, -q);
        if (st.S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      done = true;
      for (std::size_t i = t + 1; i < m && done; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(st.S(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            st.row_add(t, i, BigInt(1));
            done = false;
            break;
          }
        }
      }
    }
    if (st.S(t, t) < 0) st.row_negate(t);
  }
  SNFResult out{std::move(st.U), std::move(st.V), std::move(st.Uinv),
                std::move(st.Vinv), std::vector<BigInt>(k)};
  for (std::size_t i = 0; i < k; ++i) out.D[i] = st.S(i, i);
  return out;
}

ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return ExtGcd{old_r, old_s, old_t};
}

BigInt mod_inverse(const BigInt& a, const BigInt& r) {
  ExtGcd e = ext_gcd(mod_floor(a, r), r);
  check_internal(e.g == 1, "mod_inverse of a non-unit");
  return mod_floor(e.x, r);
}

std::optional<ModSolution> solve_mod(const BigInt& t, const BigInt& b, const BigInt& r) {
  if (r < 1) fail(ErrorKind::kInvalidArgument, "solve_mod requires r >= 1");
  BigInt tr = mod_floor(t, r);
  BigInt br = mod_floor(b, r);
  BigInt g = gcd(tr, r);
  if (!mpz_divisible_p(br.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  BigInt r2 = r / g;
  if (r2 == 1) return ModSolution{BigInt(0), g};
  BigInt y = mod_floor((br / g) * mod_inverse(tr / g, r2), r2);
  return ModSolution{y, g};
}

BigInt determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) fail(ErrorKind::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return BigInt(1);
  IntMatrix a = M;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return BigInt(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? BigInt(a(n - 1, n - 1)) : BigInt(-a(n - 1, n - 1));
}

bool is_unimodular(const IntMatrix& M) {
  BigInt d = determinant(M);
  return d == 1 || d == -1;
}

namespace {

std::vector<Rational> gauss_jordan(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) fail(ErrorKind::kInternalFault, "singular system");
    std::swap(a[p], a[k]);
    std::swap(rhs[p], rhs[k]);
    Rational inv = 1 / a[k][k];
    for (std::size_t j = k; j < n; ++j) a[k][j] *= inv;
    rhs[k] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (std::size_t j = k; j < n; ++j) {
        if (a[k][j] != 0) a[i][j] -= f * a[k][j];
      }
      rhs[i] -= f * rhs[k];
    }
  }
  return rhs;
}

}  // namespace

std::vector<Rational> solve_rational(const IntMatrix& M, const std::vector<Rational>& rhs) {
  check_internal(M.rows() == M.cols() && M.rows() == rhs.size(), "solve_rational dimensions");
  std::vector<std::vector<Rational>> a(M.rows(), std::vector<Rational>(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] = M(i, j);
  }
  return gauss_jordan(std::move(a), rhs);
}

std::vector<Rational> solve_rational_transposed(const IntMatrix& M, const std::vector<Rational>& rhs) {
  return solve_rational(M.transpose(), rhs);
}

std::size_t rank(const IntMatrix& M) {
  if (M.empty()) return 0;
  IntMatrix a = M;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t p = r;
    while (p < m && a(p, j) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, j) == 0) continue;
      BigInt f = a(i, j);
      BigInt piv = a(r, j);
      for (std::size_t c = j; c < n; ++c) a(i, c) = a(i, c) * piv - a(r, c) * f;
      BigInt g = 0;
      for (std::size_t c = j; c < n; ++c) g = gcd(g, a(i, c));
      if (g > 1) {
        for (std::size_t c = j; c < n; ++c) mpz_divexact(a(i, c).get_mpz_t(), a(i, c).get_mpz_t(), g.get_mpz_t());
      }
    }
    ++r;
  }
  return r;
}

}  // namespace grouprelax

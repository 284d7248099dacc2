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
#include "grouprelax/coset.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

#include "grouprelax/errors.hpp"

namespace grouprelax {

CompactCoset CompactCoset::from(const FeasibleCoset& fc) {
  CompactCoset cc;
  const KernelBasis& kb = fc.basis;
  if (!mpz_fits_ulong_p(kb.kernel_order.get_mpz_t())) {
    fail(ErrorKind::kCapExceeded, "coset size exceeds 64 bits");
  }
  cc.size = kb.kernel_order.get_ui();
  for (const BigInt& m : kb.moduli) {
    if (m > BigInt(1) << 62) fail(ErrorKind::kCapExceeded, "modulus exceeds 62 bits");
    cc.moduli.push_back(to_int64(m));
  }
  for (const BigInt& v : fc.x_hat) cc.x_hat.push_back(to_int64(v));
  for (const BigInt& o : kb.orders) cc.orders.push_back(to_int64(o));
  for (const auto& h : kb.generators) {
    std::vector<std::int64_t> g;
    for (const BigInt& v : h) g.push_back(to_int64(v));
    cc.generators.push_back(std::move(g));
  }
  return cc;
}

std::int64_t CompactCoset::max_order() const {
  std::int64_t u = 1;
  for (std::int64_t o : orders) u = std::max(u, o);
  return u;
}

void CompactCoset::add(std::vector<std::int64_t>& x, const std::vector<std::int64_t>& h, std::int64_t a) const {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (h[j] == 0) continue;
    Int128 v = (static_cast<Int128>(x[j]) + static_cast<Int128>(a) * h[j]) % moduli[j];
    if (v < 0) v += moduli[j];
    x[j] = static_cast<std::int64_t>(v);
  }
}

std::vector<std::int64_t> CompactCoset::coefficients(std::uint64_t index) const {
  std::vector<std::int64_t> n(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    n[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(orders[i]));
    index /= static_cast<std::uint64_t>(orders[i]);
  }
  return n;
}

std::uint64_t CompactCoset::index_of(const std::vector<std::int64_t>& coeff) const {
  std::uint64_t idx = 0;
  for (std::size_t i = orders.size(); i-- > 0;) {
    std::int64_t c = coeff[i] % orders[i];
    if (c < 0) c += orders[i];
    idx = idx * static_cast<std::uint64_t>(orders[i]) + static_cast<std::uint64_t>(c);
  }
  return idx;
}

std::vector<std::int64_t> CompactCoset::point(std::uint64_t index) const {
  std::vector<std::int64_t> x = x_hat;
  std::vector<std::int64_t> n = coefficients(index);
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] != 0) add(x, generators[i], n[i]);
  }
  return x;
}

LinearCost LinearCost::from_rational(const std::vector<Rational>& c, const Rational& shift) {
  LinearCost f;
  f.shift = shift;
  for (const Rational& q : c) f.denominator = lcm(f.denominator, q.get_den());
  for (const Rational& q : c) {
    BigInt w = q.get_num() * (f.denominator / q.get_den());
    f.weights.push_back(to_int64(w));
  }
  return f;
}

LinearCost LinearCost::from(const GroupRelaxationData& grd) {
  return from_rational(grd.cbold, grd.shift);
}

Int128 LinearCost::raw(const std::vector<std::int64_t>& x) const {
  Int128 s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<Int128>(weights[j]) * x[j];
  return s;
}

Rational int128_to_rational(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  BigInt out = (hi << 64) + lo;
  return Rational(neg ? BigInt(-out) : out);
}

Rational LinearCost::value(Int128 raw) const {
  return shift + int128_to_rational(raw) / Rational(denominator);
}

double LinearCost::scale() const { return 1.0 / denominator.get_d(); }

double LinearCost::approx(Int128 raw) const {
  return shift.get_d() + static_cast<double>(raw) * scale();
}

namespace {

std::uint64_t chunk_bound(std::uint64_t size, int part, int parts) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(size) * static_cast<unsigned>(part) /
                                    static_cast<unsigned>(parts));
}

// Visits indices [lo, hi) incrementally: moving digit i adds generator i.
template <typename Visit>
void sweep(const CompactCoset& cc, const LinearCost& f, std::uint64_t lo, std::uint64_t hi, Visit visit) {
  if (lo >= hi) return;
  std::vector<std::int64_t> n = cc.coefficients(lo);
  std::vector<std::int64_t> x = cc.point(lo);
  Int128 raw = f.raw(x);
  for (std::uint64_t idx = lo;;) {
    visit(idx, raw);
    if (++idx == hi) break;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const auto& h = cc.generators[i];
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (h[j] == 0) continue;
        std::int64_t v = x[j] + h[j];
        if (v >= cc.moduli[j]) v -= cc.moduli[j];
        raw += static_cast<Int128>(f.weights[j]) * (v - x[j]);
        x[j] = v;
      }
      if (++n[i] < cc.orders[i]) break;
      n[i] = 0;
    }
  }
}

}  // namespace

CosetMinimum coset_minimum_serial(const CompactCoset& cc, const LinearCost& f) {
  CosetMinimum out;
  bool first = true;
  sweep(cc, f, 0, cc.size, [&](std::uint64_t idx, Int128 raw) {
    if (first || raw < out.best_raw) {
      first = false;
      out.best_raw = raw;
      out.argmin.clear();
    }
    if (raw == out.best_raw) out.argmin.push_back(idx);
  });
  return out;
}

CosetMinimum coset_minimum_parallel(const CompactCoset& cc, const LinearCost& f) {
  const int threads = omp_get_max_threads();
  std::vector<CosetMinimum> local(static_cast<std::size_t>(threads));
  std::vector<char> seen(static_cast<std::size_t>(threads), 0);
#pragma omp parallel num_threads(threads)
  {
    const int tid = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const std::uint64_t lo = chunk_bound(cc.size, tid, nt);
    const std::uint64_t hi = chunk_bound(cc.size, tid + 1, nt);
    CosetMinimum& mine = local[static_cast<std::size_t>(tid)];
    char& any = seen[static_cast<std::size_t>(tid)];
    sweep(cc, f, lo, hi, [&](std::uint64_t idx, Int128 raw) {
      if (!any || raw < mine.best_raw) {
        any = 1;
        mine.best_raw = raw;
        mine.argmin.clear();
      }
      if (raw == mine.best_raw) mine.argmin.push_back(idx);
    });
  }
  CosetMinimum out;
  bool first = true;
  for (std::size_t t = 0; t < local.size(); ++t) {
    if (!seen[t]) continue;
    if (first || local[t].best_raw < out.best_raw) {
      first = false;
      out.best_raw = local[t].best_raw;
      out.argmin.clear();
    }
    if (local[t].best_raw == out.best_raw) {
      out.argmin.insert(out.argmin.end(), local[t].argmin.begin(), local[t].argmin.end());
    }
  }
  std::sort(out.argmin.begin(), out.argmin.end());
  return out;
}

std::vector<Int128> coset_objectives_serial(const CompactCoset& cc, const LinearCost& f) {
  std::vector<Int128> out(cc.size);
  sweep(cc, f, 0, cc.size, [&](std::uint64_t idx, Int128 raw) { out[idx] = raw; });
  return out;
}

std::vector<Int128> coset_objectives_parallel(const CompactCoset& cc, const LinearCost& f) {
  std::vector<Int128> out(cc.size);
#pragma omp parallel
  {
    const int tid = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const std::uint64_t lo = chunk_bound(cc.size, tid, nt);
    const std::uint64_t hi = chunk_bound(cc.size, tid + 1, nt);
    sweep(cc, f, lo, hi, [&](std::uint64_t idx, Int128 raw) { out[idx] = raw; });
  }
  return out;
}

}  // namespace grouprelax

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
#include "grouprelax/search.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <unordered_map>

#include "grouprelax/errors.hpp"
#include "grouprelax/rng.hpp"
#include "grouprelax/walks.hpp"

namespace grouprelax {

SearchMethod parse_method(const std::string& name) {
  if (name == "mcs") return SearchMethod::kMcs;
  if (name == "mcs-expander") return SearchMethod::kMcsExpander;
  if (name == "mcs-metropolis") return SearchMethod::kMcsMetropolis;
  if (name == "dijkstra") return SearchMethod::kDijkstra;
  if (name == "brute") return SearchMethod::kBrute;
  fail(ErrorKind::kInvalidArgument, "unknown method '" + name + "'");
}

const char* method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::kMcs: return "mcs";
    case SearchMethod::kMcsExpander: return "mcs-expander";
    case SearchMethod::kMcsMetropolis: return "mcs-metropolis";
    case SearchMethod::kDijkstra: return "dijkstra";
    case SearchMethod::kBrute: return "brute";
  }
  return "unknown";
}

std::uint64_t default_mix_steps(const CompactCoset& cc, double epsilon) {
  if (cc.size <= 1) return 0;
  const double u = static_cast<double>(cc.max_order());
  const double t = static_cast<double>(cc.rank()) * u * u * std::log(static_cast<double>(cc.size) / epsilon);
  return static_cast<std::uint64_t>(std::ceil(t));
}

std::uint64_t expander_mix_steps(const CompactCoset& cc, double epsilon) {
  if (cc.size <= 1) return 0;
  return static_cast<std::uint64_t>(std::ceil(std::log(static_cast<double>(cc.size) / epsilon) / 0.1));
}

std::uint64_t samples_for_confidence(const BigInt& k_order, const BigInt& k_star, double epsilon) {
  check_internal(k_star >= 1 && k_order >= k_star, "invalid coset counts");
  const double ratio = k_order.get_d() / k_star.get_d();
  return static_cast<std::uint64_t>(std::ceil(2.0 * ratio * std::log(1.0 / epsilon)));
}

namespace {

std::vector<BigInt> to_big_vec(const std::vector<std::int64_t>& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (std::int64_t x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

struct ChainOutcome {
  std::vector<std::int64_t> best;
  Int128 best_raw = 0;
  std::vector<std::pair<std::uint64_t, Int128>> trace;
  std::uint64_t samples = 0;
};

ChainOutcome run_chain(const CompactCoset& cc, const LinearCost& f, const CayleyWalkSpec& walk,
                       const SearchConfig& cfg, std::uint64_t t_mix, std::uint64_t seed) {
  Rng rng(seed);
  ChainOutcome out;
  std::vector<std::int64_t> state = cc.x_hat;
  Int128 raw = f.raw(state);
  out.best = state;
  out.best_raw = raw;
  out.trace.emplace_back(0, raw);
  if (cfg.stop_at && f.value(raw) <= *cfg.stop_at) return out;
  const bool metropolis = cfg.method == SearchMethod::kMcsMetropolis;
  for (std::uint64_t i = 1; i <= cfg.max_samples; ++i) {
    for (std::uint64_t s = 0; s < t_mix; ++s) {
      if (metropolis) {
        metropolis_step(state, raw, cfg.beta, walk, f, rng);
      } else {
        const Move mv = draw_move(walk, rng);
        if (mv.a == 0) continue;
        const auto& h = walk.generators[mv.generator];
        for (std::size_t j = 0; j < state.size(); ++j) {
          if (h[j] == 0) continue;
          std::int64_t v = mv.a > 0 ? state[j] + h[j] : state[j] - h[j];
          if (v >= cc.moduli[j]) v -= cc.moduli[j];
          if (v < 0) v += cc.moduli[j];
          raw += static_cast<Int128>(f.weights[j]) * (v - state[j]);
          state[j] = v;
        }
      }
    }
    if (raw <= out.best_raw) {
      const bool improved = raw < out.best_raw;
      if (improved) out.trace.emplace_back(i, raw);
      out.best_raw = raw;
      out.best = state;
      if (improved && cfg.stop_at && f.value(raw) <= *cfg.stop_at) {
        out.samples = i;
        return out;
      }
    }
  }
  out.samples = cfg.max_samples;
  return out;
}

}  // namespace

SearchResult markov_chain_search(const GroupRelaxationData& grd, const FeasibleCoset& fc, const SearchConfig& cfg) {
  if (cfg.max_samples < 1) fail(ErrorKind::kInvalidArgument, "max_samples must be at least 1");
  if (!(cfg.epsilon > 0 && cfg.epsilon < 1)) fail(ErrorKind::kInvalidArgument, "epsilon must lie in (0, 1)");
  const CompactCoset cc = CompactCoset::from(fc);
  const LinearCost f = LinearCost::from(grd);
  SearchResult res;
  if (cc.size <= 1) {
    res.best = lift_to_ilp(grd, fc.x_hat);
    res.certified_optimal = true;
    res.trace.push_back({0, res.best.objective});
    return res;
  }
  CayleyWalkSpec walk;
  std::uint64_t t_mix = 0;
  if (cfg.method == SearchMethod::kMcsExpander) {
    Rng gen_rng(Rng::derive(cfg.seed, 0xE8A4D3ULL));
    walk = expander_generation(cc, cfg.expander_c, gen_rng);
    t_mix = expander_mix_steps(cc, cfg.epsilon);
  } else {
    walk = CayleyWalkSpec::product_of_cycles(cc);
    t_mix = default_mix_steps(cc, cfg.epsilon);
  }
  if (cfg.mix_steps) t_mix = *cfg.mix_steps;
  const unsigned chains = std::max(1u, cfg.chains);
  std::vector<ChainOutcome> outcomes(chains);
  const std::int64_t nchains = static_cast<std::int64_t>(chains);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < nchains; ++c) {
    const std::uint64_t seed = chains == 1 ? cfg.seed : Rng::derive(cfg.seed, static_cast<std::uint64_t>(c));
    outcomes[static_cast<std::size_t>(c)] = run_chain(cc, f, walk, cfg, t_mix, seed);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < outcomes.size(); ++c) {
    if (outcomes[c].best_raw < outcomes[best].best_raw) best = c;
  }
  res.best = lift_to_ilp(grd, to_big_vec(outcomes[best].best));
  for (const auto& [it, raw] : outcomes[best].trace) res.trace.push_back({it, f.value(raw)});
  for (const auto& o : outcomes) res.samples_used += o.samples;
  res.mix_steps = t_mix;
  check_internal(res.best.objective >= grd.shift, "search objective below OPT_LP");
  return res;
}

namespace {

struct DijkstraNode {
  std::vector<std::int64_t> residue;
  Int128 dist;
  std::size_t pred;
  std::size_t pred_col;
  bool settled;
};

struct PackedHash {
  std::size_t operator()(unsigned __int128 k) const {
    const std::uint64_t lo = static_cast<std::uint64_t>(k);
    const std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>()(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
  }
};

template <typename Index>
SearchResult dijkstra_core(const GroupRelaxationData& grd, const std::vector<std::size_t>& rows,
                           const std::vector<std::int64_t>& mod, Index& index,
                           const std::function<typename Index::key_type(const std::vector<std::int64_t>&)>& key) {
  const LinearCost f = LinearCost::from(grd);
  const std::size_t d = grd.d();
  std::vector<std::vector<std::int64_t>> delta(d, std::vector<std::int64_t>(rows.size()));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < rows.size(); ++k) delta[j][k] = to_int64(grd.Abold(rows[k], j));
  }
  std::vector<std::int64_t> target(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) target[k] = to_int64(grd.bbold[rows[k]]);
  const auto target_key = key(target);

  std::vector<DijkstraNode> nodes;
  using Entry = std::pair<Int128, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  nodes.push_back({std::vector<std::int64_t>(rows.size(), 0), 0, SIZE_MAX, SIZE_MAX, false});
  index.emplace(key(nodes[0].residue), 0);
  pq.emplace(0, 0);
  SearchResult res;
  std::size_t found = SIZE_MAX;
  while (!pq.empty()) {
    auto [dist, u] = pq.top();
    pq.pop();
    if (nodes[u].settled || dist != nodes[u].dist) continue;
    nodes[u].settled = true;
    ++res.visited;
    if (key(nodes[u].residue) == target_key) {
      found = u;
      break;
    }
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<std::int64_t> y = nodes[u].residue;
      for (std::size_t k = 0; k < y.size(); ++k) {
        y[k] += delta[j][k];
        if (y[k] >= mod[k]) y[k] -= mod[k];
      }
      const Int128 nd = dist + f.weights[j];
      auto ky = key(y);
      auto it = index.find(ky);
      if (it == index.end()) {
        const std::size_t id = nodes.size();
        nodes.push_back({std::move(y), nd, u, j, false});
        index.emplace(std::move(ky), id);
        pq.emplace(nd, id);
      } else if (!nodes[it->second].settled && nd < nodes[it->second].dist) {
        nodes[it->second].dist = nd;
        nodes[it->second].pred = u;
        nodes[it->second].pred_col = j;
        pq.emplace(nd, it->second);
      }
    }
  }
  if (found == SIZE_MAX) fail(ErrorKind::kInfeasible, "group relaxation is infeasible: target residue unreachable");
  std::vector<BigInt> x(d, BigInt(0));
  for (std::size_t v = found; nodes[v].pred != SIZE_MAX; v = nodes[v].pred) x[nodes[v].pred_col] += 1;
  if (d > 0) {
    std::vector<BigInt> s = column_orders(grd);
    for (std::size_t j = 0; j < d; ++j) x[j] = mod_floor(x[j], s[j]);
  }
  check_internal(satisfies_group_constraint(grd, x), "shortest path does not satisfy the group constraint");
  res.best = lift_to_ilp(grd, x);
  check_internal(res.best.objective == f.value(nodes[found].dist), "path weight disagrees with objective");
  res.certified_optimal = true;
  res.trace.push_back({0, res.best.objective});
  return res;
}

}  // namespace

SearchResult gomory_shortest_path(const GroupRelaxationData& grd) {
  std::vector<std::size_t> rows;
  std::vector<std::int64_t> mod;
  BigInt radix = 1;
  for (std::size_t i = 0; i < grd.m(); ++i) {
    if (grd.r[i] == 1) continue;
    rows.push_back(i);
    mod.push_back(to_int64(grd.r[i]));
    radix *= grd.r[i];
  }
  for (const Rational& c : grd.cbold) check_internal(c >= 0, "negative group cost");
  if (radix < (BigInt(1) << 127)) {
    std::unordered_map<unsigned __int128, std::size_t, PackedHash> index;
    auto key = [&mod](const std::vector<std::int64_t>& y) {
      unsigned __int128 k = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        k = k * static_cast<unsigned __int128>(mod[i]) + static_cast<unsigned __int128>(y[i]);
      }
      return k;
    };
    return dijkstra_core(grd, rows, mod, index, std::function<unsigned __int128(const std::vector<std::int64_t>&)>(key));
  }
  std::map<std::vector<std::int64_t>, std::size_t> index;
  auto key = [](const std::vector<std::int64_t>& y) { return y; };
  return dijkstra_core(grd, rows, mod, index,
                       std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&)>(key));
}

SearchResult brute_force_group(const GroupRelaxationData& grd, const FeasibleCoset& fc, const BigInt& cap) {
  if (fc.basis.kernel_order > cap) {
    fail(ErrorKind::kCapExceeded, "coset of size " + fc.basis.kernel_order.get_str() + " exceeds cap " + cap.get_str());
  }
  const CompactCoset cc = CompactCoset::from(fc);
  const LinearCost f = LinearCost::from(grd);
  CosetMinimum cm = coset_minimum_parallel(cc, f);
  SearchResult res;
  res.best = lift_to_ilp(grd, to_big_vec(cc.point(cm.argmin.front())));
  check_internal(res.best.objective == f.value(cm.best_raw), "enumerated objective mismatch");
  res.argmin = std::move(cm.argmin);
  res.samples_used = cc.size;
  res.visited = cc.size;
  res.certified_optimal = true;
  res.trace.push_back({0, res.best.objective});
  return res;
}

SearchResult solve_group(const GroupRelaxationData& grd, const FeasibleCoset& fc, const SearchConfig& cfg) {
  switch (cfg.method) {
    case SearchMethod::kDijkstra: return gomory_shortest_path(grd);
    case SearchMethod::kBrute: return brute_force_group(grd, fc, cfg.cap);
    default: return markov_chain_search(grd, fc, cfg);
  }
}

namespace {

struct BoxSearch {
  std::size_t m = 0, n = 0;
  std::vector<std::vector<std::int64_t>> cols;  // cols[j][i]
  std::vector<std::int64_t> b;
  std::vector<RowSense> sense;
  std::vector<std::vector<std::int64_t>> suffix_min, suffix_max;  // [j][i]: contribution of vars j..n-1
  std::vector<Rational> c;
  std::int64_t M = 0;

  BoxSearch(const ILPInstance& inst, std::int64_t box) : m(inst.num_rows()), n(inst.num_vars()), M(box) {
    cols.assign(n, std::vector<std::int64_t>(m));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) cols[j][i] = to_int64(inst.A(i, j));
    }
    for (std::size_t i = 0; i < m; ++i) b.push_back(to_int64(inst.b[i]));
    sense = inst.senses;
    c = inst.c;
    suffix_min.assign(n + 1, std::vector<std::int64_t>(m, 0));
    suffix_max.assign(n + 1, std::vector<std::int64_t>(m, 0));
    for (std::size_t j = n; j-- > 0;) {
      for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t v = cols[j][i] * M;
        suffix_min[j][i] = suffix_min[j + 1][i] + std::min<std::int64_t>(0, v);
        suffix_max[j][i] = suffix_max[j + 1][i] + std::max<std::int64_t>(0, v);
      }
    }
  }

  bool viable(std::size_t j, const std::vector<std::int64_t>& partial) const {
    for (std::size_t i = 0; i < m; ++i) {
      const std::int64_t lo = partial[i] + suffix_min[j][i];
      const std::int64_t hi = partial[i] + suffix_max[j][i];
      switch (sense[i]) {
        case RowSense::kEqual:
          if (b[i] < lo || b[i] > hi) return false;
          break;
        case RowSense::kLessEqual:
          if (lo > b[i]) return false;
          break;
        case RowSense::kGreaterEqual:
          if (hi < b[i]) return false;
          break;
      }
    }
    return true;
  }

  void dfs(std::size_t j, std::vector<std::int64_t>& partial, std::vector<std::int64_t>& x, const Rational& cost,
           bool& found, Rational& best, std::vector<std::int64_t>& best_x) const {
    if (!viable(j, partial)) return;
    if (j == n) {
      if (!found || cost < best) {
        found = true;
        best = cost;
        best_x = x;
      }
      return;
    }
    for (std::int64_t v = 0; v <= M; ++v) {
      for (std::size_t i = 0; i < m; ++i) partial[i] += cols[j][i] * v;
      x[j] = v;
      dfs(j + 1, partial, x, cost + c[j] * Rational(static_cast<long>(v)), found, best, best_x);
      for (std::size_t i = 0; i < m; ++i) partial[i] -= cols[j][i] * v;
    }
    x[j] = 0;
  }
};

void check_box_cap(const ILPInstance& inst, std::int64_t M, const BigInt& cap) {
  if (M < 0) fail(ErrorKind::kInvalidArgument, "box bound must be nonnegative");
  BigInt size;
  mpz_ui_pow_ui(size.get_mpz_t(), static_cast<unsigned long>(M + 1), inst.num_vars());
  if (size > cap) fail(ErrorKind::kCapExceeded, "box of size " + size.get_str() + " exceeds cap " + cap.get_str());
}

IlpOptimum finish(const ILPInstance& inst, bool found, const Rational& best, const std::vector<std::int64_t>& x) {
  if (!found) fail(ErrorKind::kInfeasible, "no feasible point in the box");
  IlpOptimum out;
  out.value = best + inst.obj_offset;
  out.x = to_big_vec(x);
  return out;
}

}  // namespace

IlpOptimum brute_force_ilp_serial(const ILPInstance& inst, std::int64_t M, const BigInt& cap) {
  inst.validate();
  check_box_cap(inst, M, cap);
  BoxSearch bs(inst, M);
  std::vector<std::int64_t> partial(bs.m, 0), x(bs.n, 0), best_x;
  bool found = false;
  Rational best;
  bs.dfs(0, partial, x, Rational(0), found, best, best_x);
  return finish(inst, found, best, best_x);
}

IlpOptimum brute_force_ilp(const ILPInstance& inst, std::int64_t M, const BigInt& cap) {
  inst.validate();
  check_box_cap(inst, M, cap);
  BoxSearch bs(inst, M);
  if (bs.n == 0) return brute_force_ilp_serial(inst, M, cap);
  // Split on the first variable; merge keeps the lowest value and, on ties,
  // the lexicographically first point so results match the serial scan.
  const std::int64_t branches = M + 1;
  std::vector<char> found(static_cast<std::size_t>(branches), 0);
  std::vector<Rational> best(static_cast<std::size_t>(branches));
  std::vector<std::vector<std::int64_t>> best_x(static_cast<std::size_t>(branches));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 0; v < branches; ++v) {
    std::vector<std::int64_t> partial(bs.m, 0), x(bs.n, 0);
    for (std::size_t i = 0; i < bs.m; ++i) partial[i] = bs.cols[0][i] * v;
    x[0] = v;
    bool f = false;
    Rational b;
    std::vector<std::int64_t> bx;
    if (bs.viable(0, std::vector<std::int64_t>(bs.m, 0))) {
      bs.dfs(1, partial, x, bs.c[0] * Rational(static_cast<long>(v)), f, b, bx);
    }
    found[static_cast<std::size_t>(v)] = f ? 1 : 0;
    best[static_cast<std::size_t>(v)] = b;
    best_x[static_cast<std::size_t>(v)] = std::move(bx);
  }
  bool any = false;
  Rational top;
  std::vector<std::int64_t> top_x;
  for (std::size_t v = 0; v < found.size(); ++v) {
    if (!found[v]) continue;
    if (!any || best[v] < top) {
      any = true;
      top = best[v];
      top_x = best_x[v];
    }
  }
  return finish(inst, any, top, top_x);
}

namespace {

struct BnbState {
  const ILPInstance& root;
  std::uint64_t node_limit;
  std::uint64_t nodes = 0;
  bool limit_hit = false;
  bool have = false;
  Rational incumbent;
  std::vector<BigInt> incumbent_x;
  BigInt cost_den = 1;
  bool integral_costs = true;
};

// Node LP: the root rows plus one row for every active variable bound.
ILPInstance node_instance(const ILPInstance& root, const std::vector<BigInt>& lo,
                          const std::vector<std::optional<BigInt>>& hi) {
  const std::size_t n = root.num_vars();
  std::size_t extra = 0;
  for (std::size_t j = 0; j < n; ++j) extra += (lo[j] > 0 ? 1 : 0) + (hi[j] ? 1 : 0);
  ILPInstance next = root;
  IntMatrix A(root.num_rows() + extra, n);
  for (std::size_t i = 0; i < root.num_rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = root.A(i, j);
  }
  std::size_t r = root.num_rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (lo[j] > 0) {
      A(r++, j) = 1;
      next.b.push_back(lo[j]);
      next.senses.push_back(RowSense::kGreaterEqual);
    }
    if (hi[j]) {
      A(r++, j) = 1;
      next.b.push_back(*hi[j]);
      next.senses.push_back(RowSense::kLessEqual);
    }
  }
  next.A = std::move(A);
  return next;
}

struct BnbNode {
  Rational bound;
  std::uint64_t order;
  std::vector<BigInt> lo;
  std::vector<std::optional<BigInt>> hi;
  BasisSolution lp;
};

struct BnbNodeAfter {
  bool operator()(const BnbNode& a, const BnbNode& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.order > b.order;
  }
};

// Best-first search on the LP bound.
void bnb(BnbState& st) {
  const std::size_t n = st.root.num_vars();
  std::priority_queue<BnbNode, std::vector<BnbNode>, BnbNodeAfter> open;
  std::uint64_t order = 0;
  auto push = [&](std::vector<BigInt> lo, std::vector<std::optional<BigInt>> hi) {
    if (++st.nodes > st.node_limit) {
      st.limit_hit = true;
      return;
    }
    BasisSolution bs;
    try {
      bs = solve_lp_exact(to_standard_form(node_instance(st.root, lo, hi)));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInfeasible) return;
      throw;
    }
    Rational bound = bs.opt_lp;
    open.push(BnbNode{bound, order++, std::move(lo), std::move(hi), std::move(bs)});
  };
  push(std::vector<BigInt>(n, BigInt(0)), std::vector<std::optional<BigInt>>(n));
  while (!open.empty() && !st.limit_hit) {
    BnbNode node = open.top();
    open.pop();
    if (st.have) {
      if (st.integral_costs) {
        if (ceil_of(node.bound * st.cost_den) >= floor_of(st.incumbent * st.cost_den)) break;
      } else if (node.bound >= st.incumbent) {
        break;
      }
    }
    std::size_t branch = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (node.lp.x_lp[j].get_den() != 1) {
        branch = j;
        break;
      }
    }
    if (branch == n) {
      if (!st.have || node.bound < st.incumbent) {
        st.have = true;
        st.incumbent = node.bound;
        st.incumbent_x.clear();
        for (std::size_t j = 0; j < n; ++j) st.incumbent_x.push_back(node.lp.x_lp[j].get_num());
      }
      continue;
    }
    const BigInt down = floor_of(node.lp.x_lp[branch]);
    auto hi = node.hi;
    hi[branch] = down;
    push(node.lo, std::move(hi));
    auto lo = node.lo;
    lo[branch] = down + 1;
    push(std::move(lo), node.hi);
  }
}

}  // namespace

std::optional<IlpOptimum> branch_and_bound_ilp(const ILPInstance& inst, std::uint64_t node_limit) {
  inst.validate();
  ILPInstance root = inst;
  root.row_names.clear();
  root.obj_offset = 0;
  BnbState st{root, node_limit, 0, false, false, Rational(0), {}, BigInt(1), true};
  for (const Rational& q : inst.c) st.cost_den = lcm(st.cost_den, q.get_den());
  // The root LP decides infeasibility and unboundedness.
  solve_lp_exact(to_standard_form(inst));
  bnb(st);
  if (st.limit_hit) return std::nullopt;
  if (!st.have) fail(ErrorKind::kInfeasible, "integer program is infeasible");
  IlpOptimum out;
  out.value = st.incumbent + inst.obj_offset;
  out.x = st.incumbent_x;
  return out;
}

}  // namespace grouprelax

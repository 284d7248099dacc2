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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "grouprelax/errors.hpp"
#include "grouprelax/generators.hpp"
#include "grouprelax/mps.hpp"
#include "grouprelax/pipeline.hpp"
#include "grouprelax/report.hpp"
#include "test_support.hpp"

using namespace grouprelax;
using namespace grouprelax::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn, std::string* message = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInternalFault;
}

Rational q(const char* s) {
  Rational v(s);
  v.canonicalize();
  return v;
}

void check_same(const ILPInstance& a, const ILPInstance& b) {
  CHECK(a.name == b.name);
  CHECK(a.A == b.A);
  CHECK(a.b == b.b);
  CHECK(a.c == b.c);
  CHECK(a.senses == b.senses);
  CHECK(a.var_names == b.var_names);
  CHECK(a.row_names == b.row_names);
  CHECK(a.obj_offset == b.obj_offset);
}

const char* kMinimal =
    "NAME tiny\n"
    "ROWS\n"
    " N obj\n"
    " L r1\n"
    " E r2\n"
    "COLUMNS\n"
    "    MARKER 'MARKER' 'INTORG'\n"
    "    x1 obj 1\n"
    "    x1 r1 2\n"
    "    x1 r2 1\n"
    "    x2 obj 3\n"
    "    x2 r1 1\n"
    "    x2 r2 -1\n"
    "    MARKER 'MARKER' 'INTEND'\n"
    "RHS\n"
    "    RHS r1 8\n"
    "    RHS r2 1\n"
    "BOUNDS\n"
    " PL BND x1\n"
    " PL BND x2\n"
    "ENDATA\n";

std::string with_columns(const std::string& columns, const std::string& tail = "RHS\n    RHS r1 4\nENDATA\n") {
  return "NAME t\nROWS\n N obj\n E r1\nCOLUMNS\n    MARKER 'MARKER' 'INTORG'\n" + columns +
         "    MARKER 'MARKER' 'INTEND'\n" + tail;
}

}  // namespace

TEST_CASE("minimal MPS round-trips through the writer") {
  ILPInstance inst = parse_mps(kMinimal);
  CHECK(inst.name == "tiny");
  CHECK(inst.A == IntMatrix{{2, 1}, {1, -1}});
  CHECK(inst.b == to_big({8, 1}));
  CHECK(inst.senses == std::vector<RowSense>{RowSense::kLessEqual, RowSense::kEqual});
  CHECK(inst.c == std::vector<Rational>{1, 3});
  CHECK(normalize_whitespace(emit_mps(inst)) == normalize_whitespace(kMinimal));
  check_same(parse_mps(emit_mps(inst)), inst);
}

TEST_CASE("generated instances survive parse after emit") {
  std::vector<ILPInstance> cases{planted(2, 3, 1, 0).ilp, planted(3, 2, 2, 5, UnimodularStyle::kRandomLowerUnit).ilp,
                                 cutgen(CutStockSpec{3, 10, 0.2, 0.5, 2, 4, kDefaultPatternCap})};
  for (std::uint64_t s = 0; s < 30; ++s) cases.push_back(random_instance(random_spec(s)));
  for (ILPInstance inst : cases) {
    inst.ensure_names();
    std::string text = emit_mps(inst);
    ILPInstance back = parse_mps(text);
    check_same(back, inst);
    CHECK(emit_mps(back) == text);
  }
}

TEST_CASE("decimal coefficients are exact") {
  std::string text = with_columns("    x1 obj 1\n    x1 r1 2.5\n    x2 obj 0.125\n    x2 r1 1\n");
  MpsModel model = parse_mps_model(text);
  CHECK(model.entries.at(0).at(0) == Rational(5, 2));
  CHECK(model.objective_coeffs.at(1) == Rational(1, 8));
  ILPInstance inst = to_ilp(model);
  // The row is scaled by the lcm of its denominators.
  CHECK(inst.A == IntMatrix{{5, 2}});
  CHECK(inst.b == to_big({8}));
  CHECK(inst.c[1] == Rational(1, 8));
  CHECK(parse_mps(with_columns("    x1 obj 1\n    x1 r1 2/3\n")).A == IntMatrix{{2}});
  CHECK(parse_mps(with_columns("    x1 obj 1e1\n    x1 r1 1\n")).c[0] == 10);
}

TEST_CASE("continuous or unbounded columns are not pure ILPs") {
  std::string cont =
      "NAME t\nROWS\n N obj\n E r1\nCOLUMNS\n    x1 obj 1\n    x1 r1 1\nRHS\n    RHS r1 4\nENDATA\n";
  CHECK(kind_of([&] { parse_mps(cont); }) == ErrorKind::kNotPureILP);
  CHECK(kind_of([] { parse_mps(with_columns("    x1 obj 1\n    x1 r1 1\n", "RHS\n    RHS r1 4\nBOUNDS\n FR BND x1\nENDATA\n")); }) ==
        ErrorKind::kNotPureILP);
  CHECK(kind_of([] { parse_mps(with_columns("    x1 obj 1\n    x1 r1 1\n", "RHS\n    RHS r1 4\nBOUNDS\n MI BND x1\nENDATA\n")); }) ==
        ErrorKind::kNotPureILP);
}

TEST_CASE("malformed files report the line") {
  std::string msg;
  CHECK(kind_of([&] { parse_mps(with_columns("    x1 obj 1\n    x1 r1 abc\n")); }, &msg) == ErrorKind::kMalformedInput);
  CHECK(msg.find("line 8") != std::string::npos);
  CHECK(kind_of([] { parse_mps("NAME t\nROWS\n N obj\n"); }) == ErrorKind::kMalformedInput);
  CHECK(kind_of([] { parse_mps(with_columns("    x1 obj 1\n    x1 nope 1\n")); }, &msg) == ErrorKind::kMalformedInput);
  CHECK(msg.find("line 8") != std::string::npos);
  CHECK(kind_of([] { parse_mps("NAME t\nROWS\n Q r\nENDATA\n"); }) == ErrorKind::kMalformedInput);
  CHECK(kind_of([] { parse_mps(with_columns("    x1 obj 1\n    x1 obj 2\n")); }) == ErrorKind::kMalformedInput);
}

TEST_CASE("fixed-format files parse") {
  std::string fixed =
      "NAME          FIXED\n"
      "ROWS\n"
      " N  COST\n"
      " G  LIM1\n"
      "COLUMNS\n"
      "    MARKER                 'MARKER'                 'INTORG'\n"
      "    X1        COST         1.0   LIM1         1.0\n"
      "    X2        COST         2.0   LIM1         1.0\n"
      "    MARKER                 'MARKER'                 'INTEND'\n"
      "RHS\n"
      "    RHS       LIM1         3.0\n"
      "BOUNDS\n"
      " UP BND       X1           4.0\n"
      "ENDATA\n";
  ILPInstance inst = parse_mps(fixed);
  CHECK(inst.name == "FIXED");
  CHECK(inst.num_rows() == 2);
  CHECK(inst.row_names == std::vector<std::string>{"LIM1", "UB_X1"});
  CHECK(inst.A == IntMatrix{{1, 1}, {1, 0}});
  CHECK(inst.b == to_big({3, 4}));
  CHECK(inst.c == std::vector<Rational>{1, 2});
}

TEST_CASE("ranges expand to two rows") {
  auto ranged = [](const std::string& type, const std::string& r) {
    return parse_mps("NAME t\nROWS\n N obj\n " + type + " r1\nCOLUMNS\n    MARKER 'MARKER' 'INTORG'\n    x obj 1\n    x r1 1\n"
                     "    MARKER 'MARKER' 'INTEND'\nRHS\n    RHS r1 4\nRANGES\n    RNG r1 " + r + "\nENDATA\n");
  };
  ILPInstance e = ranged("E", "3");
  CHECK(e.row_names == std::vector<std::string>{"r1", "r1_rng"});
  CHECK(e.b == to_big({4, 7}));
  CHECK(e.senses == std::vector<RowSense>{RowSense::kGreaterEqual, RowSense::kLessEqual});
  CHECK(ranged("E", "-3").b == to_big({1, 4}));
  CHECK(ranged("L", "-3").b == to_big({1, 4}));
  CHECK(ranged("G", "3").b == to_big({4, 7}));
  CHECK(ranged("G", "-3").b == to_big({4, 7}));
}

TEST_CASE("objective sense, offset and bounds") {
  std::string tail = "RHS\n    RHS r1 4\n    RHS obj -5\nBOUNDS\n LO BND x1 -2\n UP BND x1 3\n LO BND x2 1\n BV BND x3\nENDATA\n";
  std::string body = "    x1 obj 1\n    x1 r1 1\n    x2 obj 2\n    x2 r1 1\n    x3 obj 1\n    x3 r1 1\n";
  std::string text = "NAME t\nOBJSENSE\n    MAX\n" + with_columns(body, tail).substr(7);
  ILPInstance inst = parse_mps(text);
  // max x1 + 2 x2 + x3 + 5 becomes min -x1 - 2 x2 - x3 - 5 with x1 = x1' - 2.
  CHECK(inst.c == std::vector<Rational>{-1, -2, -1});
  CHECK(inst.obj_offset == Rational(-5 + 2));
  CHECK(inst.row_names == std::vector<std::string>{"r1", "UB_x1", "LB_x2", "UB_x3"});
  CHECK(inst.b == to_big({6, 5, 1, 1}));
  CHECK(inst.senses == std::vector<RowSense>{RowSense::kEqual, RowSense::kLessEqual, RowSense::kGreaterEqual,
                                             RowSense::kLessEqual});
  std::string inline_sense = "NAME t\nOBJSENSE MAXIMIZE\n" + with_columns("    x1 obj 1\n    x1 r1 1\n").substr(7);
  CHECK(parse_mps(inline_sense).c == std::vector<Rational>{-1});
  std::string fixed_bound = with_columns("    x1 obj 1\n    x1 r1 1\n", "RHS\n    RHS r1 4\nBOUNDS\n FX BND x1 3\nENDATA\n");
  CHECK(parse_mps(fixed_bound).row_names == std::vector<std::string>{"r1", "LB_x1", "UB_x1"});
  CHECK(kind_of([] { parse_mps(with_columns("    x1 obj 1\n    x1 r1 1\n", "RHS\n    RHS r1 4\nBOUNDS\n UP BND x1 0.5\n LO BND x1 0.25\nENDATA\n")); }) ==
        ErrorKind::kInfeasible);
}

TEST_CASE("MPS files on disk") {
  const std::string path = "/tmp/grouprelax_test_io.mps";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f);
    std::string text = std::string(kMinimal).substr(10);
    text = "NAME\n" + text;
    std::fputs(text.c_str(), f);
    std::fclose(f);
  }
  CHECK(read_mps_file(path).name == "grouprelax_test_io");
  CHECK(kind_of([] { read_mps_file("/nonexistent/x.mps"); }) == ErrorKind::kMalformedInput);
}

TEST_CASE("cutting stock patterns") {
  auto pats = maximal_patterns({6, 4}, 10);
  std::set<std::vector<std::int64_t>> got(pats.begin(), pats.end());
  CHECK(got == std::set<std::vector<std::int64_t>>{{1, 1}, {0, 2}});
  ILPInstance cs = cutting_stock("cs", {6, 4}, {2, 2}, 10);
  CHECK(cs.num_vars() == 2);
  CHECK(cs.senses == std::vector<RowSense>(2, RowSense::kGreaterEqual));
  CHECK(cs.c == std::vector<Rational>(2, Rational(1)));
  PipelineConfig cfg;
  cfg.search.method = SearchMethod::kDijkstra;
  ReportRow row = run_pipeline(cs, cfg);
  REQUIRE(row.chain.opt_ilp);
  CHECK(*row.chain.opt_ilp == 2);
  CHECK(row.chain.opt_lp <= row.chain.opt_b);
  CHECK(row.chain.opt_b <= *row.chain.opt_ilp);
  CHECK(kind_of([] { maximal_patterns({2, 3}, 30, 3); }) == ErrorKind::kPatternLimitExceeded);
}

TEST_CASE("maximal patterns against an exhaustive oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t L = 10 + static_cast<std::int64_t>(rng.uniform(30));
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < 1 + rng.uniform(3); ++i) w.push_back(2 + static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(L - 2))));
    std::sort(w.rbegin(), w.rend());
    std::set<std::vector<std::int64_t>> oracle;
    std::vector<BigInt> box(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) box[i] = L / w[i] + 1;
    for_each_ambient(box, [&](const Point& p) {
      std::int64_t used = 0;
      for (std::size_t i = 0; i < w.size(); ++i) used += w[i] * p[i].get_si();
      if (used > L) return;
      for (std::int64_t wi : w)
        if (used + wi <= L) return;
      std::vector<std::int64_t> v;
      for (const auto& x : p) v.push_back(x.get_si());
      oracle.insert(v);
    });
    auto pats = maximal_patterns(w, L);
    CHECK(std::set<std::vector<std::int64_t>>(pats.begin(), pats.end()) == oracle);
    CHECK(pats.size() == oracle.size());
  }
}

TEST_CASE("cutgen draws") {
  CutStockSpec empty;
  empty.L = 10;
  empty.v1 = 0.55;
  empty.v2 = 0.5;
  CHECK(kind_of([&] { cutgen_draw(empty); }) == ErrorKind::kEmptyWidthBand);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CutStockSpec s;
    s.m = 1 + seed % 8;
    s.dbar = 1.0 + static_cast<double>(seed % 7) * 3.3;
    s.seed = seed;
    CutStockDraw d = cutgen_draw(s);
    REQUIRE(d.widths.size() == s.m);
    std::int64_t sum = 0;
    for (auto x : d.demands) {
      CHECK(x >= 1);
      sum += x;
    }
    CHECK(sum == std::llround(static_cast<double>(s.m) * s.dbar));
    CHECK(std::is_sorted(d.widths.rbegin(), d.widths.rend()));
    for (auto w : d.widths) {
      CHECK(w >= static_cast<std::int64_t>(std::ceil(s.v1 * static_cast<double>(s.L))));
      CHECK(w <= static_cast<std::int64_t>(std::floor(s.v2 * static_cast<double>(s.L))));
    }
  }
  CutStockSpec low;
  low.dbar = 0.2;
  CHECK(kind_of([&] { cutgen_draw(low); }) == ErrorKind::kInvalidArgument);
  CutStockSpec s{4, 10, 0.01, 0.5, 10, 3, kDefaultPatternCap};
  CHECK(emit_mps(cutgen(s)) == emit_mps(cutgen(s)));
  CHECK(cutgen(s).name == "cutgen_m4_L10_v1-0.01_v2-0.5_d10_s3");
  CHECK(cutgen_name(s) == cutgen(s).name);
}

TEST_CASE("planted metadata matches brute force") {
  for (std::int64_t t : {2, 3}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (UnimodularStyle style : {UnimodularStyle::kIdentity, UnimodularStyle::kRandomLowerUnit}) {
        PlantedInstance p = planted(t, m, 1, 7, style);
        Built b = build(p.ilp);
        CHECK(b.bs.opt_lp == p.expected_opt_lp);
        CHECK(b.fc.basis.kernel_order == p.k_order);
        CHECK(b.fc.basis.range_order == p.g_order);
        SearchResult br = brute_force_group(b.grd, b.fc, 100000);
        CHECK(br.best.objective == p.expected_opt_b);
        CHECK(BigInt(static_cast<long>(br.argmin.size())) == p.k_star);
        CHECK(p.expected_opt_b == static_cast<long>(m));
        BigInt tm = 1;
        for (std::size_t i = 0; i < m; ++i) tm *= t;
        CHECK(p.k_order == tm);
        // A_B^{-1} stays nonnegative.
        IntMatrix AB = b.sf.A.select_columns(b.bs.basis);
        CHECK(oracle_det(AB) != 0);
      }
    }
  }
  PlantedInstance sq = planted(2, 2, 1, 0);
  CHECK(sq.ilp.name == "planted_t2_m2_l1_s0_id");
  CHECK(planted(2, 2, 1, 0, UnimodularStyle::kRandomLowerUnit).ilp.name == "planted_t2_m2_l1_s0_rlu");
  CHECK(parse_style("random-lower-unit") == UnimodularStyle::kRandomLowerUnit);
  CHECK(kind_of([] { planted(1, 2, 1, 0); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { planted(3, 2, 3, 0); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { planted(3, 0, 1, 0); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { parse_style("upper"); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("pipeline rows") {
  ReportRow qap = supplied_row("qap10", q("33257/100"), Rational(336), Rational(340));
  CHECK(csv_line(qap).find(",46.2,") != std::string::npos);
  ReportRow supp = supplied_row("supp19", Rational(12677206), Rational(12677206), Rational(12677552));
  CHECK(supp.chain.r_abs == 0);
  CHECK(format_r_pct(supp.chain) == "0.0");

  PipelineConfig cfg;
  for (SearchMethod m : {SearchMethod::kDijkstra, SearchMethod::kBrute}) {
    cfg.search.method = m;
    ReportRow row = run_pipeline(planted(2, 3, 1, 0).ilp, cfg);
    CHECK(row.certified);
    REQUIRE(row.chain.r_pct);
    CHECK(*row.chain.r_pct == 100);
    // Zero costs on the basic columns rule out the box certificate.
    CHECK(row.opt_source == OptSource::kBranchAndBound);
    CHECK(*row.k_order == 8);
    CHECK(*row.g_order == 8);
    CHECK(row.wall_ms == 0);
  }
  cfg.known_optima["apple"] = Rational(5);
  ILPInstance named = planted(3, 4, 1, 0).ilp;
  named.name = "apple";
  cfg.ilp_cap = 10;
  cfg.bnb_nodes = 1;
  ReportRow supplied = run_pipeline(named, cfg);
  CHECK(supplied.opt_source == OptSource::kSupplied);
  CHECK(*supplied.chain.opt_ilp == 5);
}

TEST_CASE("pipeline errors carry the instance name") {
  ILPInstance bad = make_ilp(IntMatrix{{2}}, {3}, {1});
  bad.name = "oddball";
  PipelineConfig cfg;
  std::string msg;
  CHECK(kind_of([&] { run_pipeline(bad, cfg); }, &msg) == ErrorKind::kInfeasible);
  CHECK(msg.rfind("oddball: ", 0) == 0);
}

TEST_CASE("pipeline bound chain on random instances") {
  PipelineConfig cfg;
  cfg.search.method = SearchMethod::kDijkstra;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    ReportRow row = run_pipeline(random_instance(random_spec(seed)), cfg);
    REQUIRE(row.chain.opt_ilp);
    CHECK(row.chain.opt_lp <= row.chain.opt_b);
    CHECK(row.chain.opt_b <= *row.chain.opt_ilp);
    CHECK(*row.chain.delta_lp_ilp == *row.chain.opt_ilp - row.chain.opt_lp);
    CHECK(*row.chain.delta_b == *row.chain.opt_ilp - row.chain.opt_b);
    CHECK(row.chain.r_abs == row.chain.opt_b - row.chain.opt_lp);
    if (*row.chain.delta_lp_ilp > 0) CHECK(*row.chain.r_pct == 100 * row.chain.r_abs / *row.chain.delta_lp_ilp);
  }
}

TEST_CASE("exact ILP source selection") {
  PipelineConfig cfg;
  OptSource src = OptSource::kNone;
  auto o = exact_ilp(random_instance(random_spec(3)), cfg, &src);
  REQUIRE(o);
  CHECK(src == OptSource::kBruteForce);
  // A zero cost defeats the box certificate, so branch and bound runs.
  auto z = exact_ilp(make_ilp(IntMatrix{{1, 1}}, {20}, {0, 1}), cfg, &src);
  REQUIRE(z);
  CHECK(src == OptSource::kBranchAndBound);
  CHECK(z->value == 0);
}

TEST_CASE("CSV formatting") {
  CHECK(format_rational(q("33257/100")) == "332.57");
  CHECK(format_rational(Rational(-4)) == "-4");
  CHECK(format_rational(q("1/3")) == "0.333333");
  CHECK(format_rational(q("1/8")) == "0.125");
  ReportRow ex = supplied_row("ex10", Rational(100), Rational(100), Rational(100));
  std::string line = csv_line(ex);
  CHECK(line == "ex10,100,100,100,0,0,0,NA,false,false,,,supplied,,0");
  ReportRow open = supplied_row("open", Rational(1), Rational(2), std::nullopt);
  CHECK(csv_line(open) == "open,1,2,,,,1,,false,false,,,supplied,,0");
  ReportText rep = emit_report({ex, supplied_row("a", Rational(0), Rational(1), Rational(2))});
  CHECK(rep.csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(rep.csv.find("\na,") < rep.csv.find("\nex10,"));
  CHECK(kind_of([] { emit_report({}); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("histogram of gap closure") {
  std::vector<ReportRow> full;
  for (int i = 0; i < 3; ++i) full.push_back(supplied_row("f" + std::to_string(i), Rational(0), Rational(1), Rational(1)));
  Histogram h = r_pct_histogram(full);
  CHECK(h.bins[9] == 3);
  CHECK(h.full_closure == 3);
  for (std::size_t i = 0; i < 9; ++i) CHECK(h.bins[i] == 0);
  std::string text = format_histogram(h);
  CHECK(text.rfind("bin_start,count\n0,0\n", 0) == 0);
  CHECK(text.find("\n90,3\n100,3\n") != std::string::npos);

  std::vector<ReportRow> mixed{supplied_row("a", Rational(0), Rational(0), Rational(1)),
                               supplied_row("b", Rational(0), q("1/10"), Rational(1)),
                               supplied_row("c", Rational(0), q("99/100"), Rational(1)),
                               supplied_row("d", Rational(5), Rational(5), Rational(5))};
  Histogram m = r_pct_histogram(mixed);
  CHECK(m.bins[0] == 1);
  CHECK(m.bins[1] == 1);
  CHECK(m.bins[9] == 1);
  CHECK(m.full_closure == 0);
  CHECK(m.not_available == 1);
}

TEST_CASE("supplied tables") {
  auto rows = parse_supplied("instance,opt_lp,opt_b,opt_ilp\nqap10,332.57,336.00,340.00\nex10,100,100,\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].opt_lp == q("33257/100"));
  CHECK(*rows[0].opt_ilp == 340);
  CHECK_FALSE(rows[1].opt_ilp);
  auto known = parse_known_optima("instance,opt_ilp\ngen02,-4783.73\n");
  CHECK(known.at("gen02") == q("-478373/100"));
  CHECK(kind_of([] { parse_supplied("x,1\n"); }) == ErrorKind::kMalformedInput);
}

TEST_CASE("reports are deterministic") {
  auto run = [] {
    PipelineConfig cfg;
    cfg.search.seed = 11;
    cfg.search.max_samples = 50;
    std::vector<ReportRow> rows;
    rows.push_back(run_pipeline(cutgen(CutStockSpec{4, 10, 0.01, 0.5, 10, 2, kDefaultPatternCap}), cfg));
    rows.push_back(run_pipeline(planted(2, 3, 1, 1, UnimodularStyle::kRandomLowerUnit).ilp, cfg));
    for (std::uint64_t s = 0; s < 5; ++s) rows.push_back(run_pipeline(random_instance(random_spec(s)), cfg));
    return emit_report(rows).csv;
  };
  CHECK(run() == run());
}

#include <cmath>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "rangepair/check.hpp"
#include "rangepair/instance.hpp"
#include "rangepair/oracle.hpp"
#include "test_support.hpp"

using namespace rangepair;

TEST_CASE("generation is deterministic and empty instances work") {
  const Instance a = generate(Kind::segments, 0, 5);
  CHECK(a.object_count() == 0);
  const Oracle oracle(a);
  for (std::size_t qi = 0; qi < a.query_count(); ++qi) {
    CHECK(oracle.pairs_for_query(qi).empty());
  }

  const Instance b = generate(Kind::rects, 120, 9);
  const Instance c = generate(Kind::rects, 120, 9);
  CHECK(write_instance(b) == write_instance(c));
  const Instance d = generate(Kind::rects, 120, 10);
  CHECK(write_instance(b) != write_instance(d));
}

TEST_CASE("instance files round-trip") {
  for (Kind k : {Kind::segments, Kind::rects, Kind::boxes, Kind::cubes,
                 Kind::fatboxes, Kind::disks}) {
    GenParams params;
    params.queries = 7;
    params.alpha = 2.0;
    const Instance inst = generate(k, 25, 3, params);
    const std::string text = write_instance(inst);
    std::istringstream in(text);
    const Instance back = read_instance(in);
    CHECK(write_instance(back) == text);
    CHECK(back.object_count() == inst.object_count());
    CHECK(back.query_count() == inst.query_count());
  }
}

TEST_CASE("generated disks respect the tangency margin") {
  const Instance inst = generate(Kind::disks, 50, 17);
  double min_margin = 1e18;
  for (std::size_t i = 0; i < inst.disks.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.disks.size(); ++j) {
      const Disk& a = inst.disks[i];
      const Disk& b = inst.disks[j];
      const double dist = std::hypot(a.cx - b.cx, a.cy - b.cy);
      min_margin = std::min(min_margin, std::abs(dist - (a.r + b.r)));
      min_margin = std::min(min_margin, std::abs(dist - std::abs(a.r - b.r)));
    }
  }
  CHECK(min_margin >= 1e-6);
}

TEST_CASE("generated fat boxes respect alpha") {
  GenParams params;
  params.alpha = 3.0;
  const Instance inst = generate(Kind::fatboxes, 80, 21, params);
  for (const Box3& b : inst.boxes) {
    const Coord sides[3] = {b.xs.hi - b.xs.lo, b.ys.hi - b.ys.lo,
                            b.zs.hi - b.zs.lo};
    const Coord mn = std::min({sides[0], sides[1], sides[2]});
    const Coord mx = std::max({sides[0], sides[1], sides[2]});
    CHECK(static_cast<double>(mx) <= 3.0 * static_cast<double>(mn));
  }
}

TEST_CASE("oracle answers the two-segment example") {
  Instance inst;
  inst.kind = Kind::segments;
  inst.segs = {hseg(2, 0, 10), vseg(5, 0, 4)};
  inst.queries2 = {rect(4, 6, 1, 3), rect(6, 8, 1, 3)};
  CHECK(oracle_pairs(inst, 0) == PairReport{{0, 1}});
  CHECK(oracle_pairs(inst, 1).empty());
}

TEST_CASE("oracle is consistent under object permutation") {
  const Instance inst = generate(Kind::rects, 60, 33);
  Instance flipped = inst;
  std::reverse(flipped.rects.begin(), flipped.rects.end());
  const Oracle a(inst), b(flipped);
  const std::uint32_t n = static_cast<std::uint32_t>(inst.rects.size());
  for (std::size_t qi = 0; qi < inst.query_count(); ++qi) {
    PairReport remapped;
    for (const PairId& p : b.pairs_for_query(qi)) {
      remapped.push_back(make_pair_id(n - 1 - p.i, n - 1 - p.j));
    }
    sort_unique(remapped);
    CHECK(remapped == a.pairs_for_query(qi));
  }
}

TEST_CASE("run_check passes for every kind at small scale") {
  for (Kind k : {Kind::segments, Kind::rects, Kind::boxes, Kind::cubes,
                 Kind::fatboxes, Kind::disks}) {
    GenParams params;
    params.alpha = 2.0;
    const std::size_t n = kind_is_3d(k) ? 80 : (k == Kind::disks ? 50 : 150);
    const CheckResult res = run_check(k, n, 25, 4, params,
                                      "/tmp/rp_counterexample.jsonl");
    CHECK(res.ok);
    CHECK(res.row.oracle_match);
    CHECK(!res.pair_output.empty());
    // n = 0 instances build and answer every query with the empty report
    const CheckResult zero = run_check(k, 0, 5, 4, params,
                                       "/tmp/rp_counterexample.jsonl");
    CHECK(zero.ok);
    CHECK(zero.row.mean_k == 0);
  }
}

TEST_CASE("repeated checks produce identical pair output") {
  GenParams params;
  const CheckResult a = run_check(Kind::segments, 200, 30, 12, params,
                                  "/tmp/rp_counterexample.jsonl");
  const CheckResult b = run_check(Kind::segments, 200, 30, 12, params,
                                  "/tmp/rp_counterexample.jsonl");
  CHECK(a.ok);
  CHECK(a.pair_output == b.pair_output);
}

TEST_CASE("the shrinker minimizes a failing instance") {
  // a simulated buggy engine that drops one answer fails whenever any pair
  // is reported at all; the minimized instance must be a single pair, and
  // removing either remaining object must make it pass
  const Instance inst = generate(Kind::rects, 40, 44);
  auto still_fails = [](const Instance& cand) {
    const Oracle o(cand);
    for (std::size_t qi = 0; qi < cand.query_count(); ++qi) {
      if (!o.pairs_for_query(qi).empty()) return true;
    }
    return false;
  };
  REQUIRE(still_fails(inst));
  const Instance shrunk = shrink_instance(inst, still_fails);
  CHECK(shrunk.rects.size() == 2);
  for (std::size_t idx = 0; idx < shrunk.rects.size(); ++idx) {
    Instance cand = shrunk;
    cand.rects.erase(cand.rects.begin() + static_cast<std::ptrdiff_t>(idx));
    CHECK_FALSE(still_fails(cand));
  }
}

TEST_CASE("concurrent queries return the single-threaded answers") {
  GenParams params;
  params.queries = 40;
  for (Kind k : {Kind::rects, Kind::disks}) {
    const Instance inst = generate(k, 80, 55, params);
    const Engine engine(inst);
    std::vector<PairReport> expected(inst.query_count());
    for (std::size_t qi = 0; qi < expected.size(); ++qi) {
      expected[qi] = engine.query(inst, qi);
    }
    std::vector<int> bad(4, 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t qi = 0; qi < expected.size(); ++qi) {
          if (engine.query(inst, qi) != expected[qi]) bad[t]++;
        }
      });
    }
    for (auto& th : threads) th.join();
    for (int b : bad) CHECK(b == 0);
  }
}

TEST_CASE("bench csv rows are well formed") {
  BenchRow row;
  row.kind = "rects";
  row.n = 10;
  const std::string csv = bench_csv_header() + bench_csv_row(row);
  CHECK(csv.find("rects,10,") != std::string::npos);
}

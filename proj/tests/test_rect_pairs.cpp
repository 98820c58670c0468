#include <set>
#include <tuple>

#include "doctest.h"
#include "rangepair/rect_pairs.hpp"
#include "test_support.hpp"

using namespace rangepair;
using rptest::TestRng;

namespace {

using WitnessKey = std::tuple<std::uint32_t, int, Coord, Coord, Coord>;

std::set<WitnessKey> witness_set(const RectIndex& idx) {
  std::set<WitnessKey> out;
  for (std::size_t t = 0; t < idx.witness_segments().size(); ++t) {
    const AxisSeg2& w = idx.witness_segments()[t];
    out.insert({idx.witness_owners()[t], w.horizontal() ? 0 : 1, w.fixed,
                w.span.lo, w.span.hi});
  }
  return out;
}

// definitional recomputation: per edge the extreme components of the covered
// part, plus the rightmost/topmost crossing edges, all by direct scans
std::set<WitnessKey> witness_oracle(const std::vector<Rect2>& rects) {
  std::set<WitnessKey> out;
  for (std::uint32_t i = 0; i < rects.size(); ++i) {
    const Rect2& r = rects[i];
    struct EdgeDef {
      bool vertical;
      Coord fixed;
      Interval span;
    } edges[4] = {{true, r.xs.lo, r.ys},
                  {true, r.xs.hi, r.ys},
                  {false, r.ys.lo, r.xs},
                  {false, r.ys.hi, r.xs}};
    for (const auto& e : edges) {
      std::vector<Interval> cover;
      for (std::uint32_t j = 0; j < rects.size(); ++j) {
        if (j == i) continue;
        const Interval perp = e.vertical ? rects[j].xs : rects[j].ys;
        if (!perp.contains(e.fixed)) continue;
        const Interval par = e.vertical ? rects[j].ys : rects[j].xs;
        if (auto c = interval_intersect(e.span, par)) cover.push_back(*c);
      }
      if (cover.empty()) continue;
      std::sort(cover.begin(), cover.end(),
                [](const Interval& a, const Interval& b) {
                  return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
                });
      std::vector<Interval> comps{cover.front()};
      for (const Interval& c : cover) {
        if (c.lo <= comps.back().hi) {
          comps.back().hi = std::max(comps.back().hi, c.hi);
        } else {
          comps.push_back(c);
        }
      }
      const int o = e.vertical ? 1 : 0;
      out.insert({i, o, e.fixed, comps.front().lo, comps.front().hi});
      out.insert({i, o, e.fixed, comps.back().lo, comps.back().hi});
    }
    bool have_v = false, have_h = false;
    Coord best_x = 0, best_y = 0;
    for (std::uint32_t j = 0; j < rects.size(); ++j) {
      if (j == i) continue;
      if (rects[j].ys.contains(r.ys)) {
        for (Coord x : {rects[j].xs.lo, rects[j].xs.hi}) {
          if (r.xs.contains(x) && (!have_v || x > best_x)) {
            best_x = x;
            have_v = true;
          }
        }
      }
      if (rects[j].xs.contains(r.xs)) {
        for (Coord y : {rects[j].ys.lo, rects[j].ys.hi}) {
          if (r.ys.contains(y) && (!have_h || y > best_y)) {
            best_y = y;
            have_h = true;
          }
        }
      }
    }
    if (have_v) out.insert({i, 1, best_x, r.ys.lo, r.ys.hi});
    if (have_h) out.insert({i, 0, best_y, r.xs.lo, r.xs.hi});
  }
  return out;
}

PairReport rect_oracle(const std::vector<Rect2>& rects, const Rect2& q) {
  PairReport out;
  for (std::uint32_t i = 0; i < rects.size(); ++i) {
    for (std::uint32_t j = i + 1; j < rects.size(); ++j) {
      const auto c = rect_intersect(rects[i], rects[j]);
      if (c && c->overlaps(q)) out.push_back({i, j});
    }
  }
  return out;
}

void check_case(const std::vector<Rect2>& rects, const Rect2& q) {
  const RectIndex idx(rects);
  const PairReport want = rect_oracle(rects, q);
  REQUIRE(!want.empty());
  const SeedSet seeds = idx.seeds(q);
  for (const PairId& p : want) {
    CHECK((std::binary_search(seeds.begin(), seeds.end(), p.i) ||
           std::binary_search(seeds.begin(), seeds.end(), p.j)));
  }
  CHECK(idx.query(q) == want);
  CHECK(seeds.size() <= 2 * want.size() + 4);
}

std::vector<Rect2> random_rects(TestRng& rng, std::size_t n, Coord domain,
                                Coord max_len) {
  std::vector<Rect2> rects;
  for (std::size_t t = 0; t < n; ++t) {
    rects.push_back(rptest::rand_rect(rng, domain, max_len));
  }
  return rects;
}

}  // namespace

TEST_CASE("interior witness: rightmost crossing edge") {
  const RectIndex idx({rect(0, 10, 0, 10), rect(2, 4, -1, 11)});
  const auto ws = witness_set(idx);
  // r1 crosses r0 vertically; the rightmost crossing edge is x=4
  CHECK(ws.count({0, 1, 4, 0, 10}) == 1);

  const RectIndex lonely({rect(0, 1, 0, 1), rect(5, 6, 5, 6)});
  CHECK(lonely.witness_segments().empty());
}

TEST_CASE("witness sets equal the all-pairs recomputation") {
  TestRng rng(71);
  const auto rects = random_rects(rng, 300, 10000, 1200);
  const RectIndex idx(rects);
  CHECK(witness_set(idx) == witness_oracle(rects));
  // at most ten witness segments per rectangle
  std::vector<int> counts(rects.size(), 0);
  for (std::uint32_t o : idx.witness_owners()) counts[o]++;
  for (int c : counts) CHECK(c <= 10);
}

TEST_CASE("seed examples") {
  // a rect containing a query corner is seeded
  const RectIndex idx({rect(0, 5, 0, 5), rect(20, 30, 20, 30)});
  const SeedSet s = idx.seeds(rect(4, 10, 4, 10));
  CHECK(std::binary_search(s.begin(), s.end(), 0u));

  // disjoint rects far from the query seed nothing
  CHECK(idx.seeds(rect(50, 60, 50, 60)).empty());
}

TEST_CASE("query examples") {
  const RectIndex idx({rect(0, 3, 0, 3), rect(2, 5, 2, 5)});
  CHECK(idx.query(rect(0, 5, 0, 5)) == PairReport{{0, 1}});
  CHECK(idx.query(rect(4, 5, 0, 1)).empty());
}

// One handcrafted instance per case of the coverage analysis; random
// instances rarely reach the same-orientation double-crossing situations.
TEST_CASE("coverage case A: contributing edge endpoint inside the query") {
  check_case({rect(2, 6, 2, 6), rect(4, 8, 4, 8)}, rect(0, 10, 0, 10));
}

TEST_CASE("coverage case B-1: query corner inside the intersection") {
  check_case({rect(0, 100, 0, 100), rect(50, 150, 40, 160)},
             rect(60, 70, 60, 70));
}

TEST_CASE("coverage case B-2: three or more crossing edges") {
  check_case({rect(4, 6, 0, 10), rect(0, 10, 4, 6)}, rect(3, 7, 3, 7));
}

TEST_CASE("coverage case B-3-i: both vertical edges from one rectangle") {
  check_case({rect(4, 6, 0, 10), rect(2, 8, 2, 8)}, rect(1, 9, 3, 7));
}

TEST_CASE("coverage case B-3-ii: vertical edges from different rectangles") {
  check_case({rect(2, 5, 0, 8), rect(4, 9, -2, 12)}, rect(1, 10, 2, 6));
}

TEST_CASE("random queries: exactness, coverage, seed economy") {
  TestRng rng(73);
  const auto rects = random_rects(rng, 350, 10000, 900);
  const RectIndex idx(rects);
  for (int t = 0; t < 100; ++t) {
    const Rect2 q = rptest::rand_rect(rng, 10000, 2500);
    const PairReport got = idx.query(q);
    const PairReport want = rect_oracle(rects, q);
    REQUIRE(got == want);
    const SeedSet seeds = idx.seeds(q);
    for (const PairId& p : want) {
      CHECK((std::binary_search(seeds.begin(), seeds.end(), p.i) ||
             std::binary_search(seeds.begin(), seeds.end(), p.j)));
    }
    CHECK(seeds.size() <= 2 * want.size() + 4);
  }
}

TEST_CASE("degenerate rectangles participate under closed semantics") {
  // a zero-width rect acting as a segment
  const RectIndex idx({rect(5, 5, 0, 10), rect(0, 10, 4, 6)});
  CHECK(idx.query(rect(0, 10, 0, 10)) == PairReport{{0, 1}});
}

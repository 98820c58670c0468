#include <map>
#include <set>

#include "doctest.h"
#include "rangepair/seg_pairs.hpp"
#include "test_support.hpp"

using namespace rangepair;
using rptest::TestRng;

namespace {

std::vector<AxisSeg2> random_segments(TestRng& rng, std::size_t n,
                                      Coord domain, Coord max_len) {
  std::vector<AxisSeg2> segs;
  for (std::size_t t = 0; t < n; ++t) {
    const Interval span = rptest::rand_interval(rng, domain, max_len);
    const Coord fixed = rng.range(0, domain);
    segs.push_back(t % 2 ? vseg(fixed, span.lo, span.hi)
                         : hseg(fixed, span.lo, span.hi));
  }
  return segs;
}

// all-pairs recomputation of the witness multiset, independent of the sweep
std::multiset<std::tuple<std::uint32_t, Coord, Coord>> witness_oracle(
    const std::vector<AxisSeg2>& segs) {
  std::multiset<std::tuple<std::uint32_t, Coord, Coord>> out;
  for (std::uint32_t i = 0; i < segs.size(); ++i) {
    Coord lo = kCoordMax, hi = kCoordMin;
    for (std::uint32_t j = 0; j < segs.size(); ++j) {
      if (i == j || segs[i].orientation == segs[j].orientation) continue;
      const bool i_h = segs[i].horizontal();
      const auto p = i_h ? seg_pair_point(segs[i], segs[j])
                         : seg_pair_point(segs[j], segs[i]);
      if (!p) continue;
      const Coord along = i_h ? p->x : p->y;
      lo = std::min(lo, along);
      hi = std::max(hi, along);
    }
    if (lo > hi) continue;
    const auto pt = [&](Coord along) {
      return segs[i].horizontal()
                 ? std::tuple<std::uint32_t, Coord, Coord>{i, along,
                                                           segs[i].fixed}
                 : std::tuple<std::uint32_t, Coord, Coord>{i, segs[i].fixed,
                                                           along};
    };
    out.insert(pt(lo));
    if (hi != lo) out.insert(pt(hi));
  }
  return out;
}

PairReport seg_oracle(const std::vector<AxisSeg2>& segs, const Rect2& q) {
  PairReport out;
  for (std::uint32_t i = 0; i < segs.size(); ++i) {
    for (std::uint32_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].orientation == segs[j].orientation) continue;
      const bool i_h = segs[i].horizontal();
      const auto p = i_h ? seg_pair_point(segs[i], segs[j])
                         : seg_pair_point(segs[j], segs[i]);
      if (p && q.contains(*p)) out.push_back({i, j});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("witness computation examples") {
  // vertical crossed by two horizontals
  const SegIndex idx({vseg(5, 0, 10), hseg(3, 0, 9), hseg(7, 2, 8)});
  std::multiset<std::pair<Coord, Coord>> w;
  for (std::size_t t = 0; t < idx.witness_points().size(); ++t) {
    if (idx.witness_owners()[t] == 0) {
      w.insert({idx.witness_points()[t].x, idx.witness_points()[t].y});
    }
  }
  CHECK(w == std::multiset<std::pair<Coord, Coord>>{{5, 3}, {5, 7}});

  // a segment intersecting nothing has no witnesses
  const SegIndex lonely({hseg(0, 0, 1), vseg(100, 50, 60)});
  CHECK(lonely.witness_points().empty());
}

TEST_CASE("witness multiset equals the all-pairs oracle") {
  TestRng rng(61);
  const auto segs = random_segments(rng, 500, 10000, 900);
  const SegIndex idx(segs);
  std::multiset<std::tuple<std::uint32_t, Coord, Coord>> got;
  for (std::size_t t = 0; t < idx.witness_points().size(); ++t) {
    got.insert({idx.witness_owners()[t], idx.witness_points()[t].x,
                idx.witness_points()[t].y});
  }
  CHECK(got == witness_oracle(segs));
  CHECK(idx.witness_points().size() <= 2 * segs.size());
}

TEST_CASE("seed rules from the crossing and witness paths") {
  // both orientations cross: the vertical is seeded
  const SegIndex idx({vseg(5, -10, 20), hseg(3, -10, 20)});
  const Rect2 q = rect(0, 10, 0, 10);
  const SeedSet s = idx.seeds(q);
  CHECK(std::count(s.begin(), s.end(), 0) == 1);

  // endpoint inside the range with an intersection inside: witness seeding
  const SegIndex idx2({vseg(5, 2, 6), hseg(4, 0, 20)});
  const SeedSet s2 = idx2.seeds(q);
  CHECK(std::count(s2.begin(), s2.end(), 0) == 1);

  // no intersections anywhere: empty seed set
  const SegIndex idx3({vseg(5, 0, 1), hseg(9, 0, 20)});
  CHECK(idx3.seeds(q).empty());
}

TEST_CASE("query examples") {
  const SegIndex idx({hseg(2, 0, 10), vseg(5, 0, 4)});
  CHECK(idx.query(rect(4, 6, 1, 3)) == PairReport{{0, 1}});
  CHECK(idx.query(rect(6, 8, 1, 3)).empty());
}

TEST_CASE("random queries: exactness, seed coverage, seed economy") {
  TestRng rng(67);
  const auto segs = random_segments(rng, 600, 10000, 800);
  const SegIndex idx(segs);
  for (int t = 0; t < 120; ++t) {
    const Rect2 q = rptest::rand_rect(rng, 10000, 2500);
    const PairReport got = idx.query(q);
    const PairReport want = seg_oracle(segs, q);
    REQUIRE(got == want);
    const SeedSet seeds = idx.seeds(q);
    // seed coverage: every reported pair has a member in the seed set
    for (const PairId& p : want) {
      CHECK((std::binary_search(seeds.begin(), seeds.end(), p.i) ||
             std::binary_search(seeds.begin(), seeds.end(), p.j)));
    }
    CHECK(seeds.size() <= 2 * want.size());
  }
}

TEST_CASE("degenerate and empty inputs") {
  const SegIndex empty((std::vector<AxisSeg2>()));
  CHECK(empty.query(rect(0, 10, 0, 10)).empty());

  // zero-length segments still intersect under closed semantics
  const SegIndex pt({hseg(5, 5, 5), vseg(5, 5, 5)});
  CHECK(pt.query(rect(0, 10, 0, 10)) == PairReport{{0, 1}});
  CHECK(pt.query(rect(6, 10, 0, 10)).empty());
}

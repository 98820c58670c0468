#include "rangepair/rect_pairs.hpp"

#include <unordered_set>

namespace rangepair {

namespace {

// Extreme components of a union of closed intervals: the one with the
// smallest lo and the one with the largest hi. Zero-length components count.
struct UnionExtremes {
  Interval first, last;
  bool any = false;
};

UnionExtremes union_extremes(std::vector<Interval>& ivs) {
  UnionExtremes r;
  if (ivs.empty()) return r;
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  r.any = true;
  Interval cur = ivs.front();
  r.first = cur;
  bool first_done = false;
  for (std::size_t t = 1; t < ivs.size(); ++t) {
    if (ivs[t].lo <= cur.hi) {
      cur.hi = std::max(cur.hi, ivs[t].hi);
      if (!first_done) r.first = cur;
    } else {
      first_done = true;
      cur = ivs[t];
    }
  }
  r.last = cur;
  return r;
}

}  // namespace

RectIndex::RectIndex(std::vector<Rect2> rects) : rects_(std::move(rects)) {
  const std::uint32_t n = static_cast<std::uint32_t>(rects_.size());

  std::vector<CrossReport::Entry> ve, he;
  ve.reserve(n * 2);
  he.reserve(n * 2);
  for (std::uint32_t t = 0; t < n; ++t) {
    const Rect2& r = rects_[t];
    ve.push_back({r.xs.lo, r.ys, t});
    ve.push_back({r.xs.hi, r.ys, t});
    he.push_back({r.ys.lo, r.xs, t});
    he.push_back({r.ys.hi, r.xs, t});
  }
  d2_ = CrossReport(ve);
  d3_ = CrossReport(he);
  d4_ = PointEnclosure2D(rects_);
  d5_ = RectIntersect2D(rects_);

  // Witness segments, computed with output-sensitive structure queries:
  // covering rectangles per edge come from d5 with the edge as a degenerate
  // query rectangle, crossing edges from d2/d3.
  std::vector<std::uint32_t> hits;
  std::vector<Interval> cover;
  auto add_witness = [&](std::uint32_t owner, const AxisSeg2& w) {
    wsegs_.push_back(w);
    wseg_owners_.push_back(owner);
  };
  for (std::uint32_t i = 0; i < n; ++i) {
    const Rect2& r = rects_[i];
    struct EdgeDef {
      bool vertical;
      Coord fixed;
      Interval span;
    } edges[4] = {{true, r.xs.lo, r.ys},
                  {true, r.xs.hi, r.ys},
                  {false, r.ys.lo, r.xs},
                  {false, r.ys.hi, r.xs}};
    for (const EdgeDef& e : edges) {
      hits.clear();
      const Rect2 probe = e.vertical
                              ? Rect2{{e.fixed, e.fixed}, e.span}
                              : Rect2{e.span, {e.fixed, e.fixed}};
      d5_.query(probe, hits);
      cover.clear();
      for (std::uint32_t j : hits) {
        if (j == i) continue;
        const Interval other = e.vertical ? rects_[j].ys : rects_[j].xs;
        if (auto c = interval_intersect(e.span, other)) cover.push_back(*c);
      }
      const UnionExtremes ue = union_extremes(cover);
      if (!ue.any) continue;
      const Orientation o =
          e.vertical ? Orientation::vertical : Orientation::horizontal;
      add_witness(i, {o, e.fixed, ue.first});
      if (!(ue.last == ue.first)) add_witness(i, {o, e.fixed, ue.last});
    }
    // rightmost vertical edge of another rect crossing r top to bottom
    hits.clear();
    d2_.query(r.xs.lo, r.xs.hi, r.ys.lo, r.ys.hi, hits);
    bool have_v = false;
    Coord best_x = 0;
    for (std::uint32_t j : hits) {
      if (j == i) continue;
      for (Coord x : {rects_[j].xs.lo, rects_[j].xs.hi}) {
        if (!r.xs.contains(x) || !rects_[j].ys.contains(r.ys)) continue;
        if (!have_v || x > best_x) {
          best_x = x;
          have_v = true;
        }
      }
    }
    if (have_v) add_witness(i, {Orientation::vertical, best_x, r.ys});
    // topmost horizontal edge of another rect crossing r left to right
    hits.clear();
    d3_.query(r.ys.lo, r.ys.hi, r.xs.lo, r.xs.hi, hits);
    bool have_h = false;
    Coord best_y = 0;
    for (std::uint32_t j : hits) {
      if (j == i) continue;
      for (Coord y : {rects_[j].ys.lo, rects_[j].ys.hi}) {
        if (!r.ys.contains(y) || !rects_[j].xs.contains(r.xs)) continue;
        if (!have_h || y > best_y) {
          best_y = y;
          have_h = true;
        }
      }
    }
    if (have_h) add_witness(i, {Orientation::horizontal, best_y, r.xs});
  }

  d1_ = SegWindowing(wsegs_);
}

SeedSet RectIndex::seeds(const Rect2& q) const {
  SeedSet out;
  std::vector<std::uint32_t> hits;
  d1_.query(q, hits);
  for (std::uint32_t w : hits) out.push_back(wseg_owners_[w]);
  if (d3_.any(q.ys.lo, q.ys.hi, q.xs.lo, q.xs.hi) &&
      d2_.any(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi)) {
    d2_.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, out);
  }
  d4_.query({q.xs.lo, q.ys.lo}, out);
  d4_.query({q.xs.lo, q.ys.hi}, out);
  d4_.query({q.xs.hi, q.ys.lo}, out);
  d4_.query({q.xs.hi, q.ys.hi}, out);
  sort_unique(out);
  return out;
}

PairReport RectIndex::query(const Rect2& q) const {
  const SeedSet ss = seeds(q);
  PairReport out;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint32_t> hits;
  for (std::uint32_t i : ss) {
    const auto w = rect_intersect(rects_[i], q);
    if (!w) continue;
    hits.clear();
    d5_.query(*w, hits);
    for (std::uint32_t j : hits) {
      if (j == i) continue;
      auto ij = rect_intersect(rects_[i], rects_[j]);
      if (!ij || !ij->overlaps(q)) continue;
      const PairId p = make_pair_id(i, j);
      if (seen.insert(pair_key(p)).second) out.push_back(p);
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace rangepair

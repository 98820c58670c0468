#include "rangepair/seg_pairs.hpp"

#include <map>
#include <set>
#include <unordered_set>

namespace rangepair {

namespace {

struct Extremes {
  Coord lo = kCoordMax;
  Coord hi = kCoordMin;
  void add(Coord v) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  bool seen() const { return lo <= hi; }
};

}  // namespace

SegIndex::SegIndex(std::vector<AxisSeg2> segments)
    : segments_(std::move(segments)) {
  const std::uint32_t n = static_cast<std::uint32_t>(segments_.size());

  // Sweep over x with the active horizontals keyed by y. Every stabbed pair
  // updates both extremes, so the sweep costs O((n + I) log n).
  enum EventType : int { kInsert = 0, kQuery = 1, kErase = 2 };
  struct Event {
    Coord x;
    int type;
    std::uint32_t id;
  };
  std::vector<Event> events;
  for (std::uint32_t t = 0; t < n; ++t) {
    const AxisSeg2& s = segments_[t];
    if (s.horizontal()) {
      events.push_back({s.span.lo, kInsert, t});
      events.push_back({s.span.hi, kErase, t});
    } else {
      events.push_back({s.fixed, kQuery, t});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.type != b.type) return a.type < b.type;
    return a.id < b.id;
  });

  std::vector<Extremes> vext(n), hext(n);
  std::set<std::pair<Coord, std::uint32_t>> active;
  for (const Event& ev : events) {
    const AxisSeg2& s = segments_[ev.id];
    switch (ev.type) {
      case kInsert:
        active.insert({s.fixed, ev.id});
        break;
      case kErase:
        active.erase({s.fixed, ev.id});
        break;
      case kQuery: {
        auto it = active.lower_bound({s.span.lo, 0});
        for (; it != active.end() && it->first <= s.span.hi; ++it) {
          vext[ev.id].add(it->first);
          hext[it->second].add(s.fixed);
        }
        break;
      }
    }
  }

  for (std::uint32_t t = 0; t < n; ++t) {
    const AxisSeg2& s = segments_[t];
    if (s.horizontal()) {
      if (!hext[t].seen()) continue;
      witness_points_.push_back({hext[t].lo, s.fixed});
      witness_owners_.push_back(t);
      if (hext[t].hi != hext[t].lo) {
        witness_points_.push_back({hext[t].hi, s.fixed});
        witness_owners_.push_back(t);
      }
    } else {
      if (!vext[t].seen()) continue;
      witness_points_.push_back({s.fixed, vext[t].lo});
      witness_owners_.push_back(t);
      if (vext[t].hi != vext[t].lo) {
        witness_points_.push_back({s.fixed, vext[t].hi});
        witness_owners_.push_back(t);
      }
    }
  }

  std::vector<RangeReport2D<Coord>::Entry> wpts;
  wpts.reserve(witness_points_.size());
  for (std::size_t t = 0; t < witness_points_.size(); ++t) {
    wpts.push_back({witness_points_[t].x, witness_points_[t].y,
                    witness_owners_[t]});
  }
  d1_ = RangeReport2D<Coord>(std::move(wpts));

  std::vector<CrossReport::Entry> vs, hs;
  for (std::uint32_t t = 0; t < n; ++t) {
    const AxisSeg2& s = segments_[t];
    if (s.horizontal()) {
      hs.push_back({s.fixed, s.span, t});
    } else {
      vs.push_back({s.fixed, s.span, t});
    }
  }
  d2_ = CrossReport(vs);
  d3_ = CrossReport(hs);
}

SeedSet SegIndex::seeds(const Rect2& q) const {
  SeedSet out;
  d1_.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, out);
  // Full crossings: report the verticals only when both orientations cross.
  if (d3_.any(q.ys.lo, q.ys.hi, q.xs.lo, q.xs.hi) &&
      d2_.any(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi)) {
    d2_.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, out);
  }
  sort_unique(out);
  return out;
}

PairReport SegIndex::query(const Rect2& q) const {
  const SeedSet ss = seeds(q);
  PairReport out;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint32_t> hits;
  for (std::uint32_t i : ss) {
    const AxisSeg2& s = segments_[i];
    hits.clear();
    if (s.horizontal()) {
      if (!q.ys.contains(s.fixed)) continue;
      const auto span = interval_intersect(s.span, q.xs);
      if (!span) continue;
      d2_.query(span->lo, span->hi, s.fixed, s.fixed, hits);
    } else {
      if (!q.xs.contains(s.fixed)) continue;
      const auto span = interval_intersect(s.span, q.ys);
      if (!span) continue;
      d3_.query(span->lo, span->hi, s.fixed, s.fixed, hits);
    }
    for (std::uint32_t j : hits) {
      const PairId p = make_pair_id(i, j);
      if (seen.insert(pair_key(p)).second) out.push_back(p);
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace rangepair

#include "rangepair/ortho.hpp"

#include <algorithm>
#include <numeric>

namespace rangepair {

// --- StabTree -------------------------------------------------------------

StabTree::StabTree(const std::vector<Interval>& ivs) {
  coords_.reserve(ivs.size() * 2);
  for (const Interval& iv : ivs) {
    coords_.push_back(iv.lo);
    coords_.push_back(iv.hi);
  }
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
  if (coords_.empty()) return;
  const std::size_t positions = 2 * coords_.size() - 1;
  build(0, positions);
  for (std::uint32_t t = 0; t < ivs.size(); ++t) {
    const std::size_t l =
        2 * (std::lower_bound(coords_.begin(), coords_.end(), ivs[t].lo) -
             coords_.begin());
    const std::size_t r =
        2 * (std::lower_bound(coords_.begin(), coords_.end(), ivs[t].hi) -
             coords_.begin());
    assign(0, l, r + 1, t);
  }
}

int StabTree::build(std::size_t lo, std::size_t hi) {
  const int idx = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[idx].lo = lo;
  nodes_[idx].hi = hi;
  if (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int l = build(lo, mid);
    const int r = build(mid, hi);
    nodes_[idx].left = l;
    nodes_[idx].right = r;
  }
  return idx;
}

void StabTree::assign(int idx, std::size_t lo, std::size_t hi,
                      std::uint32_t item) {
  Node& nd = nodes_[idx];
  if (nd.hi <= lo || hi <= nd.lo) return;
  if (lo <= nd.lo && nd.hi <= hi) {
    nd.items.push_back(item);
    return;
  }
  assign(nd.left, lo, hi, item);
  assign(nd.right, lo, hi, item);
}

void StabTree::path(Coord p, std::vector<std::uint32_t>& out_nodes) const {
  if (coords_.empty()) return;
  const auto it = std::lower_bound(coords_.begin(), coords_.end(), p);
  std::size_t pos;
  if (it != coords_.end() && *it == p) {
    pos = 2 * static_cast<std::size_t>(it - coords_.begin());
  } else if (it == coords_.begin() || it == coords_.end()) {
    return;  // outside the hull: no stored interval can contain p
  } else {
    pos = 2 * static_cast<std::size_t>(it - coords_.begin()) - 1;
  }
  int idx = 0;
  while (idx >= 0) {
    const Node& nd = nodes_[static_cast<std::size_t>(idx)];
    out_nodes.push_back(static_cast<std::uint32_t>(idx));
    if (nd.left < 0) break;
    idx = (pos < nodes_[nd.left].hi) ? nd.left : nd.right;
  }
}

// --- CrossReport ----------------------------------------------------------

CrossReport::CrossReport(const std::vector<Entry>& segs) {
  std::vector<RangeReport3D<Coord>::Entry> pts;
  pts.reserve(segs.size());
  for (const Entry& e : segs) {
    pts.push_back({e.fixed, e.span.lo, e.span.hi, e.id});
  }
  rr_ = RangeReport3D<Coord>(std::move(pts));
}

void CrossReport::query(Coord flo, Coord fhi, Coord slo, Coord shi,
                        std::vector<std::uint32_t>& out) const {
  rr_.query(flo, fhi, kCoordMin, slo, shi, kCoordMax, out);
}

bool CrossReport::any(Coord flo, Coord fhi, Coord slo, Coord shi) const {
  return rr_.any(flo, fhi, kCoordMin, slo, shi, kCoordMax);
}

// --- PointEnclosure2D -----------------------------------------------------

PointEnclosure2D::PointEnclosure2D(const std::vector<Rect2>& rects)
    : PointEnclosure2D(rects, {}) {}

PointEnclosure2D::PointEnclosure2D(const std::vector<Rect2>& rects,
                                   const std::vector<std::uint32_t>& ids) {
  std::vector<Interval> xiv;
  xiv.reserve(rects.size());
  for (const Rect2& r : rects) xiv.push_back(r.xs);
  xt_ = StabTree(xiv);
  psts_.reserve(xt_.node_count());
  for (std::size_t nd = 0; nd < xt_.node_count(); ++nd) {
    std::vector<PrioritySearchTree::Item> items;
    items.reserve(xt_.items_at(nd).size());
    for (std::uint32_t t : xt_.items_at(nd)) {
      const std::uint32_t id = ids.empty() ? t : ids[t];
      items.push_back({rects[t].ys.lo, rects[t].ys.hi, id});
    }
    psts_.emplace_back(std::move(items));
  }
}

void PointEnclosure2D::query(Point2 p, std::vector<std::uint32_t>& out) const {
  std::vector<std::uint32_t> nodes;
  xt_.path(p.x, nodes);
  for (std::uint32_t nd : nodes) psts_[nd].query(p.y, p.y, out);
}

std::size_t PointEnclosure2D::entry_count() const {
  std::size_t c = 0;
  for (const auto& pst : psts_) c += pst.size();
  return c;
}

// --- PointEnclosure3D -----------------------------------------------------

PointEnclosure3D::PointEnclosure3D(const std::vector<Box3>& boxes)
    : PointEnclosure3D(boxes, {}) {}

PointEnclosure3D::PointEnclosure3D(const std::vector<Box3>& boxes,
                                   const std::vector<std::uint32_t>& ids) {
  std::vector<Interval> ziv;
  ziv.reserve(boxes.size());
  for (const Box3& b : boxes) ziv.push_back(b.zs);
  zt_ = StabTree(ziv);
  pe_.reserve(zt_.node_count());
  for (std::size_t nd = 0; nd < zt_.node_count(); ++nd) {
    std::vector<Rect2> sub;
    std::vector<std::uint32_t> sub_ids;
    sub.reserve(zt_.items_at(nd).size());
    for (std::uint32_t t : zt_.items_at(nd)) {
      sub.push_back({boxes[t].xs, boxes[t].ys});
      sub_ids.push_back(ids.empty() ? t : ids[t]);
    }
    pe_.emplace_back(sub, sub_ids);
  }
}

void PointEnclosure3D::query(Point3 p, std::vector<std::uint32_t>& out) const {
  std::vector<std::uint32_t> nodes;
  zt_.path(p.z, nodes);
  for (std::uint32_t nd : nodes) pe_[nd].query({p.x, p.y}, out);
}

std::size_t PointEnclosure3D::entry_count() const {
  std::size_t c = 0;
  for (const auto& pe : pe_) c += pe.entry_count();
  return c;
}

// --- SegWindowing ---------------------------------------------------------

SegWindowing::SegWindowing(const std::vector<AxisSeg2>& segs) {
  std::vector<RangeReport2D<Coord>::Entry> eps;
  std::vector<CrossReport::Entry> vs, hs;
  eps.reserve(segs.size() * 2);
  for (std::uint32_t t = 0; t < segs.size(); ++t) {
    const AxisSeg2& s = segs[t];
    if (s.horizontal()) {
      eps.push_back({s.span.lo, s.fixed, t});
      if (s.span.hi != s.span.lo) eps.push_back({s.span.hi, s.fixed, t});
      hs.push_back({s.fixed, s.span, t});
    } else {
      eps.push_back({s.fixed, s.span.lo, t});
      if (s.span.hi != s.span.lo) eps.push_back({s.fixed, s.span.hi, t});
      vs.push_back({s.fixed, s.span, t});
    }
  }
  endpoints_ = RangeReport2D<Coord>(std::move(eps));
  vert_ = CrossReport(vs);
  horiz_ = CrossReport(hs);
}

void SegWindowing::query(const Rect2& q, std::vector<std::uint32_t>& out) const {
  const std::size_t start = out.size();
  endpoints_.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, out);
  vert_.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, out);
  horiz_.query(q.ys.lo, q.ys.hi, q.xs.lo, q.xs.hi, out);
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  out.erase(std::unique(out.begin() + static_cast<std::ptrdiff_t>(start), out.end()),
            out.end());
}

std::size_t SegWindowing::entry_count() const {
  return endpoints_.entry_count() + vert_.entry_count() + horiz_.entry_count();
}

// --- RectIntersect2D -------------------------------------------------------

RectIntersect2D::RectIntersect2D(const std::vector<Rect2>& rects)
    : RectIntersect2D(rects, {}) {}

RectIntersect2D::RectIntersect2D(const std::vector<Rect2>& rects,
                                 const std::vector<std::uint32_t>& ids) {
  std::vector<RangeReport2D<Coord>::Entry> cs;
  std::vector<CrossReport::Entry> ve, he;
  cs.reserve(rects.size() * 4);
  for (std::uint32_t t = 0; t < rects.size(); ++t) {
    const Rect2& r = rects[t];
    const std::uint32_t id = ids.empty() ? t : ids[t];
    cs.push_back({r.xs.lo, r.ys.lo, id});
    cs.push_back({r.xs.lo, r.ys.hi, id});
    cs.push_back({r.xs.hi, r.ys.lo, id});
    cs.push_back({r.xs.hi, r.ys.hi, id});
    ve.push_back({r.xs.lo, r.ys, id});
    ve.push_back({r.xs.hi, r.ys, id});
    he.push_back({r.ys.lo, r.xs, id});
    he.push_back({r.ys.hi, r.xs, id});
  }
  corners_ = RangeReport2D<Coord>(std::move(cs));
  encl_ = PointEnclosure2D(rects, ids);
  vedges_ = CrossReport(ve);
  hedges_ = CrossReport(he);
}

void RectIntersect2D::query(const Rect2& q,
                            std::vector<std::uint32_t>& out) const {
  const std::size_t start = out.size();
  // corners of a stored rect inside q
  corners_.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, out);
  // corners of q inside a stored rect
  encl_.query({q.xs.lo, q.ys.lo}, out);
  encl_.query({q.xs.lo, q.ys.hi}, out);
  encl_.query({q.xs.hi, q.ys.lo}, out);
  encl_.query({q.xs.hi, q.ys.hi}, out);
  // stored edges crossing an edge of q (covers band overlaps)
  vedges_.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.lo, out);
  vedges_.query(q.xs.lo, q.xs.hi, q.ys.hi, q.ys.hi, out);
  hedges_.query(q.ys.lo, q.ys.hi, q.xs.lo, q.xs.lo, out);
  hedges_.query(q.ys.lo, q.ys.hi, q.xs.hi, q.xs.hi, out);
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  out.erase(std::unique(out.begin() + static_cast<std::ptrdiff_t>(start), out.end()),
            out.end());
}

std::size_t RectIntersect2D::entry_count() const {
  return corners_.entry_count() + encl_.entry_count() + vedges_.entry_count() +
         hedges_.entry_count();
}

// --- BoxIntersect3D ---------------------------------------------------------

BoxIntersect3D::BoxIntersect3D(const std::vector<Box3>& boxes)
    : BoxIntersect3D(boxes, {}) {}

BoxIntersect3D::BoxIntersect3D(const std::vector<Box3>& boxes,
                               const std::vector<std::uint32_t>& ids) {
  std::vector<Interval> ziv;
  ziv.reserve(boxes.size());
  for (const Box3& b : boxes) ziv.push_back(b.zs);
  zt_ = StabTree(ziv);
  stab_rects_.reserve(zt_.node_count());
  for (std::size_t nd = 0; nd < zt_.node_count(); ++nd) {
    std::vector<Rect2> sub;
    std::vector<std::uint32_t> sub_ids;
    for (std::uint32_t t : zt_.items_at(nd)) {
      sub.push_back({boxes[t].xs, boxes[t].ys});
      sub_ids.push_back(ids.empty() ? t : ids[t]);
    }
    stab_rects_.emplace_back(sub, sub_ids);
  }

  std::vector<std::uint32_t> order(boxes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return boxes[a].zs.lo < boxes[b].zs.lo;
  });
  zlo_sorted_.reserve(boxes.size());
  for (std::uint32_t t : order) zlo_sorted_.push_back(boxes[t].zs.lo);
  if (!boxes.empty()) build_range(0, boxes.size(), boxes, ids, order);
}

int BoxIntersect3D::build_range(std::size_t lo, std::size_t hi,
                                const std::vector<Box3>& boxes,
                                const std::vector<std::uint32_t>& ids,
                                const std::vector<std::uint32_t>& order) {
  const int idx = static_cast<int>(rnodes_.size());
  rnodes_.emplace_back();
  rnodes_[idx].lo = lo;
  rnodes_[idx].hi = hi;
  std::vector<Rect2> sub;
  std::vector<std::uint32_t> sub_ids;
  sub.reserve(hi - lo);
  for (std::size_t t = lo; t < hi; ++t) {
    const std::uint32_t b = order[t];
    sub.push_back({boxes[b].xs, boxes[b].ys});
    sub_ids.push_back(ids.empty() ? b : ids[b]);
  }
  {
    RectIntersect2D r2(sub, sub_ids);
    rnodes_[idx].rects = std::move(r2);
  }
  if (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int l = build_range(lo, mid, boxes, ids, order);
    const int r = build_range(mid, hi, boxes, ids, order);
    rnodes_[idx].left = l;
    rnodes_[idx].right = r;
  }
  return idx;
}

void BoxIntersect3D::visit_range(int idx, std::size_t lo, std::size_t hi,
                                 const Rect2& proj,
                                 std::vector<std::uint32_t>& out) const {
  const RNode& nd = rnodes_[static_cast<std::size_t>(idx)];
  if (nd.hi <= lo || hi <= nd.lo) return;
  if (lo <= nd.lo && nd.hi <= hi) {
    nd.rects.query(proj, out);
    return;
  }
  if (nd.left >= 0) visit_range(nd.left, lo, hi, proj, out);
  if (nd.right >= 0) visit_range(nd.right, lo, hi, proj, out);
}

void BoxIntersect3D::query(const Box3& q, std::vector<std::uint32_t>& out) const {
  const Rect2 proj{q.xs, q.ys};
  // boxes whose z-interval contains q.zs.lo
  std::vector<std::uint32_t> nodes;
  zt_.path(q.zs.lo, nodes);
  for (std::uint32_t nd : nodes) stab_rects_[nd].query(proj, out);
  // boxes starting strictly inside (q.zs.lo, q.zs.hi]
  if (!zlo_sorted_.empty() && q.zs.lo < kCoordMax) {
    const std::size_t lo =
        std::lower_bound(zlo_sorted_.begin(), zlo_sorted_.end(), q.zs.lo + 1) -
        zlo_sorted_.begin();
    const std::size_t hi =
        std::upper_bound(zlo_sorted_.begin(), zlo_sorted_.end(), q.zs.hi) -
        zlo_sorted_.begin();
    if (lo < hi) visit_range(0, lo, hi, proj, out);
  }
}

std::size_t BoxIntersect3D::entry_count() const {
  std::size_t c = 0;
  for (const auto& r : stab_rects_) c += r.entry_count();
  for (const auto& r : rnodes_) c += r.rects.entry_count();
  return c;
}

}  // namespace rangepair

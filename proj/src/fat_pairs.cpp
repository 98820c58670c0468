#include "rangepair/fat_pairs.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace rangepair {

namespace {

// Cyclic permutation sending `axis` to the x slot.
Box3 permute_cycle(const Box3& b, int axis) {
  switch (axis) {
    case 1:
      return {b.ys, b.zs, b.xs};
    case 2:
      return {b.zs, b.xs, b.ys};
    default:
      return b;
  }
}

// Point with coordinate `along` on `axis`, c1 on the next axis (cyclically),
// c2 on the one after.
Point3 make_axis_point(int axis, Coord along, Coord c1, Coord c2) {
  switch (axis) {
    case 0:
      return {along, c1, c2};
    case 1:
      return {c2, along, c1};
    default:
      return {c1, c2, along};
  }
}

}  // namespace

double box_aspect(const Box3& b) {
  const Coord lens[3] = {b.xs.hi - b.xs.lo, b.ys.hi - b.ys.lo,
                         b.zs.hi - b.zs.lo};
  Coord mn = lens[0], mx = lens[0];
  for (Coord l : lens) {
    mn = std::min(mn, l);
    mx = std::max(mx, l);
  }
  if (mn == 0) {
    return mx == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(mx) / static_cast<double>(mn);
}

std::vector<Box3> cover_box(const Box3& b, double alpha) {
  if (box_aspect(b) > alpha) {
    throw std::invalid_argument("cover_box: aspect ratio exceeds alpha");
  }
  const Coord lens[3] = {b.xs.hi - b.xs.lo, b.ys.hi - b.ys.lo,
                         b.zs.hi - b.zs.lo};
  const Coord edge = std::min({lens[0], lens[1], lens[2]});
  if (edge == 0) return {b};  // point box
  const Coord los[3] = {b.xs.lo, b.ys.lo, b.zs.lo};
  Coord counts[3];
  std::vector<Coord> starts[3];
  for (int a = 0; a < 3; ++a) {
    counts[a] = (lens[a] + edge - 1) / edge;
    for (Coord k = 0; k < counts[a]; ++k) {
      starts[a].push_back(std::min(los[a] + k * edge, los[a] + lens[a] - edge));
    }
  }
  std::vector<Box3> out;
  out.reserve(static_cast<std::size_t>(counts[0] * counts[1] * counts[2]));
  for (Coord x : starts[0]) {
    for (Coord y : starts[1]) {
      for (Coord z : starts[2]) {
        out.push_back(box(x, x + edge, y, y + edge, z, z + edge));
      }
    }
  }
  return out;
}

FatIndex::FatIndex(std::vector<Box3> boxes, double alpha)
    : boxes_(std::move(boxes)), alpha_(alpha) {
  const std::uint32_t n = static_cast<std::uint32_t>(boxes_.size());
  cover_.cubes_of.resize(n);
  for (std::uint32_t t = 0; t < n; ++t) {
    for (const Box3& c : cover_box(boxes_[t], alpha_)) {
      cover_.cubes_of[t].push_back(
          static_cast<std::uint32_t>(cover_.cubes.size()));
      cover_.cubes.push_back(c);
      cover_.source.push_back(t);
    }
  }
  const std::size_t m = cover_.cubes.size();

  // Witness points per cube. Partner enumeration is a plain all-pairs scan;
  // only genuinely intersecting cross-source cubes contribute work.
  std::vector<std::vector<std::uint32_t>> partners(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) {
      if (cover_.source[a] == cover_.source[b]) continue;
      if (cover_.cubes[a].overlaps(cover_.cubes[b])) {
        partners[a].push_back(b);
        partners[b].push_back(a);
      }
    }
  }
  for (std::uint32_t c = 0; c < m; ++c) {
    if (partners[c].empty()) continue;
    const Box3& cb = cover_.cubes[c];
    std::vector<Point3> pts;

    // edges: extremes of the covered part of each of the 12 edges
    struct EdgeDef {
      int axis;          // axis the edge runs along
      Coord f1, f2;      // the two fixed coordinates (other axes, in order)
    };
    const Interval axes[3] = {cb.xs, cb.ys, cb.zs};
    for (int a = 0; a < 3; ++a) {
      const Interval u = axes[(a + 1) % 3];
      const Interval v = axes[(a + 2) % 3];
      for (Coord f1 : {u.lo, u.hi}) {
        for (Coord f2 : {v.lo, v.hi}) {
          Coord mn = kCoordMax, mx = kCoordMin;
          for (std::uint32_t p : partners[c]) {
            const Box3 pb = permute_cycle(cover_.cubes[p], a);
            if (!pb.ys.contains(f1) || !pb.zs.contains(f2)) continue;
            const auto ov = interval_intersect(axes[a], pb.xs);
            if (!ov) continue;
            mn = std::min(mn, ov->lo);
            mx = std::max(mx, ov->hi);
          }
          if (mn > mx) continue;
          pts.push_back(make_axis_point(a, mn, f1, f2));
          if (mx != mn) pts.push_back(make_axis_point(a, mx, f1, f2));
        }
      }
    }

    // faces: extreme points of the covered part in the two in-face axes
    for (int a = 0; a < 3; ++a) {
      const Interval u = axes[(a + 1) % 3];
      const Interval v = axes[(a + 2) % 3];
      for (Coord off : {axes[a].lo, axes[a].hi}) {
        bool any = false;
        Coord best_ulo = 0, best_uhi = 0, best_vlo = 0, best_vhi = 0;
        Point3 p_ulo, p_uhi, p_vlo, p_vhi;
        for (std::uint32_t p : partners[c]) {
          const Box3 pb = permute_cycle(cover_.cubes[p], a);
          if (!pb.xs.contains(off)) continue;
          const auto uo = interval_intersect(u, pb.ys);
          const auto vo = interval_intersect(v, pb.zs);
          if (!uo || !vo) continue;
          if (!any || uo->lo < best_ulo) {
            best_ulo = uo->lo;
            p_ulo = make_axis_point(a, off, uo->lo, vo->lo);
          }
          if (!any || uo->hi > best_uhi) {
            best_uhi = uo->hi;
            p_uhi = make_axis_point(a, off, uo->hi, vo->lo);
          }
          if (!any || vo->lo < best_vlo) {
            best_vlo = vo->lo;
            p_vlo = make_axis_point(a, off, uo->lo, vo->lo);
          }
          if (!any || vo->hi > best_vhi) {
            best_vhi = vo->hi;
            p_vhi = make_axis_point(a, off, uo->lo, vo->hi);
          }
          any = true;
        }
        if (!any) continue;
        pts.push_back(p_ulo);
        pts.push_back(p_uhi);
        pts.push_back(p_vlo);
        pts.push_back(p_vhi);
      }
    }

    std::sort(pts.begin(), pts.end(), [](const Point3& a, const Point3& b) {
      if (a.x != b.x) return a.x < b.x;
      if (a.y != b.y) return a.y < b.y;
      return a.z < b.z;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Point3& p : pts) {
      wpts_.push_back(p);
      wpt_cube_.push_back(c);
    }
  }

  std::vector<RangeReport3D<Coord>::Entry> wentries;
  wentries.reserve(wpts_.size());
  for (std::size_t t = 0; t < wpts_.size(); ++t) {
    wentries.push_back({wpts_[t].x, wpts_[t].y, wpts_[t].z,
                        static_cast<std::uint32_t>(t)});
  }
  d1_ = RangeReport3D<Coord>(std::move(wentries));
  d2_ = PointEnclosure3D(cover_.cubes);
  dstar_ = BoxIntersect3D(boxes_);
}

void FatIndex::check_query_aspect(const Box3& q) const {
  if (box_aspect(q) > alpha_) {
    throw std::invalid_argument("query box aspect ratio exceeds alpha");
  }
}

SeedSet FatIndex::seeds(const Box3& q) const {
  check_query_aspect(q);
  SeedSet out;
  std::vector<std::uint32_t> hits;
  for (const Box3& qc : cover_box(q, alpha_)) {
    hits.clear();
    d1_.query(qc.xs.lo, qc.xs.hi, qc.ys.lo, qc.ys.hi, qc.zs.lo, qc.zs.hi,
              hits);
    for (std::uint32_t w : hits) {
      out.push_back(cover_.source[wpt_cube_[w]]);
    }
    hits.clear();
    const Point3 corners[8] = {
        {qc.xs.lo, qc.ys.lo, qc.zs.lo}, {qc.xs.lo, qc.ys.lo, qc.zs.hi},
        {qc.xs.lo, qc.ys.hi, qc.zs.lo}, {qc.xs.lo, qc.ys.hi, qc.zs.hi},
        {qc.xs.hi, qc.ys.lo, qc.zs.lo}, {qc.xs.hi, qc.ys.lo, qc.zs.hi},
        {qc.xs.hi, qc.ys.hi, qc.zs.lo}, {qc.xs.hi, qc.ys.hi, qc.zs.hi}};
    for (const Point3& p : corners) d2_.query(p, hits);
    for (std::uint32_t c : hits) out.push_back(cover_.source[c]);
  }
  sort_unique(out);
  return out;
}

PairReport FatIndex::query(const Box3& q) const {
  const SeedSet ss = seeds(q);
  PairReport out;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint32_t> hits;
  for (std::uint32_t i : ss) {
    const auto w = box_intersect(boxes_[i], q);
    if (!w) continue;
    hits.clear();
    dstar_.query(*w, hits);
    for (std::uint32_t j : hits) {
      if (j == i) continue;
      const PairId p = make_pair_id(i, j);
      auto ij = box_intersect(boxes_[p.i], boxes_[p.j]);
      if (!ij || !ij->overlaps(q)) continue;
      if (seen.insert(pair_key(p)).second) out.push_back(p);
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace rangepair

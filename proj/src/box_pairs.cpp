#include "rangepair/box_pairs.hpp"

#include <cmath>
#include <unordered_set>

namespace rangepair {

namespace {

std::size_t cluster_chunk(std::size_t n) {
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
}

}  // namespace

// --- ClusterFamily ----------------------------------------------------------

void ClusterFamily::build(const std::vector<Box3>& boxes, int a) {
  axis = a;
  const std::uint32_t n = static_cast<std::uint32_t>(boxes.size());
  faces.clear();
  edges.clear();
  clusters.clear();
  faces.reserve(2 * n);
  edges.reserve(4 * n);
  for (std::uint32_t t = 0; t < n; ++t) {
    const Box3 b = permute_box(boxes[t], a);
    const Rect2 r{b.xs, b.ys};
    faces.push_back({b.zs.lo, r, t});
    faces.push_back({b.zs.hi, r, t});
    edges.push_back({{b.xs.lo, b.ys.lo}, b.zs, t});
    edges.push_back({{b.xs.lo, b.ys.hi}, b.zs, t});
    edges.push_back({{b.xs.hi, b.ys.lo}, b.zs, t});
    edges.push_back({{b.xs.hi, b.ys.hi}, b.zs, t});
  }
  std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
    if (x.offset != y.offset) return x.offset < y.offset;
    return x.box < y.box;
  });

  const std::size_t chunk = cluster_chunk(n);
  for (std::size_t begin = 0; begin < faces.size(); begin += chunk) {
    const std::size_t end = std::min(begin + chunk, faces.size());
    Cluster c;
    c.lo = faces[begin].offset;
    c.hi = faces[end - 1].offset;
    c.face_begin = begin;
    c.face_end = end;
    clusters.push_back(std::move(c));
  }

  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    for (Cluster& c : clusters) {
      if (c.lo > ed.span.hi || c.hi < ed.span.lo) continue;
      for (std::size_t f = c.face_begin; f < c.face_end; ++f) {
        const Face& fc = faces[f];
        if (fc.box == ed.box) continue;
        if (ed.span.contains(fc.offset) && fc.rect.contains(ed.proj)) {
          c.edge_ids.push_back(e);
          break;
        }
      }
    }
  }
  for (Cluster& c : clusters) {
    std::vector<RangeReport2D<Coord>::Entry> pts;
    pts.reserve(c.edge_ids.size());
    for (std::uint32_t e : c.edge_ids) {
      pts.push_back({edges[e].proj.x, edges[e].proj.y, edges[e].box});
    }
    c.edges = RangeReport2D<Coord>(std::move(pts));
  }
}

void ClusterFamily::collect_seeds(const Box3& q, SeedSet& seeds) const {
  const Coord z1 = q.zs.lo, z2 = q.zs.hi;
  for (const Cluster& c : clusters) {
    const bool at_boundary =
        (c.lo <= z1 && z1 <= c.hi) || (c.lo <= z2 && z2 <= c.hi);
    if (at_boundary) {
      for (std::size_t f = c.face_begin; f < c.face_end; ++f) {
        seeds.push_back(faces[f].box);
      }
    } else if (z1 < c.lo && c.hi < z2) {
      c.edges.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, seeds);
    }
  }
}

// --- SlabFamily ---------------------------------------------------------------

void SlabFamily::build(const std::vector<Box3>& boxes, int a) {
  axis = a;
  slabs.clear();
  const std::size_t n = boxes.size();
  std::vector<Coord> offsets;
  offsets.reserve(2 * n);
  std::vector<Interval> spans(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Box3 b = permute_box(boxes[t], a);
    spans[t] = b.zs;
    offsets.push_back(b.zs.lo);
    offsets.push_back(b.zs.hi);
  }
  std::sort(offsets.begin(), offsets.end());
  const std::size_t chunk = cluster_chunk(n);
  std::vector<Coord> planes;
  for (std::size_t r = chunk; r <= offsets.size(); r += chunk) {
    planes.push_back(offsets[r - 1]);
  }
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());

  slabs.resize(planes.size() + 1);
  for (std::size_t s = 0; s < slabs.size(); ++s) {
    slabs[s].lo = (s == 0) ? kCoordMin : planes[s - 1];
    slabs[s].hi = (s == planes.size()) ? kCoordMax : planes[s];
  }

  auto slab_of = [&](Coord w) {
    std::size_t lo = 0, hi = planes.size();
    while (lo < hi) {  // first slab with hi >= w
      const std::size_t mid = (lo + hi) / 2;
      if (slabs[mid].hi >= w) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  };

  std::vector<std::vector<std::uint32_t>> longs(slabs.size());
  for (std::uint32_t t = 0; t < n; ++t) {
    const Interval z = spans[t];
    // faces may sit on a splitting plane, in which case they are short for
    // both adjacent slabs
    for (Coord w : {z.lo, z.hi}) {
      std::size_t s = slab_of(w);
      while (s < slabs.size() && slabs[s].lo <= w) {
        slabs[s].short_boxes.push_back(t);
        ++s;
      }
    }
    for (std::size_t s = 0; s < slabs.size(); ++s) {
      if (z.lo <= slabs[s].lo && slabs[s].hi <= z.hi) longs[s].push_back(t);
    }
  }
  for (std::size_t s = 0; s < slabs.size(); ++s) {
    sort_unique(slabs[s].short_boxes);
    slabs[s].long_ids = std::move(longs[s]);
    std::vector<Rect2> projs;
    projs.reserve(slabs[s].long_ids.size());
    for (std::uint32_t t : slabs[s].long_ids) {
      const Box3 b = permute_box(boxes[t], a);
      projs.push_back({b.xs, b.ys});
    }
    slabs[s].long_rects = RectIndex(std::move(projs));
  }
}

void SlabFamily::collect_face(Coord offset, const Rect2& proj_q, SeedSet& seeds,
                              PairReport& direct) const {
  std::size_t lo = 0, hi = slabs.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (slabs[mid].hi >= offset) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Slab& s = slabs[lo];
  seeds.insert(seeds.end(), s.short_boxes.begin(), s.short_boxes.end());
  const PairReport proj_pairs = s.long_rects.query(proj_q);
  for (const PairId& p : proj_pairs) {
    direct.push_back(make_pair_id(s.long_ids[p.i], s.long_ids[p.j]));
  }
}

// --- BoxIndex ------------------------------------------------------------------

BoxIndex::BoxIndex(std::vector<Box3> boxes) : boxes_(std::move(boxes)) {
  const std::uint32_t n = static_cast<std::uint32_t>(boxes_.size());
  enclosure_ = PointEnclosure3D(boxes_);

  std::vector<std::uint32_t> hits;
  for (std::uint32_t t = 0; t < n; ++t) {
    const Box3& b = boxes_[t];
    const Point3 vs[8] = {
        {b.xs.lo, b.ys.lo, b.zs.lo}, {b.xs.lo, b.ys.lo, b.zs.hi},
        {b.xs.lo, b.ys.hi, b.zs.lo}, {b.xs.lo, b.ys.hi, b.zs.hi},
        {b.xs.hi, b.ys.lo, b.zs.lo}, {b.xs.hi, b.ys.lo, b.zs.hi},
        {b.xs.hi, b.ys.hi, b.zs.lo}, {b.xs.hi, b.ys.hi, b.zs.hi}};
    for (const Point3& v : vs) {
      hits.clear();
      enclosure_.query(v, hits);
      for (std::uint32_t j : hits) {
        if (j != t) {
          wverts_.push_back(v);
          wvert_owners_.push_back(t);
          break;
        }
      }
    }
  }
  std::vector<RangeReport3D<Coord>::Entry> pts;
  pts.reserve(wverts_.size());
  for (std::size_t t = 0; t < wverts_.size(); ++t) {
    pts.push_back({wverts_[t].x, wverts_[t].y, wverts_[t].z, wvert_owners_[t]});
  }
  wvert_tree_ = RangeReport3D<Coord>(std::move(pts));

  for (int a = 0; a < 3; ++a) {
    clusters_[a].build(boxes_, a);
    slabs_[a].build(boxes_, a);
  }
  dstar_ = BoxIntersect3D(boxes_);
}

std::pair<SeedSet, PairReport> BoxIndex::seeds_and_direct(const Box3& q) const {
  SeedSet seeds;
  PairReport direct;
  // boxes containing the fixed (minimum) corner of q
  enclosure_.query({q.xs.lo, q.ys.lo, q.zs.lo}, seeds);
  // witness vertices inside q
  wvert_tree_.query(q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, q.zs.lo, q.zs.hi,
                    seeds);
  for (int a = 0; a < 3; ++a) {
    const Box3 pq = permute_box(q, a);
    clusters_[a].collect_seeds(pq, seeds);
    const Rect2 proj{pq.xs, pq.ys};
    slabs_[a].collect_face(pq.zs.lo, proj, seeds, direct);
    slabs_[a].collect_face(pq.zs.hi, proj, seeds, direct);
  }
  sort_unique(seeds);
  sort_unique(direct);
  return {std::move(seeds), std::move(direct)};
}

PairReport BoxIndex::query(const Box3& q) const {
  auto [seeds, direct] = seeds_and_direct(q);
  PairReport out;
  std::unordered_set<std::uint64_t> seen;
  auto emit = [&](std::uint32_t a, std::uint32_t b) {
    const PairId p = make_pair_id(a, b);
    auto ij = box_intersect(boxes_[p.i], boxes_[p.j]);
    if (!ij || !ij->overlaps(q)) return;
    if (seen.insert(pair_key(p)).second) out.push_back(p);
  };
  for (const PairId& p : direct) emit(p.i, p.j);
  std::vector<std::uint32_t> corner;
  enclosure_.query({q.xs.lo, q.ys.lo, q.zs.lo}, corner);
  for (std::size_t a = 0; a < corner.size(); ++a) {
    for (std::size_t b = a + 1; b < corner.size(); ++b) {
      emit(corner[a], corner[b]);
    }
  }
  std::vector<std::uint32_t> hits;
  for (std::uint32_t i : seeds) {
    const auto w = box_intersect(boxes_[i], q);
    if (!w) continue;
    hits.clear();
    dstar_.query(*w, hits);
    for (std::uint32_t j : hits) {
      if (j != i) emit(i, j);
    }
  }
  sort_unique(out);
  return out;
}

std::size_t BoxIndex::entry_count() const {
  std::size_t c = enclosure_.entry_count() + wvert_tree_.entry_count() +
                  dstar_.entry_count();
  for (int a = 0; a < 3; ++a) {
    for (const auto& cl : clusters_[a].clusters) c += cl.edges.entry_count();
    for (const auto& s : slabs_[a].slabs) c += s.long_rects.entry_count();
  }
  return c;
}

}  // namespace rangepair

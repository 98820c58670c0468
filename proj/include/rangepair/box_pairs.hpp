#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rangepair/geom.hpp"
#include "rangepair/ortho.hpp"
#include "rangepair/range_tree.hpp"
#include "rangepair/rect_pairs.hpp"

namespace rangepair {

// One of the three perpendicular edge/face pairings: edges parallel to
// `axis`, faces perpendicular to it. Coordinates are cyclically permuted so
// the family axis plays the role of z.
struct ClusterFamily {
  struct Face {
    Coord offset = 0;
    Rect2 rect;
    std::uint32_t box = 0;
  };
  struct Edge {
    Point2 proj;
    Interval span;
    std::uint32_t box = 0;
  };
  struct Cluster {
    Coord lo = 0, hi = 0;             // offset range of the member faces
    std::size_t face_begin = 0, face_end = 0;
    std::vector<std::uint32_t> edge_ids;  // E_t, edges meeting a face of the
                                          // cluster from a different box
    RangeReport2D<Coord> edges;           // their projections, payload box id
  };

  int axis = 2;
  std::vector<Face> faces;  // sorted by (offset, box)
  std::vector<Edge> edges;  // 4 per box
  std::vector<Cluster> clusters;

  void build(const std::vector<Box3>& boxes, int axis);
  // Boundary clusters are dumped wholesale, strictly interior clusters are
  // queried with the projected range.
  void collect_seeds(const Box3& permuted_q, SeedSet& seeds) const;
};

// Slab decomposition perpendicular to `axis` with splitting planes at every
// sqrt(n)-th face. A box overlapping a slab is short (a face inside it) or
// long (crosses it); long boxes project into a planar pair engine.
struct SlabFamily {
  struct Slab {
    Coord lo = kCoordMin, hi = kCoordMax;
    std::vector<std::uint32_t> short_boxes;
    std::vector<std::uint32_t> long_ids;  // projection index -> box id
    RectIndex long_rects;
  };

  int axis = 2;
  std::vector<Slab> slabs;

  void build(const std::vector<Box3>& boxes, int axis);
  // Handles one face of the query (at `offset` along the family axis).
  void collect_face(Coord offset, const Rect2& proj_q, SeedSet& seeds,
                    PairReport& direct) const;
};

// Pairwise box intersections inside a query box. Pairs whose common
// intersection contains the query corner are reported directly from a
// point-enclosure query; pairs inside the query are caught through witness
// vertices and the cluster structures; pairs meeting a query face through
// the slab structures.
class BoxIndex {
 public:
  BoxIndex() = default;
  explicit BoxIndex(std::vector<Box3> boxes);

  std::pair<SeedSet, PairReport> seeds_and_direct(const Box3& q) const;
  PairReport query(const Box3& q) const;

  const std::vector<Box3>& boxes() const { return boxes_; }
  const std::vector<Point3>& witness_vertices() const { return wverts_; }
  const std::vector<std::uint32_t>& witness_owners() const {
    return wvert_owners_;
  }
  const ClusterFamily& cluster_family(int axis) const {
    return clusters_[axis];
  }
  const SlabFamily& slab_family(int axis) const { return slabs_[axis]; }
  std::size_t entry_count() const;

 private:
  std::vector<Box3> boxes_;
  PointEnclosure3D enclosure_;
  std::vector<Point3> wverts_;
  std::vector<std::uint32_t> wvert_owners_;
  RangeReport3D<Coord> wvert_tree_;
  ClusterFamily clusters_[3];
  SlabFamily slabs_[3];
  BoxIntersect3D dstar_;
};

// Cyclic permutation sending `axis` to the z slot.
inline Box3 permute_box(const Box3& b, int axis) {
  switch (axis) {
    case 0:
      return {b.ys, b.zs, b.xs};
    case 1:
      return {b.zs, b.xs, b.ys};
    default:
      return b;
  }
}

}  // namespace rangepair

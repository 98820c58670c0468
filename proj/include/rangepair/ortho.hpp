#pragma once

#include <cstdint>
#include <vector>

#include "rangepair/geom.hpp"
#include "rangepair/pst.hpp"
#include "rangepair/range_tree.hpp"

namespace rangepair {

// Stabbing segment tree over closed integer intervals. Elementary positions
// alternate endpoint values and the open gaps between them, so closed ends
// are exact. Each interval sits on O(log n) canonical nodes; the nodes on
// the root-to-leaf path of a point together hold exactly the intervals
// containing it, each once.
class StabTree {
 public:
  StabTree() = default;
  explicit StabTree(const std::vector<Interval>& ivs);

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<std::uint32_t>& items_at(std::size_t node) const {
    return nodes_[node].items;
  }
  // Indices of the nodes whose elementary range contains p.
  void path(Coord p, std::vector<std::uint32_t>& out_nodes) const;

 private:
  struct Node {
    std::size_t lo = 0, hi = 0;  // elementary position range [lo, hi)
    int left = -1, right = -1;
    std::vector<std::uint32_t> items;
  };

  std::vector<Coord> coords_;  // sorted unique endpoint values
  std::vector<Node> nodes_;

  int build(std::size_t lo, std::size_t hi);
  void assign(int idx, std::size_t lo, std::size_t hi, std::uint32_t item);
};

// Segments of one orientation, reporting those whose span covers a target
// interval while their fixed coordinate lies in a range. Realized as a
// RangeReport3D over the (fixed, span.lo, span.hi) encoding with two
// half-unbounded sides. Covers both full crossings of a query rectangle and
// stabbing by a perpendicular query segment (a degenerate target interval).
class CrossReport {
 public:
  struct Entry {
    Coord fixed = 0;
    Interval span;
    std::uint32_t id = 0;
  };

  CrossReport() = default;
  explicit CrossReport(const std::vector<Entry>& segs);

  // ids with fixed in [flo, fhi] and span containing [slo, shi]
  void query(Coord flo, Coord fhi, Coord slo, Coord shi,
             std::vector<std::uint32_t>& out) const;
  bool any(Coord flo, Coord fhi, Coord slo, Coord shi) const;
  std::size_t size() const { return rr_.size(); }
  std::size_t entry_count() const { return rr_.entry_count(); }

 private:
  RangeReport3D<Coord> rr_;
};

// Rectangles containing a query point: segment tree on x, then a priority
// search tree per node for the y-interval stab.
class PointEnclosure2D {
 public:
  PointEnclosure2D() = default;
  explicit PointEnclosure2D(const std::vector<Rect2>& rects);
  PointEnclosure2D(const std::vector<Rect2>& rects,
                   const std::vector<std::uint32_t>& ids);

  void query(Point2 p, std::vector<std::uint32_t>& out) const;
  std::size_t entry_count() const;

 private:
  StabTree xt_;
  std::vector<PrioritySearchTree> psts_;
};

// 3D analogue: segment tree on z, then PointEnclosure2D per node.
class PointEnclosure3D {
 public:
  PointEnclosure3D() = default;
  explicit PointEnclosure3D(const std::vector<Box3>& boxes);
  PointEnclosure3D(const std::vector<Box3>& boxes,
                   const std::vector<std::uint32_t>& ids);

  void query(Point3 p, std::vector<std::uint32_t>& out) const;
  std::size_t entry_count() const;

 private:
  StabTree zt_;
  std::vector<PointEnclosure2D> pe_;
};

// Axis-parallel segments intersecting a query rectangle: an endpoint inside
// the rectangle or a full crossing, deduplicated.
class SegWindowing {
 public:
  SegWindowing() = default;
  explicit SegWindowing(const std::vector<AxisSeg2>& segs);

  void query(const Rect2& q, std::vector<std::uint32_t>& out) const;
  std::size_t entry_count() const;

 private:
  RangeReport2D<Coord> endpoints_;
  CrossReport vert_, horiz_;
};

// Rectangles overlapping a query rectangle (the D5 contract). Any overlap
// has a corner of one rectangle inside the other or an edge-edge crossing,
// so three sub-structures cover all cases.
class RectIntersect2D {
 public:
  RectIntersect2D() = default;
  explicit RectIntersect2D(const std::vector<Rect2>& rects);
  RectIntersect2D(const std::vector<Rect2>& rects,
                  const std::vector<std::uint32_t>& ids);

  void query(const Rect2& q, std::vector<std::uint32_t>& out) const;  // deduped
  std::size_t entry_count() const;

 private:
  RangeReport2D<Coord> corners_;
  PointEnclosure2D encl_;
  CrossReport vedges_, hedges_;
};

// Boxes overlapping a query box in all three dimensions (the D* contract).
// z-overlap is split into "stored z-interval contains the query's low end"
// (stabbing segment tree) and "stored low end lies strictly inside the
// query's z-interval" (balanced tree over boxes sorted by z-low); both parts
// carry RectIntersect2D structures over xy-projections.
class BoxIntersect3D {
 public:
  BoxIntersect3D() = default;
  explicit BoxIntersect3D(const std::vector<Box3>& boxes);
  BoxIntersect3D(const std::vector<Box3>& boxes,
                 const std::vector<std::uint32_t>& ids);

  void query(const Box3& q, std::vector<std::uint32_t>& out) const;
  std::size_t entry_count() const;

 private:
  struct RNode {
    std::size_t lo = 0, hi = 0;
    int left = -1, right = -1;
    RectIntersect2D rects;
  };

  StabTree zt_;
  std::vector<RectIntersect2D> stab_rects_;
  std::vector<Coord> zlo_sorted_;
  std::vector<RNode> rnodes_;

  int build_range(std::size_t lo, std::size_t hi,
                  const std::vector<Box3>& boxes,
                  const std::vector<std::uint32_t>& ids,
                  const std::vector<std::uint32_t>& order);
  void visit_range(int idx, std::size_t lo, std::size_t hi, const Rect2& proj,
                   std::vector<std::uint32_t>& out) const;
};

}  // namespace rangepair

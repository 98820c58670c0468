#pragma once

#include <cstdint>
#include <vector>

#include "rangepair/geom.hpp"
#include "rangepair/ortho.hpp"
#include "rangepair/range_tree.hpp"

namespace rangepair {

// Aspect ratio (longest / shortest edge) of a box. A degenerate box with a
// zero-length side has unbounded aspect unless all sides are zero.
double box_aspect(const Box3& b);

// Covers `b` by cubes with edge equal to the shortest side, tiled from the
// minimum corner with the last cube of each axis aligned to the maximum
// corner (overlaps allowed, no protrusion). Throws if aspect exceeds alpha.
std::vector<Box3> cover_box(const Box3& b, double alpha);

// Per-source-box cube covers, cubes tagged with their source id.
struct CubeCover {
  std::vector<Box3> cubes;
  std::vector<std::uint32_t> source;
  std::vector<std::vector<std::uint32_t>> cubes_of;  // per source box
};

// Pairwise intersections of alpha-fat boxes inside a fat query box, through
// cube covers: cube witness points (at most two per edge and four per face,
// ignoring cubes of the same source box) plus corner enclosure queries give
// the seeds, then the source-box structure reports the partners.
class FatIndex {
 public:
  FatIndex() = default;
  FatIndex(std::vector<Box3> boxes, double alpha);

  SeedSet seeds(const Box3& q) const;
  PairReport query(const Box3& q) const;

  double alpha() const { return alpha_; }
  const std::vector<Box3>& source_boxes() const { return boxes_; }
  const CubeCover& cover() const { return cover_; }
  const std::vector<Point3>& witness_points() const { return wpts_; }
  const std::vector<std::uint32_t>& witness_cubes() const { return wpt_cube_; }
  std::size_t entry_count() const {
    return d1_.entry_count() + d2_.entry_count() + dstar_.entry_count();
  }

 private:
  std::vector<Box3> boxes_;
  double alpha_ = 1.0;
  CubeCover cover_;
  std::vector<Point3> wpts_;
  std::vector<std::uint32_t> wpt_cube_;  // owning cube per witness point
  RangeReport3D<Coord> d1_;              // witness points, payload cube id
  PointEnclosure3D d2_;                  // cubes, payload cube id
  BoxIntersect3D dstar_;                 // source boxes

  void check_query_aspect(const Box3& q) const;
};

}  // namespace rangepair

#pragma once

#include <cstdint>
#include <vector>

#include "rangepair/geom.hpp"
#include "rangepair/ortho.hpp"

namespace rangepair {

// Pairwise rectangle intersections inside a query rectangle. Each rectangle
// carries at most ten witness segments: per edge the two extreme sub-edges
// of the part covered by other rectangles, plus the rightmost vertical and
// topmost horizontal edges of other rectangles crossing it completely,
// clipped to the rectangle.
class RectIndex {
 public:
  RectIndex() = default;
  explicit RectIndex(std::vector<Rect2> rects);

  SeedSet seeds(const Rect2& q) const;
  PairReport query(const Rect2& q) const;

  const std::vector<Rect2>& rects() const { return rects_; }
  const std::vector<AxisSeg2>& witness_segments() const { return wsegs_; }
  const std::vector<std::uint32_t>& witness_owners() const {
    return wseg_owners_;
  }
  std::size_t entry_count() const {
    return d1_.entry_count() + d2_.entry_count() + d3_.entry_count() +
           d4_.entry_count() + d5_.entry_count();
  }

 private:
  std::vector<Rect2> rects_;
  std::vector<AxisSeg2> wsegs_;
  std::vector<std::uint32_t> wseg_owners_;
  SegWindowing d1_;       // witness segments meeting q
  CrossReport d2_, d3_;   // vertical / horizontal rect edges, payload owner
  PointEnclosure2D d4_;   // rects containing a point
  RectIntersect2D d5_;    // rects overlapping a rect
};

}  // namespace rangepair

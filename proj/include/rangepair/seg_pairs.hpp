#pragma once

#include <cstdint>
#include <vector>

#include "rangepair/geom.hpp"
#include "rangepair/ortho.hpp"
#include "rangepair/range_tree.hpp"

namespace rangepair {

// Pairwise horizontal x vertical segment intersections inside a query
// rectangle. Witnesses are the extreme intersection points of each segment
// (at most two per segment); a query first assembles a seed set from the
// witnesses inside Q plus the full crossings, then stabs the opposite
// orientation with each seed clipped to Q.
class SegIndex {
 public:
  SegIndex() = default;
  explicit SegIndex(std::vector<AxisSeg2> segments);

  SeedSet seeds(const Rect2& q) const;
  PairReport query(const Rect2& q) const;

  const std::vector<AxisSeg2>& segments() const { return segments_; }
  const std::vector<Point2>& witness_points() const { return witness_points_; }
  const std::vector<std::uint32_t>& witness_owners() const {
    return witness_owners_;
  }
  std::size_t entry_count() const {
    return d1_.entry_count() + d2_.entry_count() + d3_.entry_count();
  }

 private:
  std::vector<AxisSeg2> segments_;
  std::vector<Point2> witness_points_;
  std::vector<std::uint32_t> witness_owners_;
  RangeReport2D<Coord> d1_;  // witness points
  CrossReport d2_;           // verticals; doubles as the stab structure for
                             // horizontal query segments in step 2
  CrossReport d3_;           // horizontals, symmetric
};

}  // namespace rangepair

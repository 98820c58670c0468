#pragma once

#include <vector>

#include "rangepair/geom.hpp"
#include "rangepair/instance.hpp"

namespace rangepair {

// Brute-force ground truth. Candidate pairs (and their clipped geometry) are
// precomputed once per instance by an all-pairs scan over the geom-core
// predicates; a query filters the candidates against the range. Engines must
// share nothing with this path beyond those primitives.
class Oracle {
 public:
  explicit Oracle(const Instance& inst);

  PairReport pairs(const Rect2& q) const;
  PairReport pairs(const Box3& q) const;
  PairReport pairs_for_query(std::size_t query_index) const;

 private:
  const Instance* inst_;
  struct SegCand {
    PairId id;
    Point2 at;
  };
  struct RectCand {
    PairId id;
    Rect2 common;
  };
  struct BoxCand {
    PairId id;
    Box3 common;
  };
  std::vector<SegCand> seg_cands_;
  std::vector<RectCand> rect_cands_;
  std::vector<BoxCand> box_cands_;
  std::vector<PairId> disk_cands_;
};

// One-shot convenience wrapper.
PairReport oracle_pairs(const Instance& inst, std::size_t query_index);

}  // namespace rangepair

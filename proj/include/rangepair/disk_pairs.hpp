#pragma once

#include <cstdint>
#include <vector>

#include "rangepair/disk_geom.hpp"
#include "rangepair/geom.hpp"
#include "rangepair/range_tree.hpp"

namespace rangepair {

// Star region of one disk: the union of its pairwise intersections with all
// other disks, kept as boundary arcs grouped into connected components with
// one interior representative point each.
struct StarComponent {
  std::vector<Arc> arcs;
  std::vector<PointD> vertices;
  PointD rep;
};

struct StarRegion {
  std::uint32_t owner = 0;
  std::vector<StarComponent> components;

  std::size_t complexity() const {
    std::size_t c = 0;
    for (const auto& comp : components) {
      c += comp.arcs.size() + comp.vertices.size();
    }
    return c;
  }
};

// Balanced tree over the disks; every node stores the union of the star
// regions below it behind two slab point-location structures, one per edge
// orientation of the query rectangle.
class UnionTree {
 public:
  UnionTree() = default;
  UnionTree(const std::vector<Disk>& disks,
            const std::vector<std::vector<std::uint32_t>>& lens_partners);

  // Owners of star regions met by an edge of q, appended to `out`.
  void collect(const Rect2& q, std::vector<std::uint32_t>& out) const;

  std::size_t node_count() const { return nodes_.size(); }
  bool node_contains(std::size_t node, double px, double py) const {
    return nodes_[node].xloc.contains(px, py);
  }
  const std::vector<std::uint32_t>& node_members(std::size_t node) const {
    return nodes_[node].members;
  }
  std::size_t piece_count() const;

 private:
  struct Node {
    std::vector<std::uint32_t> members;  // disk ids below this node
    int left = -1, right = -1;
    SlabLocator xloc, yloc;
  };

  std::vector<Node> nodes_;
  int root_ = -1;

  int build(std::vector<std::uint32_t> members, const std::vector<Disk>& disks,
            const std::vector<std::vector<std::uint32_t>>& partners);
  bool edge_hits(const Node& nd, bool vertical, Coord fixed, Coord s1,
                 Coord s2) const;
};

// Pairwise disk intersections inside a query rectangle. Seeds are exactly
// the disks whose star region meets the query; the second phase confirms
// candidate pairs with the exact lens/rectangle predicate over the seeds'
// clipped x-extents.
class UnionIndex {
 public:
  UnionIndex() = default;
  explicit UnionIndex(std::vector<Disk> disks);

  SeedSet seeds(const Rect2& q) const;
  PairReport query(const Rect2& q) const;

  const std::vector<Disk>& disks() const { return disks_; }
  const std::vector<StarRegion>& stars() const { return stars_; }
  const UnionTree& tree() const { return tree_; }
  std::size_t total_star_complexity() const;

 private:
  std::vector<Disk> disks_;
  std::vector<StarRegion> stars_;
  std::vector<std::vector<std::uint32_t>> partners_;
  RangeReport2D<double> reps_;
  UnionTree tree_;
};

}  // namespace rangepair

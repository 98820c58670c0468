#pragma once

#include <cstdint>
#include <vector>

#include "rangepair/geom.hpp"

namespace rangepair {

// Static priority search tree: reports all items with key <= kmax and
// pri >= pmin. Used as the innermost level of the point-enclosure
// structures, where an interval [lo, hi] stabbed by p becomes the dominance
// query (key = lo <= p, pri = hi >= p).
class PrioritySearchTree {
 public:
  struct Item {
    Coord key = 0;
    Coord pri = 0;
    std::uint32_t id = 0;
  };

  PrioritySearchTree() = default;

  explicit PrioritySearchTree(std::vector<Item> items) {
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if (a.key != b.key) return a.key < b.key;
      return a.id < b.id;
    });
    n_ = items.size();
    nodes_.reserve(n_);
    root_ = build(std::move(items));
  }

  std::size_t size() const { return n_; }

  void query(Coord kmax, Coord pmin, std::vector<std::uint32_t>& out) const {
    if (root_ >= 0) visit(root_, kmax, pmin, false, out);
  }

 private:
  struct Node {
    Coord key = 0, pri = 0;
    std::uint32_t id = 0;
    Coord sub_kmin = 0, sub_kmax = 0;  // key range of the whole subtree
    int left = -1, right = -1;
  };

  std::vector<Node> nodes_;
  int root_ = -1;
  std::size_t n_ = 0;

  int build(std::vector<Item> v) {
    if (v.empty()) return -1;
    std::size_t best = 0;
    for (std::size_t t = 1; t < v.size(); ++t) {
      if (v[t].pri > v[best].pri) best = t;
    }
    const int idx = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[idx].key = v[best].key;
    nodes_[idx].pri = v[best].pri;
    nodes_[idx].id = v[best].id;
    nodes_[idx].sub_kmin = v.front().key;
    nodes_[idx].sub_kmax = v.back().key;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(best));
    if (!v.empty()) {
      const std::size_t mid = v.size() / 2;
      std::vector<Item> left(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
      std::vector<Item> right(v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
      const int l = build(std::move(left));
      const int r = build(std::move(right));
      nodes_[idx].left = l;
      nodes_[idx].right = r;
    }
    return idx;
  }

  void visit(int idx, Coord kmax, Coord pmin, bool all_le,
             std::vector<std::uint32_t>& out) const {
    const Node& nd = nodes_[idx];
    if (nd.pri < pmin) return;
    if (!all_le && nd.sub_kmin > kmax) return;
    if (all_le || nd.key <= kmax) out.push_back(nd.id);
    const bool sub_le = all_le || nd.sub_kmax <= kmax;
    if (nd.left >= 0) {
      visit(nd.left, kmax, pmin,
            sub_le || nodes_[nd.left].sub_kmax <= kmax, out);
    }
    if (nd.right >= 0) {
      visit(nd.right, kmax, pmin,
            sub_le || nodes_[nd.right].sub_kmax <= kmax, out);
    }
  }
};

}  // namespace rangepair

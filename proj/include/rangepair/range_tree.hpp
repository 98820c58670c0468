#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace rangepair {

// Static layered range tree over points in the plane: a balanced tree on x
// where every canonical node keeps its points sorted by y. Reporting a
// closed range [x1,x2]x[y1,y2] costs O(log^2 n + answers) and never emits a
// point twice. Pass the type's min/max values for a half-unbounded side.
template <typename TCoord>
class RangeReport2D {
 public:
  struct Entry {
    TCoord x{};
    TCoord y{};
    std::uint32_t id = 0;
  };

  RangeReport2D() = default;

  explicit RangeReport2D(std::vector<Entry> pts) {
    std::sort(pts.begin(), pts.end(), [](const Entry& a, const Entry& b) {
      if (a.x != b.x) return a.x < b.x;
      if (a.y != b.y) return a.y < b.y;
      return a.id < b.id;
    });
    n_ = pts.size();
    xs_.reserve(n_);
    for (const Entry& e : pts) xs_.push_back(e.x);
    if (n_ > 0) build(0, n_, pts);
  }

  std::size_t size() const { return n_; }

  std::size_t entry_count() const {
    std::size_t c = 0;
    for (const Node& nd : nodes_) c += nd.ys.size();
    return c;
  }

  void query(TCoord x1, TCoord x2, TCoord y1, TCoord y2,
             std::vector<std::uint32_t>& out) const {
    if (n_ == 0 || x1 > x2 || y1 > y2) return;
    const std::size_t lo = std::lower_bound(xs_.begin(), xs_.end(), x1) - xs_.begin();
    const std::size_t hi = std::upper_bound(xs_.begin(), xs_.end(), x2) - xs_.begin();
    if (lo >= hi) return;
    visit(0, lo, hi, y1, y2, &out, nullptr);
  }

  bool any(TCoord x1, TCoord x2, TCoord y1, TCoord y2) const {
    if (n_ == 0 || x1 > x2 || y1 > y2) return false;
    const std::size_t lo = std::lower_bound(xs_.begin(), xs_.end(), x1) - xs_.begin();
    const std::size_t hi = std::upper_bound(xs_.begin(), xs_.end(), x2) - xs_.begin();
    if (lo >= hi) return false;
    bool found = false;
    visit(0, lo, hi, y1, y2, nullptr, &found);
    return found;
  }

 private:
  struct Node {
    std::size_t lo = 0, hi = 0;
    int left = -1, right = -1;
    std::vector<std::pair<TCoord, std::uint32_t>> ys;  // sorted by (y, id)
  };

  std::vector<Node> nodes_;
  std::vector<TCoord> xs_;
  std::size_t n_ = 0;

  int build(std::size_t lo, std::size_t hi, const std::vector<Entry>& pts) {
    const int idx = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[idx].lo = lo;
    nodes_[idx].hi = hi;
    if (hi - lo == 1) {
      nodes_[idx].ys.emplace_back(pts[lo].y, pts[lo].id);
      return idx;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const int l = build(lo, mid, pts);
    const int r = build(mid, hi, pts);
    nodes_[idx].left = l;
    nodes_[idx].right = r;
    auto& ys = nodes_[idx].ys;
    ys.resize(hi - lo);
    std::merge(nodes_[l].ys.begin(), nodes_[l].ys.end(), nodes_[r].ys.begin(),
               nodes_[r].ys.end(), ys.begin());
    return idx;
  }

  void visit(int idx, std::size_t lo, std::size_t hi, TCoord y1, TCoord y2,
             std::vector<std::uint32_t>* out, bool* found) const {
    if (found && *found) return;
    const Node& nd = nodes_[idx];
    if (nd.hi <= lo || hi <= nd.lo) return;
    if (lo <= nd.lo && nd.hi <= hi) {
      const auto& ys = nd.ys;
      auto it = std::lower_bound(
          ys.begin(), ys.end(), y1,
          [](const auto& a, TCoord v) { return a.first < v; });
      for (; it != ys.end() && it->first <= y2; ++it) {
        if (found) {
          *found = true;
          return;
        }
        out->push_back(it->second);
      }
      return;
    }
    visit(nd.left, lo, hi, y1, y2, out, found);
    visit(nd.right, lo, hi, y1, y2, out, found);
  }
};

// Range tree on x whose canonical nodes carry a RangeReport2D over (y, z).
template <typename TCoord>
class RangeReport3D {
 public:
  struct Entry {
    TCoord x{};
    TCoord y{};
    TCoord z{};
    std::uint32_t id = 0;
  };

  RangeReport3D() = default;

  explicit RangeReport3D(std::vector<Entry> pts) {
    std::sort(pts.begin(), pts.end(), [](const Entry& a, const Entry& b) {
      if (a.x != b.x) return a.x < b.x;
      if (a.y != b.y) return a.y < b.y;
      if (a.z != b.z) return a.z < b.z;
      return a.id < b.id;
    });
    n_ = pts.size();
    xs_.reserve(n_);
    for (const Entry& e : pts) xs_.push_back(e.x);
    if (n_ > 0) build(0, n_, pts);
  }

  std::size_t size() const { return n_; }

  std::size_t entry_count() const {
    std::size_t c = 0;
    for (const Node& nd : nodes_) c += nd.yz.entry_count();
    return c;
  }

  void query(TCoord x1, TCoord x2, TCoord y1, TCoord y2, TCoord z1, TCoord z2,
             std::vector<std::uint32_t>& out) const {
    if (n_ == 0 || x1 > x2) return;
    const std::size_t lo = std::lower_bound(xs_.begin(), xs_.end(), x1) - xs_.begin();
    const std::size_t hi = std::upper_bound(xs_.begin(), xs_.end(), x2) - xs_.begin();
    if (lo >= hi) return;
    visit(0, lo, hi, y1, y2, z1, z2, &out, nullptr);
  }

  bool any(TCoord x1, TCoord x2, TCoord y1, TCoord y2, TCoord z1,
           TCoord z2) const {
    if (n_ == 0 || x1 > x2) return false;
    const std::size_t lo = std::lower_bound(xs_.begin(), xs_.end(), x1) - xs_.begin();
    const std::size_t hi = std::upper_bound(xs_.begin(), xs_.end(), x2) - xs_.begin();
    if (lo >= hi) return false;
    bool found = false;
    visit(0, lo, hi, y1, y2, z1, z2, nullptr, &found);
    return found;
  }

 private:
  struct Node {
    std::size_t lo = 0, hi = 0;
    int left = -1, right = -1;
    RangeReport2D<TCoord> yz;
  };

  std::vector<Node> nodes_;
  std::vector<TCoord> xs_;
  std::size_t n_ = 0;

  int build(std::size_t lo, std::size_t hi, const std::vector<Entry>& pts) {
    const int idx = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[idx].lo = lo;
    nodes_[idx].hi = hi;
    std::vector<typename RangeReport2D<TCoord>::Entry> sub;
    sub.reserve(hi - lo);
    for (std::size_t t = lo; t < hi; ++t) {
      sub.push_back({pts[t].y, pts[t].z, pts[t].id});
    }
    nodes_[idx].yz = RangeReport2D<TCoord>(std::move(sub));
    if (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const int l = build(lo, mid, pts);
      const int r = build(mid, hi, pts);
      nodes_[idx].left = l;
      nodes_[idx].right = r;
    }
    return idx;
  }

  void visit(int idx, std::size_t lo, std::size_t hi, TCoord y1, TCoord y2,
             TCoord z1, TCoord z2, std::vector<std::uint32_t>* out,
             bool* found) const {
    if (found && *found) return;
    const Node& nd = nodes_[idx];
    if (nd.hi <= lo || hi <= nd.lo) return;
    if (lo <= nd.lo && nd.hi <= hi) {
      if (found) {
        if (nd.yz.any(y1, y2, z1, z2)) *found = true;
      } else {
        nd.yz.query(y1, y2, z1, z2, *out);
      }
      return;
    }
    visit(nd.left, lo, hi, y1, y2, z1, z2, out, found);
    visit(nd.right, lo, hi, y1, y2, z1, z2, out, found);
  }
};

}  // namespace rangepair

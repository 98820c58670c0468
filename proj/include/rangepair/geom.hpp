#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace rangepair {

// All orthogonal objects live on a 64-bit integer grid, so every orthogonal
// predicate below is exact. Disks are the one floating-point class; see
// disk_eps() for their comparison tolerance.
using Coord = std::int64_t;

inline constexpr Coord kCoordMin = std::numeric_limits<Coord>::min();
inline constexpr Coord kCoordMax = std::numeric_limits<Coord>::max();

// Closed interval [lo, hi]. A single point (lo == hi) is valid.
struct Interval {
  Coord lo = 0;
  Coord hi = 0;

  bool valid() const { return lo <= hi; }
  bool contains(Coord v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  bool operator==(const Interval&) const = default;
};

inline std::optional<Interval> interval_intersect(Interval a, Interval b) {
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (!r.valid()) return std::nullopt;
  return r;
}

struct Point2 {
  Coord x = 0;
  Coord y = 0;
  bool operator==(const Point2&) const = default;
};

struct Point3 {
  Coord x = 0;
  Coord y = 0;
  Coord z = 0;
  bool operator==(const Point3&) const = default;
};

enum class Orientation : std::uint8_t { horizontal, vertical };

// Axis-parallel segment. `fixed` is the y-coordinate of a horizontal segment
// (span on x) or the x-coordinate of a vertical one (span on y).
struct AxisSeg2 {
  Orientation orientation = Orientation::horizontal;
  Coord fixed = 0;
  Interval span;

  bool horizontal() const { return orientation == Orientation::horizontal; }
  bool operator==(const AxisSeg2&) const = default;
};

inline AxisSeg2 hseg(Coord y, Coord x1, Coord x2) {
  return {Orientation::horizontal, y, {x1, x2}};
}
inline AxisSeg2 vseg(Coord x, Coord y1, Coord y2) {
  return {Orientation::vertical, x, {y1, y2}};
}

// Closed axis-aligned rectangle.
struct Rect2 {
  Interval xs;
  Interval ys;

  bool valid() const { return xs.valid() && ys.valid(); }
  bool contains(Point2 p) const { return xs.contains(p.x) && ys.contains(p.y); }
  bool overlaps(const Rect2& o) const {
    return xs.overlaps(o.xs) && ys.overlaps(o.ys);
  }
  bool operator==(const Rect2&) const = default;
};

inline Rect2 rect(Coord x1, Coord x2, Coord y1, Coord y2) {
  return {{x1, x2}, {y1, y2}};
}

// Closed axis-aligned box.
struct Box3 {
  Interval xs;
  Interval ys;
  Interval zs;

  bool valid() const { return xs.valid() && ys.valid() && zs.valid(); }
  bool contains(Point3 p) const {
    return xs.contains(p.x) && ys.contains(p.y) && zs.contains(p.z);
  }
  bool overlaps(const Box3& o) const {
    return xs.overlaps(o.xs) && ys.overlaps(o.ys) && zs.overlaps(o.zs);
  }
  bool operator==(const Box3&) const = default;
};

inline Box3 box(Coord x1, Coord x2, Coord y1, Coord y2, Coord z1, Coord z2) {
  return {{x1, x2}, {y1, y2}, {z1, z2}};
}

struct Disk {
  double cx = 0;
  double cy = 0;
  double r = 0;
  bool operator==(const Disk&) const = default;
};

// Real-valued closed rectangle, used wherever disks meet an integer query.
struct RealRect {
  double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
};

inline RealRect to_real(const Rect2& q) {
  return {static_cast<double>(q.xs.lo), static_cast<double>(q.xs.hi),
          static_cast<double>(q.ys.lo), static_cast<double>(q.ys.hi)};
}

// Canonical identity of an unordered object pair; always i < j.
struct PairId {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  bool operator==(const PairId&) const = default;
  auto operator<=>(const PairId&) const = default;
};

inline PairId make_pair_id(std::uint32_t a, std::uint32_t b) {
  return a < b ? PairId{a, b} : PairId{b, a};
}

inline std::uint64_t pair_key(PairId p) {
  return (static_cast<std::uint64_t>(p.i) << 32) | p.j;
}

using SeedSet = std::vector<std::uint32_t>;   // sorted, unique
using PairReport = std::vector<PairId>;       // sorted lexicographically, unique

inline void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline void sort_unique(PairReport& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// --- exact orthogonal predicates ---------------------------------------

std::optional<Rect2> rect_intersect(const Rect2& a, const Rect2& b);
std::optional<Box3> box_intersect(const Box3& a, const Box3& b);

// Intersection point of a horizontal and a vertical segment, if any.
// Throws std::invalid_argument if the orientations are not (h, v).
std::optional<Point2> seg_pair_point(const AxisSeg2& h, const AxisSeg2& v);

// --- disk predicates -----------------------------------------------------

// Tolerance for all real comparisons involving disks. Defaults to 1e-9 and
// can be overridden through the RANGE_PAIR_EPS environment variable.
double disk_eps();

inline bool disk_contains(const Disk& d, double px, double py, double eps) {
  const double dx = px - d.cx, dy = py - d.cy;
  const double rr = d.r + eps;
  return dx * dx + dy * dy <= rr * rr;
}

inline bool disks_overlap(const Disk& a, const Disk& b, double eps) {
  const double dx = a.cx - b.cx, dy = a.cy - b.cy;
  const double rr = a.r + b.r + eps;
  return dx * dx + dy * dy <= rr * rr;
}

// True iff the closed region d1 ∩ d2 ∩ q is nonempty.
bool lens_rect_intersects(const Disk& d1, const Disk& d2, const RealRect& q);

}  // namespace rangepair

template <>
struct std::hash<rangepair::PairId> {
  std::size_t operator()(const rangepair::PairId& p) const noexcept {
    return std::hash<std::uint64_t>{}(rangepair::pair_key(p));
  }
};

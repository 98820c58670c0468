#include "rangepair/geom.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rangepair {

std::optional<Rect2> rect_intersect(const Rect2& a, const Rect2& b) {
  auto xs = interval_intersect(a.xs, b.xs);
  if (!xs) return std::nullopt;
  auto ys = interval_intersect(a.ys, b.ys);
  if (!ys) return std::nullopt;
  return Rect2{*xs, *ys};
}

std::optional<Box3> box_intersect(const Box3& a, const Box3& b) {
  auto xs = interval_intersect(a.xs, b.xs);
  if (!xs) return std::nullopt;
  auto ys = interval_intersect(a.ys, b.ys);
  if (!ys) return std::nullopt;
  auto zs = interval_intersect(a.zs, b.zs);
  if (!zs) return std::nullopt;
  return Box3{*xs, *ys, *zs};
}

std::optional<Point2> seg_pair_point(const AxisSeg2& h, const AxisSeg2& v) {
  if (h.orientation != Orientation::horizontal ||
      v.orientation != Orientation::vertical) {
    throw std::invalid_argument("seg_pair_point expects (horizontal, vertical)");
  }
  if (h.span.contains(v.fixed) && v.span.contains(h.fixed)) {
    return Point2{v.fixed, h.fixed};
  }
  return std::nullopt;
}

double disk_eps() {
  static const double eps = [] {
    if (const char* s = std::getenv("RANGE_PAIR_EPS")) {
      char* end = nullptr;
      const double v = std::strtod(s, &end);
      if (end != s && v > 0) return v;
    }
    return 1e-9;
  }();
  return eps;
}

namespace {

bool rect_contains(const RealRect& q, double px, double py, double eps) {
  return px >= q.x1 - eps && px <= q.x2 + eps && py >= q.y1 - eps &&
         py <= q.y2 + eps;
}

// Intersection points of two circles; a tangency (within tolerance) yields a
// single point. Returns the number of points written.
int circle_circle_points(const Disk& a, const Disk& b, double eps,
                         double* px, double* py) {
  const double dx = b.cx - a.cx, dy = b.cy - a.cy;
  const double d2 = dx * dx + dy * dy;
  if (d2 <= eps * eps) return 0;  // concentric
  const double d = std::sqrt(d2);
  if (d > a.r + b.r + eps) return 0;
  if (d < std::abs(a.r - b.r) - eps) return 0;
  const double along = (d2 + a.r * a.r - b.r * b.r) / (2.0 * d);
  double h2 = a.r * a.r - along * along;
  if (h2 < 0) {
    if (h2 < -eps * (a.r + 1.0)) return 0;
    h2 = 0;
  }
  const double h = std::sqrt(h2);
  const double ux = dx / d, uy = dy / d;
  const double mx = a.cx + along * ux, my = a.cy + along * uy;
  px[0] = mx - h * uy;
  py[0] = my + h * ux;
  if (h <= eps) return 1;
  px[1] = mx + h * uy;
  py[1] = my - h * ux;
  return 2;
}

// Intersections of a circle with a closed axis-aligned segment.
int circle_segment_points(const Disk& d, bool seg_horizontal, double fixed,
                          double s1, double s2, double eps, double* px,
                          double* py) {
  const double c_perp = seg_horizontal ? d.cy : d.cx;
  const double c_along = seg_horizontal ? d.cx : d.cy;
  const double off = fixed - c_perp;
  double disc = d.r * d.r - off * off;
  if (disc < 0) {
    if (disc < -eps * (d.r + 1.0)) return 0;
    disc = 0;
  }
  const double h = std::sqrt(disc);
  int n = 0;
  for (double t : {c_along - h, c_along + h}) {
    if (t < s1 - eps || t > s2 + eps) continue;
    if (n == 1 && std::abs(t - (seg_horizontal ? px[0] : py[0])) <= eps) continue;
    px[n] = seg_horizontal ? t : fixed;
    py[n] = seg_horizontal ? fixed : t;
    ++n;
  }
  return n;
}

}  // namespace

// Nonemptiness of d1 ∩ d2 ∩ q for closed sets. The lexicographically
// smallest point of the (convex) intersection is either a crossing of two of
// the three boundaries or an extreme point of a single circle, so checking
// those candidate points is a complete test.
bool lens_rect_intersects(const Disk& d1, const Disk& d2, const RealRect& q) {
  const double eps = disk_eps();
  if (!disks_overlap(d1, d2, eps)) return false;

  // corners of q inside both disks
  const double cx[4] = {q.x1, q.x2, q.x1, q.x2};
  const double cy[4] = {q.y1, q.y1, q.y2, q.y2};
  for (int c = 0; c < 4; ++c) {
    if (disk_contains(d1, cx[c], cy[c], eps) &&
        disk_contains(d2, cx[c], cy[c], eps))
      return true;
  }

  double px[2], py[2];

  // circle-circle crossings inside q
  int n = circle_circle_points(d1, d2, eps, px, py);
  for (int t = 0; t < n; ++t) {
    if (rect_contains(q, px[t], py[t], eps)) return true;
  }

  // circle-edge crossings inside the other disk
  const Disk* ds[2] = {&d1, &d2};
  for (int s = 0; s < 2; ++s) {
    const Disk& self = *ds[s];
    const Disk& other = *ds[1 - s];
    struct Edge {
      bool horizontal;
      double fixed, s1, s2;
    } edges[4] = {{true, q.y1, q.x1, q.x2},
                  {true, q.y2, q.x1, q.x2},
                  {false, q.x1, q.y1, q.y2},
                  {false, q.x2, q.y1, q.y2}};
    for (const Edge& e : edges) {
      n = circle_segment_points(self, e.horizontal, e.fixed, e.s1, e.s2, eps,
                                px, py);
      for (int t = 0; t < n; ++t) {
        if (disk_contains(other, px[t], py[t], eps)) return true;
      }
    }
    // circle extreme points inside the other disk and q (covers the case
    // where one disk's boundary alone bounds the intersection locally)
    const double ex[4] = {self.cx - self.r, self.cx + self.r, self.cx, self.cx};
    const double ey[4] = {self.cy, self.cy, self.cy - self.r, self.cy + self.r};
    for (int t = 0; t < 4; ++t) {
      if (rect_contains(q, ex[t], ey[t], eps) &&
          disk_contains(other, ex[t], ey[t], eps))
        return true;
    }
  }
  return false;
}

}  // namespace rangepair

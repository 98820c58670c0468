#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "rangepair/geom.hpp"

namespace rangepair {

// Closed angular interval [a, b] on a circle, stored with a in [0, 2*pi) and
// b in [a, a + 2*pi]. A full circle is [0, 2*pi].
struct AngleSpan {
  double a = 0;
  double b = 0;
};

// The closed angular portion of circle `m`'s boundary lying inside disk `d`
// (nullopt when empty, full span when the whole circle is inside).
std::optional<AngleSpan> boundary_inside(const Disk& m, const Disk& d);

// Union of angular spans as disjoint sorted spans over [0, 2*pi).
std::vector<AngleSpan> span_union(std::vector<AngleSpan> spans);

// Set difference base \ sub where sub is treated as open; endpoints of base
// survive. Both inputs may wrap.
std::vector<AngleSpan> span_subtract(const std::vector<AngleSpan>& base,
                                     const std::vector<AngleSpan>& sub);

// Intersection of two single spans (up to two pieces because of wrap).
std::vector<AngleSpan> span_intersect_pair(const AngleSpan& x,
                                           const AngleSpan& y);

// Nonemptiness of the closed common intersection of three disks. Complete
// under general position (no tangencies).
bool disks_triple_intersect(const Disk& a, const Disk& b, const Disk& c);

// One boundary arc of a region built from disk boundaries.
struct Arc {
  double cx = 0, cy = 0, r = 0;
  double a0 = 0, a1 = 0;  // CCW from a0 to a1, a1 in [a0, a0 + 2*pi]
  std::uint32_t disk = 0;

  bool full_circle() const { return a1 - a0 >= 6.283185307179586 - 1e-12; }
};

struct PointD {
  double x = 0, y = 0;
};

inline PointD arc_point(const Arc& a, double ang) {
  return {a.cx + a.r * std::cos(ang), a.cy + a.r * std::sin(ang)};
}

// Builds an arc with the start angle renormalized into [0, 2*pi).
inline Arc make_arc(const Disk& d, const AngleSpan& s, std::uint32_t id) {
  constexpr double tau = 6.283185307179586476925287;
  double a0 = std::fmod(s.a, tau);
  if (a0 < 0) a0 += tau;
  return {d.cx, d.cy, d.r, a0, a0 + (s.b - s.a), id};
}

// Slab-based point location over the x-monotone decomposition of a set of
// boundary arcs of a closed region. Containment uses upward ray parity;
// `pieces_in_band` counts boundary pieces crossing a vertical segment, which
// together with endpoint containment decides segment-vs-region intersection.
// The mirrored flavor (swap = true) exchanges x and y to serve horizontal
// query edges.
class SlabLocator {
 public:
  SlabLocator() = default;
  SlabLocator(const std::vector<Arc>& arcs, bool swap_xy);

  bool contains(double px, double py) const;
  bool band_hit(double px, double y1, double y2) const;
  std::size_t piece_count() const;

 private:
  struct Piece {
    std::uint32_t arc = 0;
    bool upper = false;  // which branch of the circle
  };
  struct Slab {
    double x0 = 0, x1 = 0;
    std::vector<Piece> pieces;  // sorted by y inside the slab
  };

  bool swap_ = false;
  std::vector<Arc> arcs_;      // possibly coordinate-swapped copies
  std::vector<double> xs_;     // slab boundaries
  std::vector<Slab> slabs_;

  double piece_y(const Piece& p, double x) const;
  int slab_of(double px) const;
  bool direct_contains(double px, double py) const;
  bool near_boundary_x(double px) const;
};

}  // namespace rangepair

#include "rangepair/disk_geom.hpp"

#include <algorithm>
#include <cmath>

namespace rangepair {

namespace {

constexpr double kTau = 6.283185307179586476925287;
constexpr double kAngleEps = 1e-12;

double norm_angle(double a) {
  a = std::fmod(a, kTau);
  if (a < 0) a += kTau;
  return a;
}

}  // namespace

std::optional<AngleSpan> boundary_inside(const Disk& m, const Disk& d) {
  const double dx = d.cx - m.cx, dy = d.cy - m.cy;
  const double dist = std::hypot(dx, dy);
  if (dist >= m.r + d.r) return std::nullopt;        // too far apart
  if (dist + m.r <= d.r) return AngleSpan{0, kTau};  // circle m inside d
  if (dist + d.r <= m.r) return std::nullopt;        // d inside disk m
  const double cosphi =
      (dist * dist + m.r * m.r - d.r * d.r) / (2.0 * dist * m.r);
  const double phi = std::acos(std::clamp(cosphi, -1.0, 1.0));
  const double theta = std::atan2(dy, dx);
  const double a = norm_angle(theta - phi);
  return AngleSpan{a, a + 2.0 * phi};
}

std::vector<AngleSpan> span_union(std::vector<AngleSpan> spans) {
  // split wrapping spans so everything lives in [0, tau)
  std::vector<AngleSpan> flat;
  for (const AngleSpan& s : spans) {
    if (s.b - s.a >= kTau - kAngleEps) {
      return {AngleSpan{0, kTau}};
    }
    const double a = norm_angle(s.a);
    const double b = a + (s.b - s.a);
    if (b <= kTau) {
      flat.push_back({a, b});
    } else {
      flat.push_back({a, kTau});
      flat.push_back({0, b - kTau});
    }
  }
  if (flat.empty()) return {};
  std::sort(flat.begin(), flat.end(),
            [](const AngleSpan& x, const AngleSpan& y) { return x.a < y.a; });
  std::vector<AngleSpan> out;
  AngleSpan cur = flat.front();
  for (std::size_t t = 1; t < flat.size(); ++t) {
    if (flat[t].a <= cur.b + kAngleEps) {
      cur.b = std::max(cur.b, flat[t].b);
    } else {
      out.push_back(cur);
      cur = flat[t];
    }
  }
  out.push_back(cur);
  // merge across the wrap point, keeping the invariant a in [0, tau)
  if (out.size() > 1 && out.front().a <= kAngleEps &&
      out.back().b >= kTau - kAngleEps) {
    const AngleSpan merged{out.back().a, out.front().b + kTau};
    out.erase(out.begin());
    out.pop_back();
    out.push_back(merged);
  }
  if (out.size() == 1 && out.front().b - out.front().a >= kTau - kAngleEps) {
    return {AngleSpan{0, kTau}};
  }
  return out;
}

std::vector<AngleSpan> span_subtract(const std::vector<AngleSpan>& base,
                                     const std::vector<AngleSpan>& sub) {
  if (base.empty()) return {};
  std::vector<AngleSpan> cut = span_union(std::vector<AngleSpan>(sub));
  if (cut.empty()) return base;
  std::vector<AngleSpan> out;
  for (const AngleSpan& bs : base) {
    // walk the subtrahend over the unwrapped copies of the base span; cut
    // starts are renormalized so the shift window is always sufficient
    std::vector<std::pair<double, double>> holes;
    for (const AngleSpan& cs : cut) {
      const double ca = norm_angle(cs.a);
      const double cb = ca + (cs.b - cs.a);
      for (int shift = -1; shift <= 1; ++shift) {
        const double a = ca + shift * kTau;
        const double b = cb + shift * kTau;
        if (b <= bs.a + kAngleEps || a >= bs.b - kAngleEps) continue;
        holes.emplace_back(std::max(a, bs.a), std::min(b, bs.b));
      }
    }
    if (holes.empty()) {
      out.push_back(bs);
      continue;
    }
    std::sort(holes.begin(), holes.end());
    double cursor = bs.a;
    for (const auto& [ha, hb] : holes) {
      if (ha > cursor + kAngleEps) out.push_back({cursor, ha});
      cursor = std::max(cursor, hb);
    }
    if (bs.b > cursor + kAngleEps) out.push_back({cursor, bs.b});
  }
  return out;
}

std::vector<AngleSpan> span_intersect_pair(const AngleSpan& x,
                                           const AngleSpan& y) {
  std::vector<AngleSpan> out;
  const double xa = norm_angle(x.a);
  const double xb = xa + (x.b - x.a);
  for (int shift = -1; shift <= 1; ++shift) {
    const double ya = norm_angle(y.a) + shift * kTau;
    const double yb = ya + (y.b - y.a);
    const double lo = std::max(xa, ya);
    const double hi = std::min(xb, yb);
    if (hi > lo + kAngleEps) out.push_back({lo, hi});
  }
  return out;
}

bool disks_triple_intersect(const Disk& a, const Disk& b, const Disk& c) {
  const double eps = disk_eps();
  if (!disks_overlap(a, b, eps) || !disks_overlap(a, c, eps) ||
      !disks_overlap(b, c, eps)) {
    return false;
  }
  const Disk* ds[3] = {&a, &b, &c};
  // containment collapses the triple to a pairwise check (already done)
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 3; ++t) {
      if (s == t) continue;
      const double dx = ds[s]->cx - ds[t]->cx, dy = ds[s]->cy - ds[t]->cy;
      if (std::hypot(dx, dy) + ds[s]->r <= ds[t]->r + eps) return true;
    }
  }
  // otherwise a vertex of the common intersection is a pairwise circle
  // crossing inside the third disk
  for (int s = 0; s < 3; ++s) {
    const Disk& u = *ds[s];
    const Disk& v = *ds[(s + 1) % 3];
    const Disk& w = *ds[(s + 2) % 3];
    const double dx = v.cx - u.cx, dy = v.cy - u.cy;
    const double d2 = dx * dx + dy * dy;
    if (d2 <= eps * eps) continue;
    const double d = std::sqrt(d2);
    const double along = (d2 + u.r * u.r - v.r * v.r) / (2.0 * d);
    double h2 = u.r * u.r - along * along;
    if (h2 < 0) h2 = 0;
    const double h = std::sqrt(h2);
    const double ux = dx / d, uy = dy / d;
    const double mx = u.cx + along * ux, my = u.cy + along * uy;
    if (disk_contains(w, mx - h * uy, my + h * ux, eps)) return true;
    if (disk_contains(w, mx + h * uy, my - h * ux, eps)) return true;
  }
  return false;
}

// --- SlabLocator -------------------------------------------------------------

SlabLocator::SlabLocator(const std::vector<Arc>& arcs, bool swap_xy)
    : swap_(swap_xy) {
  arcs_.reserve(arcs.size());
  for (Arc a : arcs) {
    if (swap_) {
      // mirror across the line y = x: (x, y) -> (y, x); angles reflect too
      std::swap(a.cx, a.cy);
      const double b0 = 1.5707963267948966 - a.a1;
      const double b1 = 1.5707963267948966 - a.a0;
      a.a0 = norm_angle(b0);
      a.a1 = a.a0 + (b1 - b0);
    }
    arcs_.push_back(a);
  }
  // slab boundaries: arc endpoints plus interior x-extremes
  for (const Arc& a : arcs_) {
    xs_.push_back(arc_point(a, a.a0).x);
    xs_.push_back(arc_point(a, a.a1).x);
    for (double ext : {0.0, 3.141592653589793}) {
      // the circle's left/right extreme, if interior to the arc
      for (int k = -1; k <= 1; ++k) {
        const double ang = ext + k * kTau;
        if (ang > a.a0 + kAngleEps && ang < a.a1 - kAngleEps) {
          xs_.push_back(a.cx + a.r * std::cos(ext));
        }
      }
    }
  }
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end(),
                        [](double u, double v) { return v - u <= 1e-12; }),
            xs_.end());
  if (xs_.size() < 2) return;
  slabs_.resize(xs_.size() - 1);
  for (std::size_t s = 0; s + 1 < xs_.size(); ++s) {
    slabs_[s].x0 = xs_[s];
    slabs_[s].x1 = xs_[s + 1];
  }
  for (std::uint32_t t = 0; t < arcs_.size(); ++t) {
    const Arc& a = arcs_[t];
    // split into upper (angles in (0, pi)) and lower branches
    struct Branch {
      double b0, b1;
      bool upper;
    };
    std::vector<Branch> branches;
    double c0 = a.a0;
    const double c1 = a.a1;
    while (c0 < c1 - kAngleEps) {
      const double base = std::floor(c0 / 3.141592653589793);
      double next = (base + 1) * 3.141592653589793;
      if (next > c1) next = c1;
      const double mid = 0.5 * (c0 + next);
      branches.push_back({c0, next, std::sin(norm_angle(mid)) > 0});
      c0 = next;
    }
    for (const Branch& br : branches) {
      const double xa = a.cx + a.r * std::cos(br.b0);
      const double xb = a.cx + a.r * std::cos(br.b1);
      const double xlo = std::min(xa, xb), xhi = std::max(xa, xb);
      const std::size_t s0 =
          std::lower_bound(xs_.begin(), xs_.end(), xlo + 1e-12) - xs_.begin();
      for (std::size_t s = (s0 > 0 ? s0 - 1 : 0); s < slabs_.size(); ++s) {
        if (slabs_[s].x1 <= xlo + 1e-12) continue;
        if (slabs_[s].x0 >= xhi - 1e-12) break;
        slabs_[s].pieces.push_back({t, br.upper});
      }
    }
  }
  for (Slab& s : slabs_) {
    const double xm = 0.5 * (s.x0 + s.x1);
    std::sort(s.pieces.begin(), s.pieces.end(),
              [&](const Piece& p, const Piece& q) {
                return piece_y(p, xm) < piece_y(q, xm);
              });
  }
}

double SlabLocator::piece_y(const Piece& p, double x) const {
  const Arc& a = arcs_[p.arc];
  double d2 = a.r * a.r - (x - a.cx) * (x - a.cx);
  if (d2 < 0) d2 = 0;
  const double h = std::sqrt(d2);
  return p.upper ? a.cy + h : a.cy - h;
}

int SlabLocator::slab_of(double px) const {
  if (slabs_.empty() || px < xs_.front() || px > xs_.back()) return -1;
  const std::size_t s =
      std::upper_bound(xs_.begin(), xs_.end(), px) - xs_.begin();
  if (s == 0) return 0;
  if (s >= xs_.size()) return static_cast<int>(slabs_.size()) - 1;
  return static_cast<int>(s - 1);
}

bool SlabLocator::near_boundary_x(double px) const {
  const auto it = std::lower_bound(xs_.begin(), xs_.end(), px);
  if (it != xs_.end() && std::abs(*it - px) <= 1e-9) return true;
  if (it != xs_.begin() && std::abs(*(it - 1) - px) <= 1e-9) return true;
  return false;
}

// Upward-ray parity over the full arc list; exact fallback for query
// abscissas that coincide with a slab boundary.
bool SlabLocator::direct_contains(double px, double py) const {
  const double eps = disk_eps();
  int crossings = 0;
  for (const Arc& a : arcs_) {
    double d2 = a.r * a.r - (px - a.cx) * (px - a.cx);
    if (d2 < 0) continue;
    const double h = std::sqrt(d2);
    const double cand[2] = {a.cy - h, a.cy + h};
    for (int u = 0; u < 2; ++u) {
      const double y = cand[u];
      const double ang =
          norm_angle(std::atan2(y - a.cy, px - a.cx));
      bool on_arc = false;
      for (int k = 0; k <= 1; ++k) {
        const double g = ang + k * kTau;
        if (g >= a.a0 - kAngleEps && g <= a.a1 + kAngleEps) on_arc = true;
      }
      if (!on_arc) continue;
      if (std::abs(y - py) <= eps) return true;  // on the boundary
      if (y > py) ++crossings;
      if (h <= eps) break;  // tangent touch counts once
    }
  }
  return (crossings % 2) == 1;
}

bool SlabLocator::contains(double px, double py) const {
  if (swap_) std::swap(px, py);
  const int s = slab_of(px);
  if (s < 0) return false;
  if (near_boundary_x(px)) return direct_contains(px, py);
  const Slab& sl = slabs_[static_cast<std::size_t>(s)];
  const double eps = disk_eps();
  int below = 0;
  for (const Piece& p : sl.pieces) {
    const double y = piece_y(p, px);
    if (std::abs(y - py) <= eps) return true;
    if (y < py) ++below;
  }
  return (below % 2) == 1;
}

// For a swapped locator the caller passes mirrored coordinates already: a
// horizontal edge (y = f, x in [a, b]) is queried as band_hit(f, a, b).
bool SlabLocator::band_hit(double px, double y1, double y2) const {
  const int s = slab_of(px);
  if (s < 0) return false;
  const double eps = disk_eps();
  if (near_boundary_x(px)) {
    // fall back to sampling the arcs directly in the band
    for (const Arc& a : arcs_) {
      double d2 = a.r * a.r - (px - a.cx) * (px - a.cx);
      if (d2 < 0) continue;
      const double h = std::sqrt(d2);
      for (double y : {a.cy - h, a.cy + h}) {
        if (y < y1 - eps || y > y2 + eps) continue;
        const double ang = norm_angle(std::atan2(y - a.cy, px - a.cx));
        for (int k = 0; k <= 1; ++k) {
          const double g = ang + k * kTau;
          if (g >= a.a0 - kAngleEps && g <= a.a1 + kAngleEps) return true;
        }
      }
    }
    return false;
  }
  const Slab& sl = slabs_[static_cast<std::size_t>(s)];
  for (const Piece& p : sl.pieces) {
    const double y = piece_y(p, px);
    if (y >= y1 - eps && y <= y2 + eps) return true;
  }
  return false;
}

std::size_t SlabLocator::piece_count() const {
  std::size_t c = 0;
  for (const Slab& s : slabs_) c += s.pieces.size();
  return c;
}

}  // namespace rangepair

#include "rangepair/disk_pairs.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace rangepair {

namespace {

// Union of the boundary portions of circle `m` lying inside the given disks.
std::vector<AngleSpan> inside_union(const Disk& m, const std::vector<Disk>& all,
                                    const std::vector<std::uint32_t>& ids) {
  std::vector<AngleSpan> spans;
  for (std::uint32_t j : ids) {
    if (auto s = boundary_inside(m, all[j])) spans.push_back(*s);
  }
  return span_union(std::move(spans));
}

// Deepest interior point of the lens of two overlapping disks: the midpoint
// of the lens along the center line (clamped for containment).
PointD lens_rep(const Disk& a, const Disk& b) {
  const double dx = b.cx - a.cx, dy = b.cy - a.cy;
  const double d = std::hypot(dx, dy);
  if (d == 0) return {a.cx, a.cy};
  const double lo = std::max(d - b.r, -a.r);
  const double hi = std::min(a.r, d + b.r);
  const double t = 0.5 * (lo + hi) / d;
  return {a.cx + t * dx, a.cy + t * dy};
}

struct DSU {
  std::vector<std::uint32_t> parent;
  explicit DSU(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

void append_vertices(const Arc& a, std::vector<PointD>& out) {
  if (a.full_circle()) return;
  out.push_back(arc_point(a, a.a0));
  out.push_back(arc_point(a, a.a1));
}

}  // namespace

// --- UnionTree ------------------------------------------------------------------

UnionTree::UnionTree(
    const std::vector<Disk>& disks,
    const std::vector<std::vector<std::uint32_t>>& lens_partners) {
  std::vector<std::uint32_t> all(disks.size());
  std::iota(all.begin(), all.end(), 0);
  if (!all.empty()) root_ = build(std::move(all), disks, lens_partners);
}

int UnionTree::build(
    std::vector<std::uint32_t> members, const std::vector<Disk>& disks,
    const std::vector<std::vector<std::uint32_t>>& partners) {
  const int idx = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[idx].members = members;

  // U(node) is the union of the lenses with at least one endpoint below this
  // node. Its boundary on any circle m is the part inside the relevant
  // partner disks minus the open interiors of the other relevant lenses.
  std::vector<char> in_set(disks.size(), 0);
  for (std::uint32_t t : members) in_set[t] = 1;
  std::vector<std::uint32_t> circles;  // disks whose boundary can contribute
  {
    std::vector<char> seen(disks.size(), 0);
    for (std::uint32_t t : members) {
      if (!seen[t] && !partners[t].empty()) {
        seen[t] = 1;
        circles.push_back(t);
      }
      for (std::uint32_t j : partners[t]) {
        if (!seen[j]) {
          seen[j] = 1;
          circles.push_back(j);
        }
      }
    }
  }
  std::vector<Arc> arcs;
  for (std::uint32_t m : circles) {
    // partners of m that form a relevant pair (one endpoint in the node set)
    std::vector<std::uint32_t> rel;
    for (std::uint32_t j : partners[m]) {
      if (in_set[m] || in_set[j]) rel.push_back(j);
    }
    if (rel.empty()) continue;
    std::vector<AngleSpan> base = inside_union(disks[m], disks, rel);
    // subtract open lens interiors of relevant pairs not involving m
    std::vector<AngleSpan> sub;
    std::vector<std::uint32_t> local;  // disks interacting with circle m
    for (std::uint32_t j : partners[m]) local.push_back(j);
    for (std::size_t s = 0; s < local.size(); ++s) {
      for (std::size_t t = s + 1; t < local.size(); ++t) {
        const std::uint32_t a = local[s], b = local[t];
        if (!in_set[a] && !in_set[b]) continue;
        const auto ia = boundary_inside(disks[m], disks[a]);
        if (!ia) continue;
        const auto ib = boundary_inside(disks[m], disks[b]);
        if (!ib) continue;
        // the open lens interior of (a, b) on circle m; endpoint-only
        // overlaps vanish inside span_subtract
        for (const AngleSpan& piece : span_intersect_pair(*ia, *ib)) {
          sub.push_back(piece);
        }
      }
    }
    for (const AngleSpan& s : span_subtract(base, sub)) {
      arcs.push_back(make_arc(disks[m], s, m));
    }
  }
  nodes_[idx].xloc = SlabLocator(arcs, false);
  nodes_[idx].yloc = SlabLocator(arcs, true);

  if (members.size() > 1) {
    const std::size_t mid = members.size() / 2;
    std::vector<std::uint32_t> left(members.begin(),
                                    members.begin() + static_cast<std::ptrdiff_t>(mid));
    std::vector<std::uint32_t> right(members.begin() + static_cast<std::ptrdiff_t>(mid),
                                     members.end());
    const int l = build(std::move(left), disks, partners);
    const int r = build(std::move(right), disks, partners);
    nodes_[idx].left = l;
    nodes_[idx].right = r;
  }
  return idx;
}

bool UnionTree::edge_hits(const Node& nd, bool vertical, Coord fixed, Coord s1,
                          Coord s2) const {
  const double f = static_cast<double>(fixed);
  const double a = static_cast<double>(s1);
  const double b = static_cast<double>(s2);
  if (vertical) {
    return nd.xloc.contains(f, a) || nd.xloc.contains(f, b) ||
           nd.xloc.band_hit(f, a, b);
  }
  return nd.yloc.contains(a, f) || nd.yloc.contains(b, f) ||
         nd.yloc.band_hit(f, a, b);
}

void UnionTree::collect(const Rect2& q, std::vector<std::uint32_t>& out) const {
  if (root_ < 0) return;
  struct EdgeDef {
    bool vertical;
    Coord fixed;
    Coord s1, s2;
  } edges[4] = {{true, q.xs.lo, q.ys.lo, q.ys.hi},
                {true, q.xs.hi, q.ys.lo, q.ys.hi},
                {false, q.ys.lo, q.xs.lo, q.xs.hi},
                {false, q.ys.hi, q.xs.lo, q.xs.hi}};
  for (const EdgeDef& e : edges) {
    std::vector<int> stack{root_};
    while (!stack.empty()) {
      const int idx = stack.back();
      stack.pop_back();
      const Node& nd = nodes_[static_cast<std::size_t>(idx)];
      if (!edge_hits(nd, e.vertical, e.fixed, e.s1, e.s2)) continue;
      if (nd.left < 0) {
        out.insert(out.end(), nd.members.begin(), nd.members.end());
        continue;
      }
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
}

std::size_t UnionTree::piece_count() const {
  std::size_t c = 0;
  for (const Node& nd : nodes_) {
    c += nd.xloc.piece_count() + nd.yloc.piece_count();
  }
  return c;
}

// --- UnionIndex --------------------------------------------------------------------

UnionIndex::UnionIndex(std::vector<Disk> disks) : disks_(std::move(disks)) {
  const std::uint32_t n = static_cast<std::uint32_t>(disks_.size());
  const double eps = disk_eps();

  // reject configurations the arc arithmetic cannot represent reliably
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!(disks_[i].r > 0) || !std::isfinite(disks_[i].cx) ||
        !std::isfinite(disks_[i].cy) || !std::isfinite(disks_[i].r)) {
      throw std::invalid_argument("invalid disk");
    }
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(disks_[i].cx - disks_[j].cx,
                                  disks_[i].cy - disks_[j].cy);
      const double sum = disks_[i].r + disks_[j].r;
      const double diff = std::abs(disks_[i].r - disks_[j].r);
      if (std::abs(d - sum) <= eps || std::abs(d - diff) <= eps) {
        throw std::invalid_argument("near-tangent disk pair");
      }
    }
  }

  partners_.assign(n, {});
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (disks_overlap(disks_[i], disks_[j], 0.0)) {
        partners_[i].push_back(j);
        partners_[j].push_back(i);
      }
    }
  }

  stars_.reserve(n);
  std::vector<RangeReport2D<double>::Entry> reps;
  for (std::uint32_t i = 0; i < n; ++i) {
    StarRegion star;
    star.owner = i;
    const auto& ps = partners_[i];
    if (!ps.empty()) {
      // components of the union of lenses = connected components of the
      // triple-overlap graph over the partners
      DSU dsu(ps.size());
      for (std::size_t s = 0; s < ps.size(); ++s) {
        for (std::size_t t = s + 1; t < ps.size(); ++t) {
          if (disks_triple_intersect(disks_[i], disks_[ps[s]], disks_[ps[t]])) {
            dsu.unite(static_cast<std::uint32_t>(s),
                      static_cast<std::uint32_t>(t));
          }
        }
      }
      std::vector<int> comp_of(ps.size(), -1);
      int comp_count = 0;
      for (std::size_t s = 0; s < ps.size(); ++s) {
        const std::uint32_t root = dsu.find(static_cast<std::uint32_t>(s));
        if (comp_of[root] < 0) comp_of[root] = comp_count++;
        comp_of[s] = comp_of[root];
      }
      star.components.resize(static_cast<std::size_t>(comp_count));
      // arcs on the own circle: covered parts, attributed to the component
      // of any partner covering the midpoint
      const std::vector<AngleSpan> own =
          inside_union(disks_[i], disks_, ps);
      for (const AngleSpan& s : own) {
        const Arc arc = make_arc(disks_[i], s, i);
        const PointD mid = arc_point(arc, 0.5 * (s.a + s.b));
        int comp = -1;
        for (std::size_t t = 0; t < ps.size(); ++t) {
          if (disk_contains(disks_[ps[t]], mid.x, mid.y, disk_eps())) {
            comp = comp_of[t];
            break;
          }
        }
        if (comp < 0) comp = 0;  // cannot happen under general position
        star.components[static_cast<std::size_t>(comp)].arcs.push_back(arc);
      }
      // arcs on partner circles: inside the own disk, outside other partners
      for (std::size_t t = 0; t < ps.size(); ++t) {
        const std::uint32_t j = ps[t];
        const auto in_own = boundary_inside(disks_[j], disks_[i]);
        if (!in_own) continue;
        std::vector<AngleSpan> sub;
        for (std::size_t u = 0; u < ps.size(); ++u) {
          if (u == t) continue;
          if (auto s = boundary_inside(disks_[j], disks_[ps[u]])) {
            sub.push_back(*s);
          }
        }
        for (const AngleSpan& s : span_subtract({*in_own}, sub)) {
          star.components[static_cast<std::size_t>(comp_of[t])].arcs.push_back(
              make_arc(disks_[j], s, j));
        }
      }
      // representative point: deepest point of the smallest-id lens of the
      // component; vertices are the arc endpoints
      std::vector<int> rep_partner(static_cast<std::size_t>(comp_count), -1);
      for (std::size_t t = 0; t < ps.size(); ++t) {
        int& rp = rep_partner[static_cast<std::size_t>(comp_of[t])];
        if (rp < 0 || ps[t] < ps[static_cast<std::size_t>(rp)]) {
          rp = static_cast<int>(t);
        }
      }
      for (int c = 0; c < comp_count; ++c) {
        StarComponent& comp = star.components[static_cast<std::size_t>(c)];
        comp.rep = lens_rep(disks_[i],
                            disks_[ps[static_cast<std::size_t>(
                                rep_partner[static_cast<std::size_t>(c)])]]);
        for (const Arc& a : comp.arcs) append_vertices(a, comp.vertices);
        reps.push_back({comp.rep.x, comp.rep.y, i});
      }
    }
    stars_.push_back(std::move(star));
  }
  reps_ = RangeReport2D<double>(std::move(reps));
  tree_ = UnionTree(disks_, partners_);
}

SeedSet UnionIndex::seeds(const Rect2& q) const {
  SeedSet out;
  reps_.query(static_cast<double>(q.xs.lo), static_cast<double>(q.xs.hi),
              static_cast<double>(q.ys.lo), static_cast<double>(q.ys.hi), out);
  tree_.collect(q, out);
  sort_unique(out);
  return out;
}

PairReport UnionIndex::query(const Rect2& q) const {
  const SeedSet ss = seeds(q);
  const RealRect rq = to_real(q);
  // candidate generation by clipped x-extent overlap, confirmation by the
  // exact lens predicate
  struct Ext {
    double lo, hi;
    std::uint32_t id;
  };
  std::vector<Ext> exts;
  exts.reserve(ss.size());
  for (std::uint32_t i : ss) {
    const Disk& d = disks_[i];
    const double lo = std::max(d.cx - d.r, rq.x1);
    const double hi = std::min(d.cx + d.r, rq.x2);
    if (lo > hi) continue;
    exts.push_back({lo, hi, i});
  }
  std::sort(exts.begin(), exts.end(),
            [](const Ext& a, const Ext& b) { return a.lo < b.lo; });
  PairReport out;
  for (std::size_t s = 0; s < exts.size(); ++s) {
    for (std::size_t t = s + 1; t < exts.size() && exts[t].lo <= exts[s].hi;
         ++t) {
      if (lens_rect_intersects(disks_[exts[s].id], disks_[exts[t].id], rq)) {
        out.push_back(make_pair_id(exts[s].id, exts[t].id));
      }
    }
  }
  sort_unique(out);
  return out;
}

std::size_t UnionIndex::total_star_complexity() const {
  std::size_t c = 0;
  for (const StarRegion& s : stars_) c += s.complexity();
  return c;
}

}  // namespace rangepair

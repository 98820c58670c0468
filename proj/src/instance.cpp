#include "rangepair/instance.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rangepair/fat_pairs.hpp"

namespace rangepair {

namespace {

using json = nlohmann::ordered_json;  // keeps the documented key order

constexpr Coord kDomain = 1000000;  // coordinates live in [0, 10^6]

// Thin deterministic wrapper; distribution helpers avoid the
// implementation-defined std::uniform_* behavior.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::uint64_t u64() { return gen(); }

  Coord range(Coord lo, Coord hi) {  // inclusive
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Coord>(u64() % span);
  }

  double real(double lo, double hi) {
    const double u =
        static_cast<double>(u64() >> 11) * (1.0 / 9007199254740992.0);
    return lo + u * (hi - lo);
  }
};

Interval random_span(Rng& rng, Coord len) {
  len = std::clamp<Coord>(len, 1, kDomain);
  const Coord lo = rng.range(0, kDomain - len);
  return {lo, lo + len};
}

void gen_queries2(Rng& rng, std::size_t count, bool fixed_k, std::size_t n,
                  std::vector<Rect2>& out) {
  for (std::size_t t = 0; t < count; ++t) {
    Coord wx, wy;
    if (fixed_k) {
      const double side =
          kDomain * std::sqrt(3.0 / std::max<std::size_t>(n, 1));
      wx = static_cast<Coord>(side * rng.real(0.8, 1.2));
      wy = static_cast<Coord>(side * rng.real(0.8, 1.2));
    } else {
      wx = static_cast<Coord>(kDomain * rng.real(0.02, 0.3));
      wy = static_cast<Coord>(kDomain * rng.real(0.02, 0.3));
    }
    out.push_back({random_span(rng, wx), random_span(rng, wy)});
  }
}

void gen_queries3(Rng& rng, std::size_t count, double max_aspect,
                  std::vector<Box3>& out) {
  for (std::size_t t = 0; t < count; ++t) {
    const double base = kDomain * rng.real(0.05, 0.35);
    Coord side[3];
    side[0] = std::max<Coord>(1, static_cast<Coord>(base));
    // cap the stretched sides against the floored short side so the integer
    // aspect ratio never exceeds the limit
    const Coord cap = static_cast<Coord>(
        std::floor(static_cast<double>(side[0]) * max_aspect));
    for (int a = 1; a < 3; ++a) {
      side[a] = std::clamp(static_cast<Coord>(base * rng.real(1.0, max_aspect)),
                           side[0], cap);
    }
    out.push_back(
        {random_span(rng, side[0]), random_span(rng, side[1]),
         random_span(rng, side[2])});
  }
}

void gen_segments(Rng& rng, std::size_t n, Instance& inst) {
  const double base = 2.0 * kDomain / std::sqrt(std::max<std::size_t>(n, 1));
  for (std::size_t t = 0; t < n; ++t) {
    const Coord len =
        std::max<Coord>(1, static_cast<Coord>(base * rng.real(0.5, 1.5)));
    const Interval span = random_span(rng, len);
    const Coord fixed = rng.range(0, kDomain);
    if (t % 2 == 0) {
      inst.segs.push_back({Orientation::horizontal, fixed, span});
    } else {
      inst.segs.push_back({Orientation::vertical, fixed, span});
    }
  }
}

void gen_rects(Rng& rng, std::size_t n, Instance& inst) {
  const double base = kDomain / (2.0 * std::sqrt(std::max<std::size_t>(n, 1)));
  for (std::size_t t = 0; t < n; ++t) {
    const Coord w =
        std::max<Coord>(1, static_cast<Coord>(base * rng.real(0.5, 1.5)));
    const Coord h =
        std::max<Coord>(1, static_cast<Coord>(base * rng.real(0.5, 1.5)));
    inst.rects.push_back({random_span(rng, w), random_span(rng, h)});
  }
}

void gen_boxes(Rng& rng, std::size_t n, Instance& inst) {
  const double base =
      kDomain / (2.0 * std::cbrt(static_cast<double>(std::max<std::size_t>(n, 1))));
  for (std::size_t t = 0; t < n; ++t) {
    Coord s[3];
    for (int a = 0; a < 3; ++a) {
      s[a] = std::max<Coord>(1, static_cast<Coord>(base * rng.real(0.5, 1.5)));
    }
    inst.boxes.push_back(
        {random_span(rng, s[0]), random_span(rng, s[1]), random_span(rng, s[2])});
  }
}

void gen_cubes(Rng& rng, std::size_t n, double alpha, Instance& inst) {
  const double base =
      kDomain / (2.0 * std::cbrt(static_cast<double>(std::max<std::size_t>(n, 1))));
  for (std::size_t t = 0; t < n; ++t) {
    const Coord s =
        std::max<Coord>(1, static_cast<Coord>(base * rng.real(0.5, 1.5)));
    Coord side[3] = {s, s, s};
    if (alpha > 1.0) {
      // axis 0 keeps the shortest side so the aspect ratio stays exact
      for (int a = 1; a < 3; ++a) {
        side[a] = static_cast<Coord>(
            std::floor(static_cast<double>(s) * rng.real(1.0, alpha)));
        side[a] = std::max(side[a], s);
      }
    }
    inst.boxes.push_back({random_span(rng, side[0]), random_span(rng, side[1]),
                          random_span(rng, side[2])});
  }
}

void gen_disks(Rng& rng, std::size_t n, Instance& inst) {
  // general position by construction: reject near-tangencies, near-triple
  // points and tight center alignments with an absolute margin. Every triple
  // has a unique newest member, so checking the stored crossings of older
  // pairs against each candidate circle covers all triples.
  const double margin = 1.0;
  const double base = kDomain / (2.0 * std::sqrt(std::max<std::size_t>(n, 1)));
  std::vector<Disk>& ds = inst.disks;
  std::vector<std::pair<double, double>> crossings;
  while (ds.size() < n) {
    Disk d{rng.real(0, kDomain), rng.real(0, kDomain),
           base * rng.real(0.5, 1.5)};
    bool ok = true;
    for (const Disk& e : ds) {
      const double dist = std::hypot(d.cx - e.cx, d.cy - e.cy);
      if (std::abs(dist - (d.r + e.r)) < margin ||
          std::abs(dist - std::abs(d.r - e.r)) < margin || dist < margin) {
        ok = false;
        break;
      }
    }
    for (std::size_t c = 0; c < crossings.size() && ok; ++c) {
      const double dist =
          std::hypot(crossings[c].first - d.cx, crossings[c].second - d.cy);
      if (std::abs(dist - d.r) < margin) ok = false;
    }
    if (!ok) continue;
    for (const Disk& e : ds) {
      const double dx = e.cx - d.cx, dy = e.cy - d.cy;
      const double d2 = dx * dx + dy * dy;
      const double dist = std::sqrt(d2);
      if (dist >= d.r + e.r || dist <= std::abs(d.r - e.r)) continue;
      const double along = (d2 + d.r * d.r - e.r * e.r) / (2.0 * dist);
      double h2 = d.r * d.r - along * along;
      if (h2 < 0) h2 = 0;
      const double h = std::sqrt(h2);
      const double ux = dx / dist, uy = dy / dist;
      const double mx = d.cx + along * ux, my = d.cy + along * uy;
      crossings.emplace_back(mx - h * uy, my + h * ux);
      crossings.emplace_back(mx + h * uy, my - h * ux);
    }
    ds.push_back(d);
  }
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::segments: return "segments";
    case Kind::rects: return "rects";
    case Kind::boxes: return "boxes";
    case Kind::cubes: return "cubes";
    case Kind::fatboxes: return "fatboxes";
    case Kind::disks: return "disks";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::segments, Kind::rects, Kind::boxes, Kind::cubes,
                 Kind::fatboxes, Kind::disks}) {
    if (s == kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown kind: " + s);
}

bool kind_is_3d(Kind k) {
  return k == Kind::boxes || k == Kind::cubes || k == Kind::fatboxes;
}

std::size_t Instance::object_count() const {
  switch (kind) {
    case Kind::segments: return segs.size();
    case Kind::rects: return rects.size();
    case Kind::boxes:
    case Kind::cubes:
    case Kind::fatboxes: return boxes.size();
    case Kind::disks: return disks.size();
  }
  return 0;
}

Instance generate(Kind kind, std::size_t n, std::uint64_t seed,
                  const GenParams& params) {
  Instance inst;
  inst.kind = kind;
  inst.seed = seed;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  switch (kind) {
    case Kind::segments:
      gen_segments(rng, n, inst);
      break;
    case Kind::rects:
      gen_rects(rng, n, inst);
      break;
    case Kind::boxes:
      gen_boxes(rng, n, inst);
      break;
    case Kind::cubes:
      inst.alpha = 1.0;
      gen_cubes(rng, n, 1.0, inst);
      break;
    case Kind::fatboxes:
      if (params.alpha < 1.0) throw std::invalid_argument("alpha must be >= 1");
      inst.alpha = params.alpha;
      gen_cubes(rng, n, params.alpha, inst);
      break;
    case Kind::disks:
      gen_disks(rng, n, inst);
      break;
  }
  if (kind_is_3d(kind)) {
    const double qa = (kind == Kind::boxes) ? 3.0 : inst.alpha;
    gen_queries3(rng, params.queries, qa, inst.queries3);
  } else {
    gen_queries2(rng, params.queries, params.fixed_k, n, inst.queries2);
  }
  return inst;
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  json header;
  header["kind"] = kind_name(inst.kind);
  header["n"] = inst.object_count();
  header["seed"] = inst.seed;
  if (inst.kind == Kind::cubes || inst.kind == Kind::fatboxes) {
    header["alpha"] = inst.alpha;
  }
  out << header.dump() << "\n";
  switch (inst.kind) {
    case Kind::segments:
      for (const AxisSeg2& s : inst.segs) {
        json o;
        o["seg"] = {{"o", s.horizontal() ? "h" : "v"},
                    {"fixed", s.fixed},
                    {"lo", s.span.lo},
                    {"hi", s.span.hi}};
        out << o.dump() << "\n";
      }
      break;
    case Kind::rects:
      for (const Rect2& r : inst.rects) {
        out << json{{"rect", {r.xs.lo, r.xs.hi, r.ys.lo, r.ys.hi}}}.dump()
            << "\n";
      }
      break;
    case Kind::boxes:
    case Kind::cubes:
    case Kind::fatboxes:
      for (const Box3& b : inst.boxes) {
        out << json{{"box",
                     {b.xs.lo, b.xs.hi, b.ys.lo, b.ys.hi, b.zs.lo, b.zs.hi}}}
                   .dump()
            << "\n";
      }
      break;
    case Kind::disks:
      for (const Disk& d : inst.disks) {
        out << json{{"disk", {d.cx, d.cy, d.r}}}.dump() << "\n";
      }
      break;
  }
  if (kind_is_3d(inst.kind)) {
    for (const Box3& q : inst.queries3) {
      out << json{{"query",
                   {q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi, q.zs.lo, q.zs.hi}}}
                 .dump()
          << "\n";
    }
  } else {
    for (const Rect2& q : inst.queries2) {
      out << json{{"query", {q.xs.lo, q.xs.hi, q.ys.lo, q.ys.hi}}}.dump()
          << "\n";
    }
  }
  return out.str();
}

Instance read_instance(std::istream& in) {
  Instance inst;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty instance file");
  }
  const json header = json::parse(line);
  inst.kind = parse_kind(header.at("kind").get<std::string>());
  inst.seed = header.value("seed", std::uint64_t{0});
  inst.alpha = header.value("alpha", 1.0);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json o = json::parse(line);
    if (o.contains("seg")) {
      const json& s = o["seg"];
      inst.segs.push_back({s.at("o").get<std::string>() == "h"
                               ? Orientation::horizontal
                               : Orientation::vertical,
                           s.at("fixed").get<Coord>(),
                           {s.at("lo").get<Coord>(), s.at("hi").get<Coord>()}});
    } else if (o.contains("rect")) {
      const auto v = o["rect"].get<std::vector<Coord>>();
      inst.rects.push_back(rect(v[0], v[1], v[2], v[3]));
    } else if (o.contains("box")) {
      const auto v = o["box"].get<std::vector<Coord>>();
      inst.boxes.push_back(box(v[0], v[1], v[2], v[3], v[4], v[5]));
    } else if (o.contains("disk")) {
      const auto v = o["disk"].get<std::vector<double>>();
      inst.disks.push_back({v[0], v[1], v[2]});
    } else if (o.contains("query")) {
      if (kind_is_3d(inst.kind)) {
        const auto v = o["query"].get<std::vector<Coord>>();
        inst.queries3.push_back(box(v[0], v[1], v[2], v[3], v[4], v[5]));
      } else {
        const auto v = o["query"].get<std::vector<Coord>>();
        inst.queries2.push_back(rect(v[0], v[1], v[2], v[3]));
      }
    } else {
      throw std::runtime_error("unrecognized instance line: " + line);
    }
  }
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_instance(in);
}

void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << write_instance(inst);
}

std::string format_results(const std::vector<PairReport>& per_query) {
  std::ostringstream out;
  for (std::size_t t = 0; t < per_query.size(); ++t) {
    json pairs = json::array();
    for (const PairId& p : per_query[t]) {
      pairs.push_back({p.i, p.j});
    }
    out << json{{"q", t}, {"pairs", pairs}}.dump() << "\n";
  }
  return out.str();
}

}  // namespace rangepair

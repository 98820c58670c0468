#include "rangepair/oracle.hpp"

#include <stdexcept>

namespace rangepair {

Oracle::Oracle(const Instance& inst) : inst_(&inst) {
  switch (inst.kind) {
    case Kind::segments: {
      const auto& ss = inst.segs;
      for (std::uint32_t i = 0; i < ss.size(); ++i) {
        for (std::uint32_t j = i + 1; j < ss.size(); ++j) {
          if (ss[i].orientation == ss[j].orientation) continue;
          const bool i_h = ss[i].horizontal();
          const auto p = i_h ? seg_pair_point(ss[i], ss[j])
                             : seg_pair_point(ss[j], ss[i]);
          if (p) seg_cands_.push_back({{i, j}, *p});
        }
      }
      break;
    }
    case Kind::rects: {
      const auto& rs = inst.rects;
      for (std::uint32_t i = 0; i < rs.size(); ++i) {
        for (std::uint32_t j = i + 1; j < rs.size(); ++j) {
          if (auto c = rect_intersect(rs[i], rs[j])) {
            rect_cands_.push_back({{i, j}, *c});
          }
        }
      }
      break;
    }
    case Kind::boxes:
    case Kind::cubes:
    case Kind::fatboxes: {
      const auto& bs = inst.boxes;
      for (std::uint32_t i = 0; i < bs.size(); ++i) {
        for (std::uint32_t j = i + 1; j < bs.size(); ++j) {
          if (auto c = box_intersect(bs[i], bs[j])) {
            box_cands_.push_back({{i, j}, *c});
          }
        }
      }
      break;
    }
    case Kind::disks: {
      const auto& ds = inst.disks;
      for (std::uint32_t i = 0; i < ds.size(); ++i) {
        for (std::uint32_t j = i + 1; j < ds.size(); ++j) {
          if (disks_overlap(ds[i], ds[j], disk_eps())) {
            disk_cands_.push_back({i, j});
          }
        }
      }
      break;
    }
  }
}

PairReport Oracle::pairs(const Rect2& q) const {
  PairReport out;
  switch (inst_->kind) {
    case Kind::segments:
      for (const SegCand& c : seg_cands_) {
        if (q.contains(c.at)) out.push_back(c.id);
      }
      break;
    case Kind::rects:
      for (const RectCand& c : rect_cands_) {
        if (c.common.overlaps(q)) out.push_back(c.id);
      }
      break;
    case Kind::disks: {
      const RealRect rq = to_real(q);
      for (const PairId& p : disk_cands_) {
        if (lens_rect_intersects(inst_->disks[p.i], inst_->disks[p.j], rq)) {
          out.push_back(p);
        }
      }
      break;
    }
    default:
      throw std::logic_error("2D query against a 3D instance");
  }
  return out;  // candidates are generated in sorted order
}

PairReport Oracle::pairs(const Box3& q) const {
  if (!kind_is_3d(inst_->kind)) {
    throw std::logic_error("3D query against a 2D instance");
  }
  PairReport out;
  for (const BoxCand& c : box_cands_) {
    if (c.common.overlaps(q)) out.push_back(c.id);
  }
  return out;
}

PairReport Oracle::pairs_for_query(std::size_t query_index) const {
  if (kind_is_3d(inst_->kind)) return pairs(inst_->queries3.at(query_index));
  return pairs(inst_->queries2.at(query_index));
}

PairReport oracle_pairs(const Instance& inst, std::size_t query_index) {
  return Oracle(inst).pairs_for_query(query_index);
}

}  // namespace rangepair

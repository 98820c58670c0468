#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rangepair/geom.hpp"

namespace rangepair {

enum class Kind { segments, rects, boxes, cubes, fatboxes, disks };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);
bool kind_is_3d(Kind k);

// One reproducible problem instance: objects of a single class plus the
// query ranges, all derived deterministically from (kind, n, seed).
struct Instance {
  Kind kind = Kind::segments;
  std::uint64_t seed = 0;
  double alpha = 1.0;  // cubes / fatboxes only

  std::vector<AxisSeg2> segs;
  std::vector<Rect2> rects;
  std::vector<Box3> boxes;
  std::vector<Disk> disks;

  std::vector<Rect2> queries2;
  std::vector<Box3> queries3;

  std::size_t object_count() const;
  std::size_t query_count() const {
    return kind_is_3d(kind) ? queries3.size() : queries2.size();
  }
};

struct GenParams {
  std::size_t queries = 100;
  double alpha = 2.0;  // fatboxes
  bool fixed_k = false;  // shrink queries with n so the answer count stays flat
};

Instance generate(Kind kind, std::size_t n, std::uint64_t seed,
                  const GenParams& params = {});

// JSON-lines serialization: a header line, one object per line, then one
// query per line.
std::string write_instance(const Instance& inst);
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance_file(const Instance& inst, const std::string& path);

// Output lines for a batch of query answers, sorted pairs per query.
std::string format_results(const std::vector<PairReport>& per_query);

}  // namespace rangepair

#include "rangepair/check.hpp"

#include <array>
#include <chrono>
#include <memory>
#include <sstream>

#include "rangepair/box_pairs.hpp"
#include "rangepair/disk_pairs.hpp"
#include "rangepair/fat_pairs.hpp"
#include "rangepair/oracle.hpp"
#include "rangepair/rect_pairs.hpp"
#include "rangepair/seg_pairs.hpp"

namespace rangepair {

struct Engine::Impl {
  std::optional<SegIndex> segs;
  std::optional<RectIndex> rects;
  std::optional<BoxIndex> boxes;
  std::optional<FatIndex> fat;
  std::optional<UnionIndex> disks;
};

Engine::Engine(const Instance& inst) : impl_(std::make_unique<Impl>()) {
  switch (inst.kind) {
    case Kind::segments:
      impl_->segs.emplace(inst.segs);
      break;
    case Kind::rects:
      impl_->rects.emplace(inst.rects);
      break;
    case Kind::boxes:
      impl_->boxes.emplace(inst.boxes);
      break;
    case Kind::cubes:
    case Kind::fatboxes:
      impl_->fat.emplace(inst.boxes, inst.alpha);
      break;
    case Kind::disks:
      impl_->disks.emplace(inst.disks);
      break;
  }
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

PairReport Engine::query(const Instance& inst, std::size_t qi) const {
  if (impl_->segs) return impl_->segs->query(inst.queries2.at(qi));
  if (impl_->rects) return impl_->rects->query(inst.queries2.at(qi));
  if (impl_->boxes) return impl_->boxes->query(inst.queries3.at(qi));
  if (impl_->fat) return impl_->fat->query(inst.queries3.at(qi));
  return impl_->disks->query(inst.queries2.at(qi));
}

SeedSet Engine::seeds(const Instance& inst, std::size_t qi) const {
  if (impl_->segs) return impl_->segs->seeds(inst.queries2.at(qi));
  if (impl_->rects) return impl_->rects->seeds(inst.queries2.at(qi));
  if (impl_->boxes) {
    return impl_->boxes->seeds_and_direct(inst.queries3.at(qi)).first;
  }
  if (impl_->fat) return impl_->fat->seeds(inst.queries3.at(qi));
  return impl_->disks->seeds(inst.queries2.at(qi));
}

std::size_t Engine::entry_count() const {
  if (impl_->segs) return impl_->segs->entry_count();
  if (impl_->rects) return impl_->rects->entry_count();
  if (impl_->boxes) return impl_->boxes->entry_count();
  if (impl_->fat) return impl_->fat->entry_count();
  return impl_->disks->tree().piece_count();
}

namespace {

void remove_object(Instance& inst, std::size_t idx) {
  switch (inst.kind) {
    case Kind::segments:
      inst.segs.erase(inst.segs.begin() + static_cast<std::ptrdiff_t>(idx));
      break;
    case Kind::rects:
      inst.rects.erase(inst.rects.begin() + static_cast<std::ptrdiff_t>(idx));
      break;
    case Kind::boxes:
    case Kind::cubes:
    case Kind::fatboxes:
      inst.boxes.erase(inst.boxes.begin() + static_cast<std::ptrdiff_t>(idx));
      break;
    case Kind::disks:
      inst.disks.erase(inst.disks.begin() + static_cast<std::ptrdiff_t>(idx));
      break;
  }
}

bool query_mismatch(const Instance& inst, std::size_t qi) {
  try {
    const Engine engine(inst);
    const Oracle oracle(inst);
    return engine.query(inst, qi) != oracle.pairs_for_query(qi);
  } catch (const std::exception&) {
    return false;  // a rejected instance is not a usable counterexample
  }
}

}  // namespace

Instance shrink_instance(
    Instance inst, const std::function<bool(const Instance&)>& still_fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t idx = inst.object_count(); idx-- > 0;) {
      Instance candidate = inst;
      remove_object(candidate, idx);
      if (still_fails(candidate)) {
        inst = std::move(candidate);
        progress = true;
      }
    }
  }
  return inst;
}

CheckResult run_check_instance(const Instance& inst,
                               const std::string& counterexample_path) {
  using clock = std::chrono::steady_clock;
  CheckResult res;
  res.row.kind = kind_name(inst.kind);
  res.row.n = inst.object_count();

  const auto t0 = clock::now();
  const Engine engine(inst);
  const auto t1 = clock::now();
  res.row.build_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  res.row.structure_entries = engine.entry_count();

  const Oracle oracle(inst);
  const std::size_t m = inst.query_count();
  std::vector<PairReport> results(m);
  double total_us = 0, max_us = 0, total_k = 0, total_seeds = 0;
  for (std::size_t qi = 0; qi < m; ++qi) {
    // per-query time is the median of five repetitions
    std::array<double, 5> reps{};
    for (double& r : reps) {
      const auto q0 = clock::now();
      results[qi] = engine.query(inst, qi);
      const auto q1 = clock::now();
      r = std::chrono::duration<double, std::micro>(q1 - q0).count();
    }
    std::sort(reps.begin(), reps.end());
    const double us = reps[reps.size() / 2];
    total_us += us;
    max_us = std::max(max_us, us);
    total_k += static_cast<double>(results[qi].size());
    total_seeds += static_cast<double>(engine.seeds(inst, qi).size());
    if (results[qi] != oracle.pairs_for_query(qi)) {
      res.ok = false;
      res.row.oracle_match = false;
      res.first_mismatch = qi;
      const Instance minimal = shrink_instance(
          inst, [qi](const Instance& cand) { return query_mismatch(cand, qi); });
      write_instance_file(minimal, counterexample_path);
      res.counterexample_path = counterexample_path;
      break;
    }
  }
  if (m > 0) {
    res.row.mean_query_us = total_us / static_cast<double>(m);
    res.row.max_query_us = max_us;
    res.row.mean_k = total_k / static_cast<double>(m);
    res.row.mean_seeds = total_seeds / static_cast<double>(m);
  }
  if (res.ok) res.pair_output = format_results(results);
  return res;
}

CheckResult run_check(Kind kind, std::size_t n, std::size_t queries,
                      std::uint64_t seed, const GenParams& params,
                      const std::string& counterexample_path) {
  GenParams p = params;
  p.queries = queries;
  const Instance inst = generate(kind, n, seed, p);
  return run_check_instance(inst, counterexample_path);
}

std::string bench_csv_header() {
  return "kind,n,build_ms,structure_entries,mean_query_us,max_query_us,"
         "mean_k,mean_seeds,oracle_match\n";
}

std::string bench_csv_row(const BenchRow& r) {
  std::ostringstream out;
  out << r.kind << ',' << r.n << ',' << r.build_ms << ','
      << r.structure_entries << ',' << r.mean_query_us << ','
      << r.max_query_us << ',' << r.mean_k << ',' << r.mean_seeds << ','
      << (r.oracle_match ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace rangepair

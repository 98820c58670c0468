#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rangepair/instance.hpp"

namespace rangepair {

// Uniform handle over the per-class engines: build once, answer queries by
// instance query index.
class Engine {
 public:
  explicit Engine(const Instance& inst);
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  PairReport query(const Instance& inst, std::size_t query_index) const;
  SeedSet seeds(const Instance& inst, std::size_t query_index) const;
  std::size_t entry_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct BenchRow {
  std::string kind;
  std::size_t n = 0;
  double build_ms = 0;
  std::size_t structure_entries = 0;
  double mean_query_us = 0;
  double max_query_us = 0;
  double mean_k = 0;
  double mean_seeds = 0;
  bool oracle_match = true;
};

struct CheckResult {
  BenchRow row;
  bool ok = true;
  std::string pair_output;            // deterministic per-query pair lines
  std::size_t first_mismatch = 0;     // query index, when !ok
  std::string counterexample_path;    // minimized instance, when !ok
};

// Builds the engine, runs every query through engine and oracle, compares
// the pair sets exactly. On a mismatch the failing instance is shrunk
// greedily (every remaining object's removal makes it pass) and serialized.
CheckResult run_check(Kind kind, std::size_t n, std::size_t queries,
                      std::uint64_t seed, const GenParams& params = {},
                      const std::string& counterexample_path =
                          "counterexample.jsonl");

CheckResult run_check_instance(const Instance& inst,
                               const std::string& counterexample_path);

// Greedy object-removal minimization: drops objects while `still_fails`
// holds until no single removal keeps the instance failing. run_check drives
// it with "engine disagrees with oracle on the failing query".
Instance shrink_instance(Instance inst,
                         const std::function<bool(const Instance&)>& still_fails);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace rangepair

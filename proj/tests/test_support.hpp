#pragma once

// Shared test utilities: a deterministic RNG and small builders. The
// brute-force oracles asserted against live next to the tests that use them
// and never call into the engine code paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "rangepair/geom.hpp"

namespace rptest {

using namespace rangepair;

struct TestRng {
  std::mt19937_64 gen;
  explicit TestRng(std::uint64_t seed) : gen(seed) {}

  std::uint64_t u64() { return gen(); }

  Coord range(Coord lo, Coord hi) {
    return lo + static_cast<Coord>(u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double real(double lo, double hi) {
    const double u =
        static_cast<double>(u64() >> 11) * (1.0 / 9007199254740992.0);
    return lo + u * (hi - lo);
  }
};

inline Interval rand_interval(TestRng& rng, Coord domain, Coord max_len) {
  const Coord len = rng.range(0, max_len);
  const Coord lo = rng.range(0, domain - len);
  return {lo, lo + len};
}

inline Rect2 rand_rect(TestRng& rng, Coord domain, Coord max_len) {
  return {rand_interval(rng, domain, max_len), rand_interval(rng, domain, max_len)};
}

inline Box3 rand_box(TestRng& rng, Coord domain, Coord max_len) {
  return {rand_interval(rng, domain, max_len), rand_interval(rng, domain, max_len),
          rand_interval(rng, domain, max_len)};
}

}  // namespace rptest

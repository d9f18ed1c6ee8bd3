#pragma once

#include <cstdint>
#include <random>

#include "fanmoduli/calibration.hpp"
#include "fanmoduli/rational.hpp"

namespace fanmoduli {

// Seeded generator whose outputs depend only on the seed (ranges are mapped
// by modulo, not by the implementation-defined std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  bool coin() { return (next() & 1U) != 0; }
  // p / q with p in [-bound*den, bound*den] and q in [1, den].
  Rational rational(long bound, long den);

 private:
  std::mt19937_64 engine_;
};

// Standard calibration with random rational tail entries.
Calibration random_calibration(Rng& rng, std::size_t d, std::size_t n, long bound = 5,
                               long den = 6);

}  // namespace fanmoduli

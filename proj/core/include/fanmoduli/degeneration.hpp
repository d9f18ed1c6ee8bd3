#pragma once

#include <cstdint>

#include "fanmoduli/calibration.hpp"
#include "fanmoduli/combinatorial_type.hpp"
#include "fanmoduli/moduli.hpp"

namespace fanmoduli {

// Removes every member whose columns have rank below its cardinality. Rays
// with h(e_i) = 0 disappear together with all cones containing them.
CombinatorialType degenerate_type(const Calibration& h, const CombinatorialType& type);

// Zero-coordinate sets of the points of the quasi-affine variety attached to
// a type: exactly the members of the family.
struct ZeroPatternFamily {
  int n = 0;
  std::vector<Subset> allowed;  // shortlex
  friend bool operator==(const ZeroPatternFamily&, const ZeroPatternFamily&) = default;
};

ZeroPatternFamily zero_patterns(const CombinatorialType& type);
bool pattern_member(const Subset& zero_set, const ZeroPatternFamily& family);
// Every allowed pattern of `inner` is allowed in `outer`.
bool patterns_included(const ZeroPatternFamily& inner, const ZeroPatternFamily& outer);

struct Stratum {
  SignVector signs;
  CombinatorialType degenerate_type;
  Calibration witness;

  // Members of the original type missing from degenerate_type (shortlex).
  std::vector<Subset> removed_cones(const CombinatorialType& type) const;
  bool interior() const;
};

// Signs of h relative to the base point: a witness in a non-standard chart
// is compared up to the global sign of its representative. Throws
// PreconditionError("outside_closure") when some sign is opposite to the
// base sign.
SignVector relative_signs(const Calibration& h, const CombinatorialType& type,
                          const SignVector& base);

Stratum classify(const Calibration& h, const CombinatorialType& type, const Calibration& h0);

struct ScanOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  Subset chart;          // empty: standard chart
  unsigned threads = 0;  // 0: FANMODULI_THREADS or 1
};

// Observed strata, one per sign vector, ordered by sign vector. The witness
// of each stratum is the first sample (by index) with that sign vector.
std::vector<Stratum> strata_scan(const CombinatorialType& type, const Calibration& h0,
                                 const ScanOptions& options);

struct ProjectedCalibration {
  Vector w;          // rotation of h(e_i) by 90 degrees
  Rational alpha;    // positive generator of the pairing group
  Vector row;        // pairings divided by alpha, one per index
};

// d = 2; h(e_i), h(e_j) nonzero and negatively proportional.
ProjectedCalibration projected_calibration(const Calibration& h, int i, int j);

}  // namespace fanmoduli

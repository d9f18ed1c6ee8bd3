#pragma once

#include <map>

#include "fanmoduli/calibration.hpp"
#include "fanmoduli/combinatorial_type.hpp"

namespace fanmoduli {

// Sign of det(h(e_i), i in I) for each maximal cone I (ascending index
// order inside I).
using SignVector = std::map<Subset, int>;

// Throws UnsupportedError when the maximal cones do not have d elements.
SignVector det_signs(const Calibration& h, const CombinatorialType& type);

bool in_U(const Calibration& h, const CombinatorialType& type);

// Geometric test that the columns of h realize a fan whose combinatorics is
// exactly the type: independent cones, proper pairwise intersections, and
// no ray inside a facet that does not contain it.
bool is_admissible(const Calibration& h, const CombinatorialType& type);

// d = 2 only: an admissible fan is complete iff every ray lies in exactly
// two 2-cones. For d > 2 the type's completeness flag is returned.
bool is_complete(const Calibration& h, const CombinatorialType& type);

struct SignCondition {
  Subset cone;
  int sign;
  friend bool operator==(const SignCondition&, const SignCondition&) = default;
};

// Sign of each maximal-cone determinant at an admissible base point.
// Throws PreconditionError("inadmissible_base").
std::vector<SignCondition> component_inequalities(const CombinatorialType& type,
                                                  const Calibration& h0);

bool satisfies(const Calibration& h, const std::vector<SignCondition>& system);

bool same_stratum(const Calibration& h, const Calibration& h0,
                  const CombinatorialType& type);

}  // namespace fanmoduli

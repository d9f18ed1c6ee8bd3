#pragma once

#include "fanmoduli/calibration.hpp"
#include "fanmoduli/combinatorial_type.hpp"

namespace fanmoduli {

// Basis of ker(h) as an n x (n-d) matrix.
RationalMatrix gale(const Calibration& h);

// A kernel representative whose rows in `chart` form the identity.
struct ChartedKernel {
  RationalMatrix k;
  Subset chart;  // (n-d)-subset of rows
};

// k * (k_I)^{-1}. Throws PreconditionError("not_in_chart").
ChartedKernel chart_normalize(const RationalMatrix& k, const Subset& rows);

// K_{JI}(k) = rows J of s_I(k), so that s_J(k) = s_I(k) * K_{JI}(k)^{-1}.
RationalMatrix transition(const RationalMatrix& k, const Subset& from, const Subset& to);

// Coordinates indexed by the r-subsets of [1, n] in lexicographic order.
struct PluckerVector {
  std::size_t rank = 0;
  std::size_t n = 0;
  std::vector<Rational> coords;

  const Rational& at(const Subset& rows) const;
  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

std::size_t subset_index(const Subset& s, std::size_t n);

// All maximal minors, unnormalized. Throws PreconditionError("rank_deficient")
// when every minor vanishes.
PluckerVector maximal_minors(const RationalMatrix& k);

// Integer entries with unit content and first nonzero entry positive.
PluckerVector normalize(PluckerVector p);

PluckerVector plucker(const RationalMatrix& k);

// Weak sign condition sign(p_{I^c} p_{J^c}) in {0, sign} for maximal cones
// I, J.
struct ClosureCondition {
  Subset first;
  Subset second;
  int sign;
  friend bool operator==(const ClosureCondition&, const ClosureCondition&) = default;
};

std::vector<ClosureCondition> closure_conditions(const CombinatorialType& type,
                                                 const Calibration& h0);

// Throws DimensionError when the conditions refer to a different n.
bool in_closure(const PluckerVector& p, const std::vector<ClosureCondition>& conditions);

}  // namespace fanmoduli

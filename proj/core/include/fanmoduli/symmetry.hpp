#pragma once

#include <optional>

#include "fanmoduli/calibration.hpp"
#include "fanmoduli/combinatorial_type.hpp"

namespace fanmoduli {

// An element (tau, alpha, A, sigma) of the symmetry group of a type. The
// optional blocks act on the free indices J: alpha is |rays| x |J| (column j
// is alpha_j), A is |J| x |J|; both integral, det A = +-1. Absent blocks mean
// alpha = 0 and A = I.
struct GroupElement {
  RayPermutation tau;
  RayPermutation sigma;
  std::optional<RationalMatrix> alpha;
  std::optional<RationalMatrix> A;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(const CombinatorialType& type);

// Throws PreconditionError("not_automorphism" | "bad_block" | ...) when g
// is not an element of the group of the type.
void check_element(const GroupElement& g, const CombinatorialType& type);

// The n x n matrix H: H e_{tau(i)} = e_i on rays, H e_{sigma(v)} = e_v on
// virtual indices, and column j in J is (alpha_j ; A e_j).
RationalMatrix block_matrix(const GroupElement& g, const CombinatorialType& type);
GroupElement from_block_matrix(const RationalMatrix& H, const CombinatorialType& type);

// act(compose(g1, g2), h) == act(g1, act(g2, h)).
GroupElement compose(const GroupElement& g1, const GroupElement& g2,
                     const CombinatorialType& type);
GroupElement inverse(const GroupElement& g, const CombinatorialType& type);

// L h H^{-1} with L restoring the identity prefix. Throws
// PreconditionError("singular_chart") when the new prefix is singular.
Calibration act(const GroupElement& g, const Calibration& h, const CombinatorialType& type);

// Aut(D) x all permutations of the virtual set. Maximal types only
// (UnsupportedError otherwise).
std::vector<GroupElement> group_elements(const CombinatorialType& type);

// Sorted and deduplicated.
std::vector<Calibration> orbit(const Calibration& h, const CombinatorialType& type);
Calibration canonical_form(const Calibration& h, const CombinatorialType& type);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<GroupElement> witness;  // act(witness, h1) == h2
};
IsomorphismResult isomorphic(const Calibration& h1, const Calibration& h2,
                             const CombinatorialType& type);

// H k: the induced action on kernel representatives.
RationalMatrix grassmann_act(const GroupElement& g, const RationalMatrix& k,
                             const CombinatorialType& type);

// K_{g,I}(k) = rows I of H * s_I(k), with s_I(k) = k (k_I)^{-1}. Rows is the
// (n-d)-subset I. Throws PreconditionError("not_in_chart").
RationalMatrix action_cocycle(const GroupElement& g, const RationalMatrix& k,
                              const Subset& rows, const CombinatorialType& type);

}  // namespace fanmoduli

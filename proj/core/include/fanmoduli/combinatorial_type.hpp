#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fanmoduli {

// Sorted, duplicate-free list of 1-based generator indices.
using Subset = std::vector<int>;

// Shortlex order: by cardinality, then lexicographically.
bool shortlex_less(const Subset& a, const Subset& b);

// All k-subsets of {1..n} in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

Subset complement(const Subset& s, int n);

// A combinatorial type: a downward-closed family of index subsets (an
// abstract simplicial complex on the ray indices) together with the set of
// virtual generators. The constructor only normalizes (sorts members, adds
// the empty set, deduplicates); validity is checked by validate().
class CombinatorialType {
 public:
  CombinatorialType() = default;
  CombinatorialType(int d, int n, std::vector<Subset> cones,
                    Subset virtual_set = {}, bool complete = false);

  int d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  // Members in shortlex order, starting with the empty set.
  const std::vector<Subset>& cones() const noexcept { return cones_; }
  const Subset& virtual_set() const noexcept { return virtual_; }
  // User assertion that the type is that of a complete fan.
  bool complete() const noexcept { return complete_; }

  bool contains(const Subset& s) const;
  Subset rays() const;
  // Indices neither rays nor virtual (the set J).
  Subset free_set() const;
  std::size_t max_cardinality() const;
  // Members of maximal cardinality (D_max), shortlex order.
  std::vector<Subset> maximal_cones() const;
  // Members not contained in another member.
  std::vector<Subset> facets() const;

  friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;

 private:
  int d_ = 0;
  int n_ = 0;
  std::vector<Subset> cones_;
  Subset virtual_;
  bool complete_ = false;
};

struct Violation {
  std::string axiom;   // e.g. "downward_closure"
  Subset witness;
  std::string message;
};

// Checks every structural invariant of a combinatorial type; returns the
// first violated axiom with a witness subset, or nullopt.
std::optional<Violation> validate(const CombinatorialType& type);

// rays ∪ virtual = [1, n].
bool is_maximal_type(const CombinatorialType& type);

// A bijection of rays(D); image[k] is the image of domain[k].
struct RayPermutation {
  Subset domain;
  std::vector<int> image;

  int operator()(int ray) const;
  Subset apply(const Subset& s) const;
  bool is_identity() const;
  friend bool operator==(const RayPermutation&, const RayPermutation&) = default;
  friend auto operator<=>(const RayPermutation&, const RayPermutation&) = default;
};

// All cone-preserving bijections of rays(D), by backtracking over ray images
// (candidates restricted to rays of equal degree). Sorted; identity first.
std::vector<RayPermutation> automorphism_group(const CombinatorialType& type);

// Proper downward-closed subfamilies with the same rays and the same maximal
// cardinality (D itself excluded), in a deterministic order.
std::vector<CombinatorialType> enumerate_degenerations(const CombinatorialType& type);

// Families of the standard examples.
namespace types {

// Boundary of the d-simplex: all subsets of [1, d+1] of size <= d.
CombinatorialType simplex(int d);
// n-gon in the plane: rays 1..n, 2-cones {i, i+1} and {1, n}.
CombinatorialType cycle(int n);
// Single orthant cone: all subsets of [1, d].
CombinatorialType orthant(int d);
// Join of two types; indices of the second are shifted by n1.
CombinatorialType product(const CombinatorialType& a, const CombinatorialType& b);
// Renames index i to mapping[i-1].
CombinatorialType relabel(const CombinatorialType& type, const std::vector<int>& mapping);
// P^1 x P^2 relabeled so that [1,3] is a maximal cone: the P^1 rays are
// {1,4}, the P^2 rays are {2,3,5}.
CombinatorialType p1_times_p2();

}  // namespace types

}  // namespace fanmoduli

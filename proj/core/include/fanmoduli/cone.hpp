#pragma once

#include <vector>

#include "fanmoduli/matrix.hpp"

namespace fanmoduli {

// An oriented half-line R_{>=0} v, stored with integer coprime entries.
using Ray = Vector;
using RayList = std::vector<Ray>;

// Clears denominators and divides by the content. The direction is kept
// as-is (no sign flip). Throws PreconditionError for the zero vector.
Ray normalize_ray(const Vector& v);

// Normalizes, removes duplicates and sorts lexicographically.
RayList canonical_rays(const RayList& rays);

// Membership of x in Cone(generators) for linearly independent generators,
// decided by an exact nonnegative-coefficient solve.
bool cone_contains(const RayList& generators, const Vector& x);

// A polyhedral cone {x : E x = 0, A x >= 0}.
struct ConeInequalities {
  std::vector<Vector> equalities;
  std::vector<Vector> inequalities;
};

// H-description of a simplicial cone with linearly independent generators.
// Facet normals are complementary minors: normal_i(x) = det(g_1..x..g_k, c)
// with the span completed by a fixed basis of its orthogonal complement.
ConeInequalities simplicial_facets(const RayList& generators,
                                   std::size_t dim);

// Extreme rays of a pointed polyhedral cone, by enumerating tight subsystems
// of rank dim-1.
RayList extreme_rays(const ConeInequalities& cone, std::size_t dim);

// Extreme rays of Cone(a) ∩ Cone(b) (canonical order). Both inputs must be
// linearly independent families in the same dimension.
RayList cone_intersection(const RayList& a, const RayList& b);

}  // namespace fanmoduli

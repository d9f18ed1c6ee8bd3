#include "fanmoduli/cone.hpp"

#include <algorithm>

#include "fanmoduli/errors.hpp"
#include "fanmoduli/linalg.hpp"

namespace fanmoduli {

namespace {

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

void require_independent(const RayList& gens, std::size_t dim) {
  for (const auto& g : gens)
    if (g.size() != dim) throw DimensionError("generator dimension mismatch");
  if (gens.empty()) return;
  if (rank(RationalMatrix::from_columns(gens, dim)) != gens.size())
    throw PreconditionError("dependent_generators",
                            "cone generators must be linearly independent");
}

bool satisfies(const ConeInequalities& cone, const Vector& x) {
  for (const auto& e : cone.equalities)
    if (sgn(dot(e, x)) != 0) return false;
  for (const auto& a : cone.inequalities)
    if (sgn(dot(a, x)) < 0) return false;
  return true;
}

// Calls f on every subset of {0..n-1} of size <= k, in increasing order.
template <typename F>
void for_each_subset_upto(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    f(cur);
    if (cur.size() == k) return;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

Ray normalize_ray(const Vector& v) {
  Integer l = 1;
  bool nonzero = false;
  for (const auto& q : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    nonzero = nonzero || sgn(q) != 0;
  }
  if (!nonzero) throw PreconditionError("zero_ray", "cannot normalize the zero vector");
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    ints.push_back(q.get_num() * (l / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  Ray out;
  out.reserve(v.size());
  for (auto& z : ints) out.emplace_back(Integer(z / g));
  return out;
}

RayList canonical_rays(const RayList& rays) {
  RayList out;
  out.reserve(rays.size());
  for (const auto& r : rays) out.push_back(normalize_ray(r));
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool cone_contains(const RayList& generators, const Vector& x) {
  if (generators.empty())
    return std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; });
  require_independent(generators, x.size());
  const auto coeffs = solve(RationalMatrix::from_columns(generators, x.size()), x);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(),
                     [](const Rational& q) { return sgn(q) >= 0; });
}

ConeInequalities simplicial_facets(const RayList& generators, std::size_t dim) {
  require_independent(generators, dim);
  ConeInequalities out;
  if (generators.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e(dim);
      e[i] = 1;
      out.equalities.push_back(std::move(e));
    }
    return out;
  }
  const RationalMatrix g = RationalMatrix::from_columns(generators, dim);
  const RationalMatrix complement = nullspace(g.transpose());
  out.equalities = complement.columns();

  // Square frame [g_1 .. g_k | c_1 .. c_{dim-k}].
  std::vector<Vector> frame = generators;
  for (auto& c : out.equalities) frame.push_back(c);
  const int orientation = sgn(det(RationalMatrix::from_columns(frame, dim)));

  for (std::size_t i = 0; i < generators.size(); ++i) {
    Vector normal(dim);
    for (std::size_t axis = 0; axis < dim; ++axis) {
      std::vector<Vector> f = frame;
      f[i] = Vector(dim);
      f[i][axis] = 1;
      normal[axis] = orientation * det(RationalMatrix::from_columns(f, dim));
    }
    out.inequalities.push_back(std::move(normal));
  }
  return out;
}

RayList extreme_rays(const ConeInequalities& cone, std::size_t dim) {
  if (dim == 0) return {};
  const std::size_t n_ineq = cone.inequalities.size();
  RayList found;
  for_each_subset_upto(n_ineq, dim - 1, [&](const std::vector<std::size_t>& tight) {
    std::vector<Vector> rows = cone.equalities;
    for (auto t : tight) rows.push_back(cone.inequalities[t]);
    const RationalMatrix sys = rows.empty() ? RationalMatrix(0, dim)
                                            : RationalMatrix::from_rows(rows, dim);
    const RationalMatrix ker = nullspace(sys);
    if (ker.cols() != 1) return;
    Vector r = ker.column(0);
    Vector neg = r;
    for (auto& q : neg) q = -q;
    const bool pos_ok = satisfies(cone, r);
    const bool neg_ok = satisfies(cone, neg);
    if (pos_ok && neg_ok)
      throw PreconditionError("not_pointed", "cone contains a line");
    if (pos_ok) found.push_back(std::move(r));
    else if (neg_ok) found.push_back(std::move(neg));
  });
  return canonical_rays(found);
}

RayList cone_intersection(const RayList& a, const RayList& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t dim = a.front().size();
  require_independent(a, dim);
  require_independent(b, dim);
  ConeInequalities sys = simplicial_facets(a, dim);
  ConeInequalities fb = simplicial_facets(b, dim);
  sys.equalities.insert(sys.equalities.end(), fb.equalities.begin(), fb.equalities.end());
  sys.inequalities.insert(sys.inequalities.end(), fb.inequalities.begin(), fb.inequalities.end());
  return extreme_rays(sys, dim);
}

}  // namespace fanmoduli

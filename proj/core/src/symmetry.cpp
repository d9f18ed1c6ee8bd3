#include "fanmoduli/symmetry.hpp"

#include <algorithm>
#include <set>

#include "fanmoduli/errors.hpp"
#include "fanmoduli/grassmann.hpp"
#include "fanmoduli/linalg.hpp"

namespace fanmoduli {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i - 1); }

bool is_permutation_of(const RayPermutation& p, const Subset& support) {
  if (p.domain != support || p.image.size() != support.size()) return false;
  Subset sorted = p.image;
  std::sort(sorted.begin(), sorted.end());
  return sorted == support;
}

bool is_integral(const RationalMatrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

RayPermutation identity_on(const Subset& s) { return RayPermutation{s, s}; }

// Permutation p with H[i][p(i)] = 1 for i in support.
RayPermutation extract_permutation(const RationalMatrix& H, const Subset& support) {
  RayPermutation p{support, {}};
  for (int i : support) {
    int found = 0;
    for (int j : support)
      if (H(ix(i), ix(j)) != 0) {
        if (H(ix(i), ix(j)) != 1 || found) throw PreconditionError("bad_block", "not a permutation block");
        found = j;
      }
    if (!found) throw PreconditionError("bad_block", "not a permutation block");
    p.image.push_back(found);
  }
  return p;
}

}  // namespace

GroupElement identity_element(const CombinatorialType& type) {
  return GroupElement{identity_on(type.rays()), identity_on(type.virtual_set()), std::nullopt,
                      std::nullopt};
}

void check_element(const GroupElement& g, const CombinatorialType& type) {
  if (!is_permutation_of(g.tau, type.rays()))
    throw PreconditionError("not_automorphism", "tau is not a permutation of the rays");
  if (!is_permutation_of(g.sigma, type.virtual_set()))
    throw PreconditionError("bad_block", "sigma is not a permutation of the virtual set");
  for (const auto& c : type.cones()) {
    bool rays_only = std::all_of(c.begin(), c.end(), [&](int i) {
      return std::binary_search(g.tau.domain.begin(), g.tau.domain.end(), i);
    });
    if (rays_only && !type.contains(g.tau.apply(c)))
      throw PreconditionError("not_automorphism", "tau does not preserve the cone family");
  }
  const std::size_t nj = type.free_set().size();
  if (g.alpha && (g.alpha->rows() != type.rays().size() || g.alpha->cols() != nj ||
                  !is_integral(*g.alpha)))
    throw PreconditionError("bad_block", "alpha must be an integral |rays| x |J| matrix");
  if (g.A) {
    if (g.A->rows() != nj || g.A->cols() != nj || !is_integral(*g.A))
      throw PreconditionError("bad_block", "A must be an integral |J| x |J| matrix");
    const Rational dA = det(*g.A);
    if (dA != 1 && dA != -1) throw PreconditionError("bad_block", "A must be unimodular");
  }
}

RationalMatrix block_matrix(const GroupElement& g, const CombinatorialType& type) {
  const auto n = static_cast<std::size_t>(type.n());
  RationalMatrix H(n, n);
  for (std::size_t k = 0; k < g.tau.domain.size(); ++k)
    H(ix(g.tau.domain[k]), ix(g.tau.image[k])) = 1;
  for (std::size_t k = 0; k < g.sigma.domain.size(); ++k)
    H(ix(g.sigma.domain[k]), ix(g.sigma.image[k])) = 1;
  const Subset rays = type.rays();
  const Subset J = type.free_set();
  for (std::size_t b = 0; b < J.size(); ++b) {
    for (std::size_t a = 0; a < J.size(); ++a)
      H(ix(J[a]), ix(J[b])) = g.A ? (*g.A)(a, b) : Rational(a == b ? 1 : 0);
    if (g.alpha)
      for (std::size_t r = 0; r < rays.size(); ++r) H(ix(rays[r]), ix(J[b])) = (*g.alpha)(r, b);
  }
  return H;
}

GroupElement from_block_matrix(const RationalMatrix& H, const CombinatorialType& type) {
  const Subset rays = type.rays();
  const Subset J = type.free_set();
  GroupElement g;
  g.tau = extract_permutation(H, rays);
  g.sigma = extract_permutation(H, type.virtual_set());
  if (!J.empty()) {
    RationalMatrix alpha(rays.size(), J.size());
    RationalMatrix A(J.size(), J.size());
    for (std::size_t b = 0; b < J.size(); ++b) {
      for (std::size_t a = 0; a < J.size(); ++a) A(a, b) = H(ix(J[a]), ix(J[b]));
      for (std::size_t r = 0; r < rays.size(); ++r) alpha(r, b) = H(ix(rays[r]), ix(J[b]));
    }
    if (!alpha.is_zero()) g.alpha = alpha;
    if (!(A == RationalMatrix::identity(J.size()))) g.A = A;
  }
  return g;
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2,
                     const CombinatorialType& type) {
  return from_block_matrix(block_matrix(g1, type) * block_matrix(g2, type), type);
}

GroupElement inverse(const GroupElement& g, const CombinatorialType& type) {
  return from_block_matrix(fanmoduli::inverse(block_matrix(g, type)), type);
}

Calibration act(const GroupElement& g, const Calibration& h, const CombinatorialType& type) {
  if (static_cast<std::size_t>(type.n()) != h.n() || static_cast<std::size_t>(type.d()) != h.d())
    throw DimensionError("calibration and type disagree on d or n");
  const RationalMatrix M = h.matrix() * fanmoduli::inverse(block_matrix(g, type));
  try {
    return standardize(M, standard_chart(h.d()));
  } catch (const PreconditionError&) {
    throw PreconditionError("singular_chart", "image of the standard cone is singular");
  }
}

std::vector<GroupElement> group_elements(const CombinatorialType& type) {
  if (!is_maximal_type(type))
    throw UnsupportedError("the group is infinite for non-maximal types");
  std::vector<GroupElement> out;
  const auto auts = automorphism_group(type);
  std::vector<int> perm = type.virtual_set();
  std::vector<RayPermutation> sigmas;
  do {
    sigmas.push_back(RayPermutation{type.virtual_set(), perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& tau : auts)
    for (const auto& s : sigmas) out.push_back(GroupElement{tau, s, std::nullopt, std::nullopt});
  return out;
}

std::vector<Calibration> orbit(const Calibration& h, const CombinatorialType& type) {
  std::set<Calibration> seen;
  for (const auto& g : group_elements(type)) seen.insert(act(g, h, type));
  return {seen.begin(), seen.end()};
}

Calibration canonical_form(const Calibration& h, const CombinatorialType& type) {
  return orbit(h, type).front();
}

IsomorphismResult isomorphic(const Calibration& h1, const Calibration& h2,
                             const CombinatorialType& type) {
  for (const auto& g : group_elements(type))
    if (act(g, h1, type) == h2) return {true, g};
  return {false, std::nullopt};
}

RationalMatrix grassmann_act(const GroupElement& g, const RationalMatrix& k,
                             const CombinatorialType& type) {
  return block_matrix(g, type) * k;
}

RationalMatrix action_cocycle(const GroupElement& g, const RationalMatrix& k, const Subset& rows,
                              const CombinatorialType& type) {
  const RationalMatrix moved = block_matrix(g, type) * chart_normalize(k, rows).k;
  std::vector<std::size_t> idx;
  for (int i : rows) idx.push_back(ix(i));
  const RationalMatrix K = moved.select_rows(idx);
  if (det(K) == 0) throw PreconditionError("not_in_chart", "g.[k] is not in the chart");
  return K;
}

}  // namespace fanmoduli

#include "fanmoduli/moduli.hpp"

#include <algorithm>

#include "fanmoduli/cone.hpp"
#include "fanmoduli/errors.hpp"
#include "fanmoduli/linalg.hpp"

namespace fanmoduli {

namespace {

RayList generators(const Calibration& h, const Subset& s) {
  RayList out;
  for (int i : s) out.push_back(h.column(i));
  return out;
}

}  // namespace

SignVector det_signs(const Calibration& h, const CombinatorialType& type) {
  if (static_cast<std::size_t>(type.d()) != h.d() || static_cast<std::size_t>(type.n()) != h.n())
    throw DimensionError("calibration and type disagree on d or n");
  if (type.max_cardinality() != h.d())
    throw UnsupportedError("maximal cones must have d elements");
  SignVector out;
  for (const auto& c : type.maximal_cones()) out[c] = sign(det(h.columns(c)));
  return out;
}

bool in_U(const Calibration& h, const CombinatorialType& type) {
  const auto s = det_signs(h, type);
  return std::none_of(s.begin(), s.end(), [](const auto& kv) { return kv.second == 0; });
}

bool is_admissible(const Calibration& h, const CombinatorialType& type) {
  if (static_cast<std::size_t>(type.d()) != h.d() || static_cast<std::size_t>(type.n()) != h.n())
    throw DimensionError("calibration and type disagree on d or n");
  for (const auto& c : type.cones())
    if (!c.empty() && rank(h.columns(c)) != c.size()) return false;

  const auto facets = type.facets();
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      Subset common;
      std::set_intersection(facets[a].begin(), facets[a].end(), facets[b].begin(),
                            facets[b].end(), std::back_inserter(common));
      const RayList got = cone_intersection(generators(h, facets[a]), generators(h, facets[b]));
      if (got != canonical_rays(generators(h, common))) return false;
    }
  }
  for (int j : type.rays()) {
    for (const auto& f : facets) {
      if (std::binary_search(f.begin(), f.end(), j)) continue;
      if (cone_contains(generators(h, f), h.column(j))) return false;
    }
  }
  return true;
}

bool is_complete(const Calibration& h, const CombinatorialType& type) {
  if (h.d() != 2) return type.complete();
  if (!is_admissible(h, type)) return false;
  const auto facets = type.facets();
  for (int r : type.rays()) {
    int count = 0;
    for (const auto& f : facets) {
      if (f.size() != 2) return false;
      if (std::binary_search(f.begin(), f.end(), r)) ++count;
    }
    if (count != 2) return false;
  }
  return !type.rays().empty();
}

std::vector<SignCondition> component_inequalities(const CombinatorialType& type,
                                                  const Calibration& h0) {
  if (!is_admissible(h0, type))
    throw PreconditionError("inadmissible_base", "base calibration is not admissible");
  std::vector<SignCondition> out;
  for (const auto& [cone, s] : det_signs(h0, type)) out.push_back({cone, s});
  return out;
}

bool satisfies(const Calibration& h, const std::vector<SignCondition>& system) {
  return std::all_of(system.begin(), system.end(), [&](const SignCondition& c) {
    return sign(det(h.columns(c.cone))) == c.sign;
  });
}

bool same_stratum(const Calibration& h, const Calibration& h0, const CombinatorialType& type) {
  const auto s = det_signs(h, type);
  return s == det_signs(h0, type) &&
         std::none_of(s.begin(), s.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace fanmoduli

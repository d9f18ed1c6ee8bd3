#include "fanmoduli/degeneration.hpp"

#include <algorithm>

#include "fanmoduli/errors.hpp"
#include "fanmoduli/linalg.hpp"

namespace fanmoduli {

CombinatorialType degenerate_type(const Calibration& h, const CombinatorialType& type) {
  std::vector<Subset> kept;
  for (const auto& c : type.cones())
    if (c.empty() || rank(h.columns(c)) == c.size()) kept.push_back(c);
  return CombinatorialType(type.d(), type.n(), std::move(kept), type.virtual_set(), false);
}

ZeroPatternFamily zero_patterns(const CombinatorialType& type) {
  return {type.n(), type.cones()};
}

bool pattern_member(const Subset& zero_set, const ZeroPatternFamily& family) {
  return std::binary_search(family.allowed.begin(), family.allowed.end(), zero_set,
                            shortlex_less);
}

bool patterns_included(const ZeroPatternFamily& inner, const ZeroPatternFamily& outer) {
  return inner.n == outer.n &&
         std::all_of(inner.allowed.begin(), inner.allowed.end(),
                     [&](const Subset& s) { return pattern_member(s, outer); });
}

std::vector<Subset> Stratum::removed_cones(const CombinatorialType& type) const {
  std::vector<Subset> out;
  for (const auto& c : type.cones())
    if (!degenerate_type.contains(c)) out.push_back(c);
  return out;
}

bool Stratum::interior() const {
  return std::none_of(signs.begin(), signs.end(), [](const auto& kv) { return kv.second == 0; });
}

SignVector relative_signs(const Calibration& h, const CombinatorialType& type,
                          const SignVector& base) {
  SignVector s = det_signs(h, type);
  for (int t : {1, -1}) {
    bool ok = true;
    for (const auto& [cone, v] : s)
      if (v != 0 && t * v != base.at(cone)) ok = false;
    if (ok) {
      for (auto& kv : s) kv.second *= t;
      return s;
    }
  }
  throw PreconditionError("outside_closure", "a determinant has the sign opposite to the base");
}

Stratum classify(const Calibration& h, const CombinatorialType& type, const Calibration& h0) {
  const SignVector base = det_signs(h0, type);
  return Stratum{relative_signs(h, type, base), degenerate_type(h, type), h};
}

ProjectedCalibration projected_calibration(const Calibration& h, int i, int j) {
  if (h.d() != 2) throw UnsupportedError("projected calibration needs d = 2");
  const int n = static_cast<int>(h.n());
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw PreconditionError("bad_index", "i and j must be distinct indices in [1, n]");
  const Vector vi = h.column(i);
  const Vector vj = h.column(j);
  const bool zero = (vi[0] == 0 && vi[1] == 0) || (vj[0] == 0 && vj[1] == 0);
  if (zero || vi[0] * vj[1] - vi[1] * vj[0] != 0 || dot(vi, vj) >= 0)
    throw PreconditionError("not_opposite", "h(e_i) and h(e_j) are not negatively proportional");

  ProjectedCalibration out;
  out.w = {vi[1], -vi[0]};
  Vector pairings;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (int k = 1; k <= n; ++k) {
    pairings.push_back(dot(out.w, h.column(k)));
    const Rational& p = pairings.back();
    if (k == i || k == j || p == 0) continue;
    num_gcd = gcd(num_gcd, Integer(p.get_num()));
    den_lcm = lcm(den_lcm, Integer(p.get_den()));
  }
  if (num_gcd == 0)
    throw PreconditionError("gamma_pr_trivial", "all pairings with the remaining columns vanish");
  out.alpha = Rational(abs(num_gcd), den_lcm);
  out.alpha.canonicalize();
  for (const auto& p : pairings) out.row.push_back(p / out.alpha);
  return out;
}

}  // namespace fanmoduli

#include "fanmoduli/grassmann.hpp"

#include <algorithm>
#include <numeric>

#include "fanmoduli/errors.hpp"
#include "fanmoduli/linalg.hpp"
#include "fanmoduli/moduli.hpp"

namespace fanmoduli {

namespace {

std::vector<std::size_t> zero_based(const Subset& s) {
  std::vector<std::size_t> out;
  for (int i : s) out.push_back(static_cast<std::size_t>(i - 1));
  return out;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

RationalMatrix gale(const Calibration& h) { return kernel_basis(h.matrix()); }

ChartedKernel chart_normalize(const RationalMatrix& k, const Subset& rows) {
  if (rows.size() != k.cols()) throw DimensionError("chart must have n-d rows");
  for (int i : rows)
    if (i < 1 || static_cast<std::size_t>(i) > k.rows())
      throw DimensionError("chart row outside [1, n]");
  const RationalMatrix block = k.select_rows(zero_based(rows));
  if (det(block) == 0) throw PreconditionError("not_in_chart", "kernel is not in the chart");
  return {k * inverse(block), rows};
}

RationalMatrix transition(const RationalMatrix& k, const Subset& from, const Subset& to) {
  const RationalMatrix s = chart_normalize(k, from).k;
  const RationalMatrix K = s.select_rows(zero_based(to));
  if (det(K) == 0) throw PreconditionError("not_in_chart", "kernel is not in the target chart");
  return K;
}

std::size_t subset_index(const Subset& s, std::size_t n) {
  // Rank of s among the |s|-subsets of [1, n] in lexicographic order.
  const std::size_t r = s.size();
  Integer index = 0;
  int prev = 0;
  for (std::size_t pos = 0; pos < r; ++pos) {
    for (int v = prev + 1; v < s[pos]; ++v)
      index += binomial(n - static_cast<std::size_t>(v), r - pos - 1);
    prev = s[pos];
  }
  return index.get_ui();
}

const Rational& PluckerVector::at(const Subset& rows) const {
  if (rows.size() != rank) throw DimensionError("Plucker index has the wrong size");
  return coords.at(subset_index(rows, n));
}

PluckerVector maximal_minors(const RationalMatrix& k) {
  PluckerVector p{k.cols(), k.rows(), {}};
  for (const auto& rows : k_subsets(static_cast<int>(k.rows()), static_cast<int>(k.cols())))
    p.coords.push_back(det(k.select_rows(zero_based(rows))));
  if (std::all_of(p.coords.begin(), p.coords.end(), [](const Rational& q) { return q == 0; }))
    throw PreconditionError("rank_deficient", "kernel matrix does not have full column rank");
  return p;
}

PluckerVector normalize(PluckerVector p) {
  Integer den = 1;
  Integer content = 0;
  for (const auto& q : p.coords) den = lcm(den, Integer(q.get_den()));
  for (const auto& q : p.coords) content = gcd(content, Integer(q.get_num() * (den / q.get_den())));
  if (content == 0) throw PreconditionError("rank_deficient", "zero Plucker vector");
  int orient = 0;
  for (const auto& q : p.coords)
    if (q != 0) { orient = sign(q); break; }
  const Rational scale = Rational(den * orient, content);
  for (auto& q : p.coords) q *= scale;
  return p;
}

PluckerVector plucker(const RationalMatrix& k) { return normalize(maximal_minors(k)); }

std::vector<ClosureCondition> closure_conditions(const CombinatorialType& type,
                                                 const Calibration& h0) {
  if (!is_admissible(h0, type))
    throw PreconditionError("inadmissible_base", "base calibration is not admissible");
  if (type.max_cardinality() != h0.d())
    throw UnsupportedError("maximal cones must have d elements");
  const PluckerVector p = maximal_minors(gale(h0));
  const auto cones = type.maximal_cones();
  const int n = type.n();
  std::vector<ClosureCondition> out;
  if (cones.size() == 1) return {{cones[0], cones[0], 1}};
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b)
      out.push_back({cones[a], cones[b],
                     sign(p.at(complement(cones[a], n)) * p.at(complement(cones[b], n)))});
  return out;
}

bool in_closure(const PluckerVector& p, const std::vector<ClosureCondition>& conditions) {
  for (const auto& c : conditions) {
    for (const Subset* s : {&c.first, &c.second}) {
      if (!s->empty() && static_cast<std::size_t>(s->back()) > p.n)
        throw DimensionError("condition index outside [1, n]");
      if (s->size() + p.rank != p.n) throw DimensionError("condition does not match the rank");
    }
    const int n = static_cast<int>(p.n);
    const int s = sign(p.at(complement(c.first, n)) * p.at(complement(c.second, n)));
    if (s != 0 && s != c.sign) return false;
  }
  return true;
}

}  // namespace fanmoduli

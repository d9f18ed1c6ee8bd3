#pragma once

// Brute-force reference implementations used by the tests. None of them
// calls the elimination, search or chart code they are compared against.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "fanmoduli/calibration.hpp"
#include "fanmoduli/combinatorial_type.hpp"
#include "fanmoduli/matrix.hpp"
#include "fanmoduli/random.hpp"

namespace oracle {

using fanmoduli::Rational;
using fanmoduli::RationalMatrix;
using fanmoduli::Subset;
using fanmoduli::Vector;

inline Rational q(const char* text) { return fanmoduli::parse_rational(text); }

// Cofactor expansion along the first row.
inline Rational laplace_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Rational term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const RationalMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& rows : index_subsets(m.rows(), k))
      for (const auto& cols : index_subsets(m.cols(), k))
        if (laplace_det(m.select_rows(rows).select_columns(cols)) != 0) return k;
  return 0;
}

inline Rational det2(const Vector& a, const Vector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Every bijection of the rays, checked against the whole family.
inline std::set<std::vector<int>> brute_automorphisms(const fanmoduli::CombinatorialType& t) {
  const Subset rays = t.rays();
  std::vector<int> image = rays;
  std::set<std::vector<int>> out;
  const std::set<Subset> family(t.cones().begin(), t.cones().end());
  do {
    bool ok = true;
    for (const auto& c : t.cones()) {
      Subset img;
      for (int i : c) {
        const auto pos = std::lower_bound(rays.begin(), rays.end(), i) - rays.begin();
        img.push_back(image[static_cast<std::size_t>(pos)]);
      }
      std::sort(img.begin(), img.end());
      if (!family.count(img)) { ok = false; break; }
    }
    if (ok) out.insert(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

inline bool downward_closed(const std::set<Subset>& fam) {
  for (const auto& c : fam)
    for (std::size_t k = 0; k < c.size(); ++k) {
      Subset f = c;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
      if (!fam.count(f)) return false;
    }
  return true;
}

// All subfamilies keeping the empty set and every ray, filtered by the
// degeneration conditions.
inline std::set<std::set<Subset>> brute_degenerations(const fanmoduli::CombinatorialType& t) {
  std::vector<Subset> optional;
  std::set<Subset> fixed;
  for (const auto& c : t.cones()) (c.size() <= 1 ? fixed.insert(c), void() : optional.push_back(c));
  std::set<std::set<Subset>> out;
  const std::size_t top = t.max_cardinality();
  for (unsigned long mask = 0; mask < (1UL << optional.size()); ++mask) {
    if (mask + 1 == (1UL << optional.size())) continue;
    std::set<Subset> fam = fixed;
    std::size_t best = fixed.empty() ? 0 : 1;
    for (std::size_t k = 0; k < optional.size(); ++k)
      if (mask & (1UL << k)) {
        fam.insert(optional[k]);
        best = std::max(best, optional[k].size());
      }
    if (best == top && downward_closed(fam)) out.insert(fam);
  }
  return out;
}

// Winding number of the closed polygon through v_1, ..., v_n, v_1 around
// the origin, counted by signed crossings of the positive x half-axis.
inline int winding_number(const std::vector<Vector>& v) {
  int w = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Vector& a = v[k];
    const Vector& b = v[(k + 1) % v.size()];
    if (a[1] <= 0 && b[1] > 0 && det2(a, b) > 0) ++w;
    if (a[1] > 0 && b[1] <= 0 && det2(a, b) < 0) --w;
  }
  return w;
}

// A planar polygon of rays realizes the n-gon fan iff consecutive rays turn
// strictly in one direction and the polygon winds exactly once.
inline bool realizes_cycle(const std::vector<Vector>& v) {
  int orientation = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const int s = fanmoduli::sign(det2(v[k], v[(k + 1) % v.size()]));
    if (s == 0 || (orientation != 0 && s != orientation)) return false;
    orientation = s;
  }
  return std::abs(winding_number(v)) == 1;
}

// Membership in a planar sector spanned by independent a, b.
inline bool in_sector(const Vector& a, const Vector& b, const Vector& x) {
  const Rational d = det2(a, b);
  const Rational s = det2(x, b) / d;  // coefficient of a
  const Rational t = det2(a, x) / d;  // coefficient of b
  return s >= 0 && t >= 0;
}

inline fanmoduli::Calibration tail_calibration(std::size_t d, std::vector<Vector> tail) {
  return fanmoduli::Calibration::from_tail(d, tail);
}

// Columns of h in index order.
inline std::vector<Vector> columns(const fanmoduli::Calibration& h) {
  std::vector<Vector> out;
  for (std::size_t i = 1; i <= h.n(); ++i) out.push_back(h.column(static_cast<int>(i)));
  return out;
}

}  // namespace oracle

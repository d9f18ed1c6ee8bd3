#include "fanmoduli/combinatorial_type.hpp"

#include <algorithm>
#include <set>

namespace fanmoduli {

bool shortlex_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Subset complement(const Subset& s, int n) {
  Subset out;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

CombinatorialType::CombinatorialType(int d, int n, std::vector<Subset> cones,
                                     Subset virtual_set, bool complete)
    : d_(d), n_(n), cones_(std::move(cones)), virtual_(std::move(virtual_set)),
      complete_(complete) {
  for (auto& c : cones_) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  cones_.push_back({});
  std::sort(cones_.begin(), cones_.end(), shortlex_less);
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
  std::sort(virtual_.begin(), virtual_.end());
  virtual_.erase(std::unique(virtual_.begin(), virtual_.end()), virtual_.end());
}

bool CombinatorialType::contains(const Subset& s) const {
  return std::binary_search(cones_.begin(), cones_.end(), s, shortlex_less);
}

Subset CombinatorialType::rays() const {
  Subset r;
  for (const auto& c : cones_)
    if (c.size() == 1) r.push_back(c[0]);
  std::sort(r.begin(), r.end());
  return r;
}

Subset CombinatorialType::free_set() const {
  const Subset r = rays();
  Subset out;
  for (int i = 1; i <= n_; ++i)
    if (!std::binary_search(r.begin(), r.end(), i) &&
        !std::binary_search(virtual_.begin(), virtual_.end(), i))
      out.push_back(i);
  return out;
}

std::size_t CombinatorialType::max_cardinality() const {
  return cones_.empty() ? 0 : cones_.back().size();
}

std::vector<Subset> CombinatorialType::maximal_cones() const {
  std::vector<Subset> out;
  const std::size_t m = max_cardinality();
  for (const auto& c : cones_)
    if (c.size() == m) out.push_back(c);
  return out;
}

std::vector<Subset> CombinatorialType::facets() const {
  std::vector<Subset> out;
  for (const auto& c : cones_) {
    bool covered = false;
    for (const auto& o : cones_) {
      if (o.size() > c.size() && std::includes(o.begin(), o.end(), c.begin(), c.end())) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(c);
  }
  return out;
}

std::optional<Violation> validate(const CombinatorialType& type) {
  if (type.d() < 1 || type.n() < type.d())
    return Violation{"dimensions", {}, "need 1 <= d <= n"};

  for (const auto& c : type.cones())
    for (int i : c)
      if (i < 1 || i > type.n())
        return Violation{"index_range", c, "cone index outside [1, n]"};
  for (int i : type.virtual_set())
    if (i < 1 || i > type.n())
      return Violation{"index_range", {i}, "virtual index outside [1, n]"};

  if (!type.contains({})) return Violation{"empty_set", {}, "the zero cone is missing"};

  std::optional<Subset> missing;
  for (const auto& c : type.cones()) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Subset face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      if (!type.contains(face) && (!missing || shortlex_less(face, *missing)))
        missing = face;
    }
  }
  if (missing)
    return Violation{"downward_closure", *missing, "a face of a cone is not a cone"};

  for (const auto& c : type.cones())
    if (static_cast<int>(c.size()) > type.d())
      return Violation{"dimension_bound", c, "cone has more than d generators"};
  if (static_cast<int>(type.max_cardinality()) != type.d())
    return Violation{"no_full_dimensional_cone", {},
                     "no cone with exactly d generators"};

  Subset overlap;
  const Subset rays = type.rays();
  std::set_intersection(rays.begin(), rays.end(), type.virtual_set().begin(),
                        type.virtual_set().end(), std::back_inserter(overlap));
  if (!overlap.empty())
    return Violation{"virtual_overlap", overlap, "a virtual generator spans a ray"};
  return std::nullopt;
}

bool is_maximal_type(const CombinatorialType& type) { return type.free_set().empty(); }

int RayPermutation::operator()(int ray) const {
  const auto it = std::lower_bound(domain.begin(), domain.end(), ray);
  if (it == domain.end() || *it != ray) return ray;
  return image[static_cast<std::size_t>(it - domain.begin())];
}

Subset RayPermutation::apply(const Subset& s) const {
  Subset out;
  out.reserve(s.size());
  for (int i : s) out.push_back((*this)(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool RayPermutation::is_identity() const { return domain == image; }

}  // namespace fanmoduli

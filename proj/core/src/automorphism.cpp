#include <algorithm>
#include <map>
#include <set>

#include "fanmoduli/combinatorial_type.hpp"

namespace fanmoduli {

namespace {

// Number of members of each cardinality containing the ray. Automorphisms
// preserve it, so it restricts the candidate images.
std::vector<int> degree_profile(const CombinatorialType& type, int ray) {
  std::vector<int> profile(type.max_cardinality() + 1, 0);
  for (const auto& c : type.cones())
    if (std::binary_search(c.begin(), c.end(), ray)) ++profile[c.size()];
  return profile;
}

}  // namespace

std::vector<RayPermutation> automorphism_group(const CombinatorialType& type) {
  const Subset rays = type.rays();
  const std::size_t m = rays.size();
  std::map<int, std::size_t> position;
  for (std::size_t k = 0; k < m; ++k) position[rays[k]] = k;

  std::vector<std::vector<int>> profiles;
  for (int r : rays) profiles.push_back(degree_profile(type, r));

  // Members to check once the ray at position p has been assigned: those
  // whose highest-position element is p.
  std::vector<std::vector<const Subset*>> check_at(m);
  for (const auto& c : type.cones()) {
    if (c.empty()) continue;
    std::size_t last = 0;
    bool only_rays = true;
    for (int i : c) {
      auto it = position.find(i);
      if (it == position.end()) { only_rays = false; break; }
      last = std::max(last, it->second);
    }
    if (only_rays) check_at[last].push_back(&c);
  }

  std::vector<RayPermutation> group;
  std::vector<int> image(m, 0);
  std::vector<bool> used(m, false);

  auto consistent = [&](std::size_t p) {
    for (const Subset* c : check_at[p]) {
      Subset img;
      for (int i : *c) img.push_back(image[position[i]]);
      std::sort(img.begin(), img.end());
      if (!type.contains(img)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t p) -> void {
    if (p == m) {
      group.push_back(RayPermutation{rays, image});
      return;
    }
    for (std::size_t q = 0; q < m; ++q) {
      if (used[q] || profiles[q] != profiles[p]) continue;
      used[q] = true;
      image[p] = rays[q];
      if (consistent(p)) self(self, p + 1);
      used[q] = false;
    }
  };
  search(search, 0);
  std::sort(group.begin(), group.end(), [](const auto& a, const auto& b) {
    if (a.is_identity() != b.is_identity()) return a.is_identity();
    return a.image < b.image;
  });
  return group;
}

}  // namespace fanmoduli

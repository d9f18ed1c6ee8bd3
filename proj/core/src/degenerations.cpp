#include <algorithm>
#include <set>

#include "fanmoduli/combinatorial_type.hpp"

namespace fanmoduli {

std::vector<CombinatorialType> enumerate_degenerations(const CombinatorialType& type) {
  std::vector<Subset> base;   // ∅ and the rays, always kept
  std::vector<Subset> higher; // members of cardinality >= 2, shortlex order
  for (const auto& c : type.cones()) (c.size() <= 1 ? base : higher).push_back(c);

  const std::size_t target = type.max_cardinality();
  std::set<Subset> kept(base.begin(), base.end());
  std::vector<CombinatorialType> out;

  auto all_faces_kept = [&](const Subset& c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Subset face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      if (!kept.count(face)) return false;
    }
    return true;
  };

  std::size_t kept_higher = 0;
  std::size_t kept_max = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == higher.size()) {
      if (kept_higher == higher.size()) return;  // D itself
      if (kept_max == 0 && target >= 2) return;   // lost the top cardinality
      out.emplace_back(type.d(), type.n(),
                       std::vector<Subset>(kept.begin(), kept.end()),
                       type.virtual_set(), false);
      return;
    }
    const Subset& c = higher[i];
    if (all_faces_kept(c)) {
      kept.insert(c);
      ++kept_higher;
      if (c.size() == target) ++kept_max;
      self(self, i + 1);
      if (c.size() == target) --kept_max;
      --kept_higher;
      kept.erase(c);
    }
    self(self, i + 1);
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.cones().size() != b.cones().size()) return a.cones().size() > b.cones().size();
    return a.cones() < b.cones();
  });
  return out;
}

}  // namespace fanmoduli

#include <algorithm>

#include "fanmoduli/combinatorial_type.hpp"

namespace fanmoduli::types {

namespace {

std::vector<Subset> all_subsets_up_to(int n, int max_size) {
  std::vector<Subset> out;
  for (int k = 0; k <= max_size; ++k)
    for (auto& s : k_subsets(n, k)) out.push_back(std::move(s));
  return out;
}

}  // namespace

CombinatorialType simplex(int d) {
  return CombinatorialType(d, d + 1, all_subsets_up_to(d + 1, d), {}, true);
}

CombinatorialType cycle(int n) {
  std::vector<Subset> cones;
  for (int i = 1; i <= n; ++i) cones.push_back({i});
  for (int i = 1; i < n; ++i) cones.push_back({i, i + 1});
  cones.push_back({1, n});
  return CombinatorialType(2, n, std::move(cones), {}, true);
}

CombinatorialType orthant(int d) {
  return CombinatorialType(d, d, all_subsets_up_to(d, d), {}, false);
}

CombinatorialType product(const CombinatorialType& a, const CombinatorialType& b) {
  std::vector<Subset> cones;
  for (const auto& x : a.cones()) {
    for (const auto& y : b.cones()) {
      Subset s = x;
      for (int j : y) s.push_back(j + a.n());
      cones.push_back(std::move(s));
    }
  }
  Subset virt = a.virtual_set();
  for (int j : b.virtual_set()) virt.push_back(j + a.n());
  return CombinatorialType(a.d() + b.d(), a.n() + b.n(), std::move(cones), std::move(virt),
                           a.complete() && b.complete());
}

CombinatorialType relabel(const CombinatorialType& type, const std::vector<int>& mapping) {
  auto map_set = [&](const Subset& s) {
    Subset out;
    for (int i : s) out.push_back(mapping.at(static_cast<std::size_t>(i - 1)));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Subset> cones;
  for (const auto& c : type.cones()) cones.push_back(map_set(c));
  return CombinatorialType(type.d(), type.n(), std::move(cones),
                           map_set(type.virtual_set()), type.complete());
}

CombinatorialType p1_times_p2() { return relabel(product(simplex(1), simplex(2)), {1, 4, 2, 3, 5}); }

}  // namespace fanmoduli::types

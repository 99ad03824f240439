#include "threshold.hpp"

#include <algorithm>

namespace kfloer::detail {

std::optional<LevelWitness> threshold_search(F2Echelon base, const F2Vector& target,
                                             std::vector<ThresholdItem> items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const ThresholdItem& a, const ThresholdItem& b) { return a.level < b.level; });
  std::size_t k = 0;
  while (k < items.size()) {
    const std::size_t group = k;
    while (k < items.size() && items[k].level == items[group].level) base.insert(items[k++].vec);
    if (base.contains(target)) return LevelWitness{items[group].level, items[group].id};
  }
  return std::nullopt;
}

}  // namespace kfloer::detail

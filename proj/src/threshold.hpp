#pragma once

#include "kfloer/f2.hpp"
#include "kfloer/rational.hpp"
#include "kfloer/upsilon.hpp"

#include <optional>
#include <vector>

namespace kfloer::detail {

struct ThresholdItem {
  Rational level;
  F2Vector vec;
  std::size_t id = 0;
};

/// Least level L such that `target` lies in span(base + items with level <= L).
/// Items are added in level order, ties together. nullopt if the target is
/// never reached; level is meaningless when the target is already in `base`
/// (callers test that first).
std::optional<LevelWitness> threshold_search(F2Echelon base, const F2Vector& target,
                                             std::vector<ThresholdItem> items);

}  // namespace kfloer::detail

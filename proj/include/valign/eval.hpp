#pragma once

#include <cstddef>
#include <set>

#include "valign/alignment.hpp"

namespace valign {

// Known-true sentence correspondences in global coordinates.
struct GoldAlignment {
  std::set<GlobalPair> pairs;

  bool operator==(const GoldAlignment&) const = default;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
};

// Exact-pair set precision/recall/F1. Undefined ratios (empty predicted or
// empty gold) evaluate to 0 by convention; F1 = 2PR/(P+R) when P+R > 0.
EvalReport evaluate(const std::set<GlobalPair>& predicted,
                    const GoldAlignment& gold);

EvalReport evaluate_counts(std::size_t tp, std::size_t fp, std::size_t fn);

}  // namespace valign

#pragma once

#include <vector>

#include "valign/alignment.hpp"
#include "valign/text_model.hpp"

namespace valign {

struct ScoredGlobalPair {
  GlobalPair pair;
  double score = 0.0;

  auto operator<=>(const ScoredGlobalPair&) const = default;
};

// Token-overlap baseline: every cross-document sentence pair whose Jaccard
// similarity is strictly above the threshold, over all paragraph
// combinations. No paragraph alignment, no monotonicity. Pairs are emitted
// in row-major global order; score is the Jaccard value.
std::vector<ScoredGlobalPair> jaccard_align(const Document& d1,
                                            const Document& d2,
                                            double threshold);

}  // namespace valign

#pragma once

// Internal candidate-selection helpers shared by the paragraph and sentence
// aligners. Not installed.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>

#include "valign/alignment.hpp"

namespace valign::detail {

struct Candidate {
  IndexPair cell;
  double value = 0.0;
};

// Best in-bounds candidate by similarity; candidates listed in preference
// order, so ties keep the earlier (diagonal-first) cell. Out-of-bounds
// candidates are absent, not zero.
template <typename AtFn>
std::optional<Candidate> best_candidate(std::initializer_list<IndexPair> cells,
                                        std::size_t n_rows, std::size_t n_cols,
                                        AtFn&& at) {
  std::optional<Candidate> best;
  for (const IndexPair& c : cells) {
    if (c.x < 1 || c.y < 1 || c.x > n_rows || c.y > n_cols) continue;
    const double v = at(c.x, c.y);
    if (!best || v > best->value) best = Candidate{c, v};
  }
  return best;
}

// Nearest cell (squared euclidean distance to `origin`, exact integer
// arithmetic) within [from.x..n_rows] x [from.y..n_cols] whose similarity is
// at least alpha. `exclude_start` drops `from` itself, as jump searches
// must. Ties resolve to higher similarity, then smaller x, then smaller y —
// the scan order makes the index tie-break implicit.
template <typename AtFn>
std::optional<Candidate> nearest_at_or_above(IndexPair origin, IndexPair from,
                                             bool exclude_start, double alpha,
                                             std::size_t n_rows,
                                             std::size_t n_cols, AtFn&& at) {
  std::optional<Candidate> best;
  std::int64_t best_dist = 0;
  for (std::size_t x = from.x; x <= n_rows; ++x) {
    for (std::size_t y = from.y; y <= n_cols; ++y) {
      if (exclude_start && x == from.x && y == from.y) continue;
      const double v = at(x, y);
      if (v < alpha) continue;
      const std::int64_t dx =
          static_cast<std::int64_t>(x) - static_cast<std::int64_t>(origin.x);
      const std::int64_t dy =
          static_cast<std::int64_t>(y) - static_cast<std::int64_t>(origin.y);
      const std::int64_t dist = dx * dx + dy * dy;
      if (!best || dist < best_dist ||
          (dist == best_dist && v > best->value)) {
        best = Candidate{{x, y}, v};
        best_dist = dist;
      }
    }
  }
  return best;
}

}  // namespace valign::detail

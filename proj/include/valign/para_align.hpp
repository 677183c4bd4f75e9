#pragma once

#include <utility>

#include "valign/alignment.hpp"
#include "valign/text_model.hpp"

namespace valign {

struct ParaAlignConfig {
  double alpha = 0.5;  // minimum similarity for accepting a candidate
};

// Vicinity-driven paragraph alignment. Starting from the unconditional
// anchor (1,1), each step takes the best immediate neighbor (diagonal
// preferred on ties), falls back to the two single-skip cells, and finally
// jumps to the nearest remaining cell at or above alpha; terminates when no
// candidate remains. Throws EmptyMatrixError on a zero-dimension matrix.
AlignmentPath align_paragraphs(const SimilarityMatrix& m,
                               const ParaAlignConfig& cfg,
                               AlignTrace* trace = nullptr);

// Builds the pseudo-paragraph pair for one group: all sentences of the
// paragraphs in g.src concatenated in document order and re-indexed 1..n,
// likewise for g.tgt. Sentence texts are unchanged.
std::pair<Paragraph, Paragraph> concatenate_group(const Document& d1,
                                                  const Document& d2,
                                                  const AlignmentGroup& g);

}  // namespace valign

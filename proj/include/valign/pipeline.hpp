#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "valign/alignment.hpp"
#include "valign/para_align.hpp"
#include "valign/sent_align.hpp"
#include "valign/similarity.hpp"
#include "valign/text_model.hpp"

namespace valign {

struct ScoredSentencePair {
  GlobalPair pair;
  double score = 0.0;  // sentence-matrix entry of the marked pair

  auto operator<=>(const ScoredSentencePair&) const = default;
};

struct PipelineResult {
  std::vector<AlignmentGroup> paragraph_groups;
  std::vector<ScoredSentencePair> sentence_pairs;  // group order, marking order
  ParaAlignConfig para_cfg;
  SentAlignConfig sent_cfg;
};

// Filled on demand for --dump-matrices style diagnostics.
struct PipelineDebug {
  SimilarityMatrix paragraph_matrix;
  std::vector<std::pair<AlignmentGroup, SimilarityMatrix>> group_matrices;
};

// Per-group index translation tables: sentence counts of the paragraphs
// covered by each side of the group, in document order.
struct GroupOffsets {
  std::vector<std::size_t> src_sizes;
  std::vector<std::size_t> tgt_sizes;
};

GroupOffsets make_group_offsets(const Document& d1, const Document& d2,
                                const AlignmentGroup& g);

// Maps a local pair within a group's concatenated pseudo-paragraphs back to
// global (paragraph, sentence) coordinates. Bijective over the group's
// sentence set; throws OutOfBoundsError outside the concatenated bounds.
GlobalPair local_to_global(const AlignmentGroup& g, const GroupOffsets& off,
                           IndexPair local);

// Full two-stage alignment of a document pair: fit one tf-idf model over
// all sentences of both documents, align and group paragraphs, then align
// sentences within each group's concatenated pseudo-paragraphs and map the
// results back to global coordinates. Null-aligned paragraphs contribute no
// sentence pairs.
PipelineResult align_documents(const Document& d1, const Document& d2,
                               const ParaAlignConfig& para_cfg,
                               const SentAlignConfig& sent_cfg,
                               PipelineDebug* debug = nullptr);

std::set<GlobalPair> pipeline_pairs(const PipelineResult& result);

}  // namespace valign

#pragma once

#include <cstddef>
#include <vector>

#include "valign/alignment.hpp"
#include "valign/similarity.hpp"
#include "valign/text_model.hpp"

namespace valign {

struct SentAlignConfig {
  double alpha = 0.5;  // minimum similarity for initial point and jumps
  double beta = 0.05;  // slack tolerated before an expansion loop stops
};

// Inclusive 1-based span.
struct IndexSpan {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t size() const { return hi - lo + 1; }
};

// Similarity query of one sentence against a concatenation: at most one of
// row/col spans more than one sentence.
struct ConcatSimilarityQuery {
  IndexSpan row;
  IndexSpan col;
};

// Cosine between the tf-idf vector of the single-sentence side and the
// concatenation (token lists joined in order) of the spanned side. Spans of
// length 1 reduce exactly to the sentence_matrix entry. Throws
// OutOfBoundsError for invalid spans.
double concat_similarity(const TfIdfModel& model, const Paragraph& p1,
                         const Paragraph& p2, const ConcatSimilarityQuery& q);

// SimilaritySource over a concrete (pseudo-)paragraph pair. The full
// sentence matrix is precomputed; concatenated-range queries are answered
// from the model on demand.
class TfidfSentenceSource final : public SimilaritySource {
 public:
  TfidfSentenceSource(const TfIdfModel& model, const Paragraph& p1,
                      const Paragraph& p2);

  std::size_t rows() const override { return row_units_.size(); }
  std::size_t cols() const override { return col_units_.size(); }
  double at(std::size_t x, std::size_t y) const override;
  double row_concat(std::size_t x, std::size_t y_lo,
                    std::size_t y_hi) const override;
  double col_concat(std::size_t x_lo, std::size_t x_hi,
                    std::size_t y) const override;

  const SimilarityMatrix& matrix() const { return matrix_; }

 private:
  const TfIdfModel* model_;
  std::vector<TextUnit> row_units_;
  std::vector<TextUnit> col_units_;
  SimilarityMatrix matrix_;
};

// Vicinity-driven sentence alignment over any similarity source. Finds the
// initial point nearest the origin at or above alpha, then repeatedly takes
// the best immediate neighbor: diagonal steps mark 1-1 pairs; horizontal or
// vertical steps open an expansion loop that grows a 1-N / N-1 group while
// the concatenated similarity stays within beta of the previous size and
// beats the adjacent diagonal; anything below alpha falls back to a
// nearest-cell jump. Throws EmptyParagraphError on an empty axis.
AlignmentPath align_sentences_on(const SimilaritySource& sim,
                                 const SentAlignConfig& cfg,
                                 AlignTrace* trace = nullptr);

AlignmentPath align_sentences(const TfIdfModel& model, const Paragraph& p1,
                              const Paragraph& p2, const SentAlignConfig& cfg,
                              AlignTrace* trace = nullptr);

// Same contract as group_alignments, applied to sentence indices.
std::vector<AlignmentGroup> group_sentence_alignments(
    const AlignmentPath& path);

}  // namespace valign

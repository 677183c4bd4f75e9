#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "valign/text_model.hpp"

namespace valign {

// A bag of tokens: a sentence, or a concatenation of sentences/paragraphs.
struct TextUnit {
  std::vector<std::string> tokens;

  static TextUnit of_sentence(const Sentence& s) { return TextUnit{s.tokens}; }
  static TextUnit of_paragraph(const Paragraph& p);

  void append(const TextUnit& other);
};

// Sparse tf-idf vector, entries sorted by token id.
using SparseVector = std::vector<std::pair<std::size_t, double>>;

// Vocabulary and smoothed inverse-document-frequency weights fitted over a
// collection of text units. idf(t) = ln((n_units + 1) / (df(t) + 1)) + 1,
// which is strictly positive for every vocabulary token.
class TfIdfModel {
 public:
  static TfIdfModel fit(const std::vector<TextUnit>& units);

  std::optional<std::size_t> token_id(const std::string& token) const;
  double idf(std::size_t token_id) const;
  std::size_t vocabulary_size() const { return idf_.size(); }
  std::size_t unit_count() const { return n_units_; }
  std::size_t df(const std::string& token) const;

  // tf(t) = raw count within the unit; entry = tf * idf. Tokens outside the
  // vocabulary are skipped.
  SparseVector vectorize(const TextUnit& unit) const;

 private:
  std::unordered_map<std::string, std::size_t> vocab_;
  std::vector<double> idf_;
  std::vector<std::size_t> df_;
  std::size_t n_units_ = 0;
};

// Dense similarity matrix with 1-based indexing, matching the alignment
// coordinate convention used throughout. Values lie in [0, 1].
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t x, std::size_t y) const;
  void set(std::size_t x, std::size_t y, double value);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Throws EmptyCorpusError when units is empty.
TfIdfModel fit_tfidf(const std::vector<TextUnit>& units);

// Fits one model over all sentences of both documents; shared by the
// paragraph and sentence alignment stages of a document pair.
TfIdfModel fit_document_pair(const Document& d1, const Document& d2);

double dot(const SparseVector& a, const SparseVector& b);
double norm(const SparseVector& v);

// TF-IDF cosine in [0, 1]. Returns 0 when either vector is all-zero (empty
// unit or fully out of vocabulary).
double cosine(const TfIdfModel& model, const TextUnit& u, const TextUnit& v);

// Token-set Jaccard similarity; 0 when both units are empty.
double jaccard(const TextUnit& u, const TextUnit& v);

// values(i,j) = cosine(sentence i of p1, sentence j of p2).
SimilarityMatrix sentence_matrix(const TfIdfModel& model, const Paragraph& p1,
                                 const Paragraph& p2);

// values(i,j) = max cosine over all sentence pairs drawn from paragraph i of
// d1 and paragraph j of d2.
SimilarityMatrix paragraph_matrix(const TfIdfModel& model, const Document& d1,
                                  const Document& d2);

}  // namespace valign

#include "valign/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "valign/errors.hpp"

namespace valign {

TextUnit TextUnit::of_paragraph(const Paragraph& p) {
  TextUnit unit;
  for (const Sentence& s : p.sentences) {
    unit.tokens.insert(unit.tokens.end(), s.tokens.begin(), s.tokens.end());
  }
  return unit;
}

void TextUnit::append(const TextUnit& other) {
  tokens.insert(tokens.end(), other.tokens.begin(), other.tokens.end());
}

TfIdfModel TfIdfModel::fit(const std::vector<TextUnit>& units) {
  if (units.empty()) {
    throw EmptyCorpusError("tf-idf fit requires at least one unit");
  }
  TfIdfModel model;
  model.n_units_ = units.size();
  for (const TextUnit& unit : units) {
    // Count each token once per unit; ids are assigned in first-appearance
    // order so fitting is deterministic.
    std::set<std::size_t> seen;
    for (const std::string& token : unit.tokens) {
      auto [it, inserted] =
          model.vocab_.try_emplace(token, model.vocab_.size());
      if (inserted) model.df_.push_back(0);
      if (seen.insert(it->second).second) ++model.df_[it->second];
    }
  }
  model.idf_.resize(model.df_.size());
  const double n = static_cast<double>(model.n_units_);
  for (std::size_t id = 0; id < model.df_.size(); ++id) {
    model.idf_[id] =
        std::log((n + 1.0) / (static_cast<double>(model.df_[id]) + 1.0)) + 1.0;
  }
  return model;
}

std::optional<std::size_t> TfIdfModel::token_id(const std::string& token) const {
  auto it = vocab_.find(token);
  if (it == vocab_.end()) return std::nullopt;
  return it->second;
}

double TfIdfModel::idf(std::size_t token_id) const {
  if (token_id >= idf_.size()) {
    throw OutOfBoundsError("token id out of bounds");
  }
  return idf_[token_id];
}

std::size_t TfIdfModel::df(const std::string& token) const {
  auto id = token_id(token);
  return id ? df_[*id] : 0;
}

SparseVector TfIdfModel::vectorize(const TextUnit& unit) const {
  std::map<std::size_t, double> counts;
  for (const std::string& token : unit.tokens) {
    if (auto id = token_id(token)) counts[*id] += 1.0;
  }
  SparseVector vec;
  vec.reserve(counts.size());
  for (const auto& [id, tf] : counts) {
    vec.emplace_back(id, tf * idf_[id]);
  }
  return vec;
}

SimilarityMatrix::SimilarityMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

double SimilarityMatrix::at(std::size_t x, std::size_t y) const {
  if (x < 1 || x > rows_ || y < 1 || y > cols_) {
    throw OutOfBoundsError("matrix index out of bounds");
  }
  return values_[(x - 1) * cols_ + (y - 1)];
}

void SimilarityMatrix::set(std::size_t x, std::size_t y, double value) {
  if (x < 1 || x > rows_ || y < 1 || y > cols_) {
    throw OutOfBoundsError("matrix index out of bounds");
  }
  values_[(x - 1) * cols_ + (y - 1)] = value;
}

TfIdfModel fit_tfidf(const std::vector<TextUnit>& units) {
  return TfIdfModel::fit(units);
}

TfIdfModel fit_document_pair(const Document& d1, const Document& d2) {
  std::vector<TextUnit> units;
  for (const Document* doc : {&d1, &d2}) {
    for (const Paragraph& p : doc->paragraphs) {
      for (const Sentence& s : p.sentences) {
        units.push_back(TextUnit::of_sentence(s));
      }
    }
  }
  return fit_tfidf(units);
}

double dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double norm(const SparseVector& v) {
  double sum = 0.0;
  for (const auto& [id, w] : v) sum += w * w;
  return std::sqrt(sum);
}

namespace {

double cosine_of_vectors(const SparseVector& a, const SparseVector& b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot(a, b) / (na * nb), 0.0, 1.0);
}

}  // namespace

double cosine(const TfIdfModel& model, const TextUnit& u, const TextUnit& v) {
  return cosine_of_vectors(model.vectorize(u), model.vectorize(v));
}

double jaccard(const TextUnit& u, const TextUnit& v) {
  std::set<std::string> a(u.tokens.begin(), u.tokens.end());
  std::set<std::string> b(v.tokens.begin(), v.tokens.end());
  if (a.empty() && b.empty()) return 0.0;
  std::size_t intersection = 0;
  for (const std::string& t : a) intersection += b.count(t);
  const std::size_t unions = a.size() + b.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(unions);
}

SimilarityMatrix sentence_matrix(const TfIdfModel& model, const Paragraph& p1,
                                 const Paragraph& p2) {
  std::vector<SparseVector> rows, cols;
  rows.reserve(p1.size());
  cols.reserve(p2.size());
  for (const Sentence& s : p1.sentences) {
    rows.push_back(model.vectorize(TextUnit::of_sentence(s)));
  }
  for (const Sentence& s : p2.sentences) {
    cols.push_back(model.vectorize(TextUnit::of_sentence(s)));
  }
  SimilarityMatrix m(p1.size(), p2.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m.set(i + 1, j + 1, cosine_of_vectors(rows[i], cols[j]));
    }
  }
  return m;
}

SimilarityMatrix paragraph_matrix(const TfIdfModel& model, const Document& d1,
                                  const Document& d2) {
  // Paragraph similarity is the best sentence pair across the two
  // paragraphs, so one shared sentence dominates everything else.
  std::vector<std::vector<SparseVector>> rows(d1.size()), cols(d2.size());
  for (std::size_t i = 0; i < d1.size(); ++i) {
    for (const Sentence& s : d1.paragraphs[i].sentences) {
      rows[i].push_back(model.vectorize(TextUnit::of_sentence(s)));
    }
  }
  for (std::size_t j = 0; j < d2.size(); ++j) {
    for (const Sentence& s : d2.paragraphs[j].sentences) {
      cols[j].push_back(model.vectorize(TextUnit::of_sentence(s)));
    }
  }
  SimilarityMatrix m(d1.size(), d2.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      double best = 0.0;
      for (const SparseVector& a : rows[i]) {
        for (const SparseVector& b : cols[j]) {
          best = std::max(best, cosine_of_vectors(a, b));
        }
      }
      m.set(i + 1, j + 1, best);
    }
  }
  return m;
}

}  // namespace valign

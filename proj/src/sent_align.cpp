#include "valign/sent_align.hpp"

#include "valign/errors.hpp"
#include "vicinity.hpp"

namespace valign {

namespace {

TextUnit concat_units(const std::vector<TextUnit>& units, std::size_t lo,
                      std::size_t hi) {
  TextUnit merged;
  for (std::size_t i = lo; i <= hi; ++i) merged.append(units[i - 1]);
  return merged;
}

std::vector<TextUnit> paragraph_units(const Paragraph& p) {
  std::vector<TextUnit> units;
  units.reserve(p.size());
  for (const Sentence& s : p.sentences) {
    units.push_back(TextUnit::of_sentence(s));
  }
  return units;
}

}  // namespace

TfidfSentenceSource::TfidfSentenceSource(const TfIdfModel& model,
                                         const Paragraph& p1,
                                         const Paragraph& p2)
    : model_(&model),
      row_units_(paragraph_units(p1)),
      col_units_(paragraph_units(p2)),
      matrix_(sentence_matrix(model, p1, p2)) {}

double TfidfSentenceSource::at(std::size_t x, std::size_t y) const {
  return matrix_.at(x, y);
}

double TfidfSentenceSource::row_concat(std::size_t x, std::size_t y_lo,
                                       std::size_t y_hi) const {
  if (x < 1 || x > rows() || y_lo < 1 || y_lo > y_hi || y_hi > cols()) {
    throw OutOfBoundsError("row concat query out of bounds");
  }
  if (y_lo == y_hi) return matrix_.at(x, y_lo);
  return cosine(*model_, row_units_[x - 1], concat_units(col_units_, y_lo, y_hi));
}

double TfidfSentenceSource::col_concat(std::size_t x_lo, std::size_t x_hi,
                                       std::size_t y) const {
  if (y < 1 || y > cols() || x_lo < 1 || x_lo > x_hi || x_hi > rows()) {
    throw OutOfBoundsError("column concat query out of bounds");
  }
  if (x_lo == x_hi) return matrix_.at(x_lo, y);
  return cosine(*model_, concat_units(row_units_, x_lo, x_hi), col_units_[y - 1]);
}

double concat_similarity(const TfIdfModel& model, const Paragraph& p1,
                         const Paragraph& p2, const ConcatSimilarityQuery& q) {
  if (q.row.lo > q.row.hi || q.col.lo > q.col.hi) {
    throw OutOfBoundsError("concat query span is empty");
  }
  if (q.row.size() > 1 && q.col.size() > 1) {
    throw OutOfBoundsError("concat query may span at most one axis");
  }
  TfidfSentenceSource source(model, p1, p2);
  if (q.row.size() > 1) {
    return source.col_concat(q.row.lo, q.row.hi, q.col.lo);
  }
  return source.row_concat(q.row.lo, q.col.lo, q.col.hi);
}

AlignmentPath align_sentences_on(const SimilaritySource& sim,
                                 const SentAlignConfig& cfg,
                                 AlignTrace* trace) {
  const std::size_t n_rows = sim.rows();
  const std::size_t n_cols = sim.cols();
  if (n_rows == 0 || n_cols == 0) {
    throw EmptyParagraphError("sentence alignment requires non-empty paragraphs");
  }

  AlignmentPath path;
  path.n_rows = n_rows;
  path.n_cols = n_cols;
  if (trace) *trace = AlignTrace{};

  auto mark = [&](IndexPair cell, PairOrigin origin) {
    path.pairs.push_back(cell);
    if (trace) trace->origins.push_back(origin);
  };
  auto at = [&](std::size_t x, std::size_t y) { return sim.at(x, y); };

  // Initial point: qualifying cell nearest the origin. Titles give no
  // anchor at sentence level, so nothing is aligned unconditionally.
  auto initial =
      detail::nearest_at_or_above({0, 0}, {1, 1}, /*exclude_start=*/false,
                                  cfg.alpha, n_rows, n_cols, at);
  if (!initial) return path;
  IndexPair cur = initial->cell;
  mark(cur, PairOrigin::Initial);

  while (true) {
    if (trace) ++trace->iterations;

    auto v1 = detail::best_candidate({{cur.x + 1, cur.y + 1},
                                      {cur.x, cur.y + 1},
                                      {cur.x + 1, cur.y}},
                                     n_rows, n_cols, at);

    if (!v1 || v1->value < cfg.alpha) {
      // Jump to the nearest qualifying cell in the remaining rectangle; the
      // jump target is marked as-is, never expanded.
      auto jump = detail::nearest_at_or_above(cur, cur, /*exclude_start=*/true,
                                              cfg.alpha, n_rows, n_cols, at);
      if (!jump) break;
      cur = jump->cell;
      mark(cur, PairOrigin::Jump);
      continue;
    }

    const IndexPair next = v1->cell;
    if (next.x == cur.x + 1 && next.y == cur.y + 1) {
      cur = next;
      mark(cur, PairOrigin::Diagonal);
      continue;
    }

    if (next.x == cur.x) {
      // 1-N case: grow the run of target sentences while the concatenation
      // keeps its similarity within beta and beats the adjacent diagonal.
      mark(next, PairOrigin::HorizontalEntry);
      std::size_t len = 1;
      while (next.y + len <= n_cols) {
        const double grown = sim.row_concat(next.x, next.y, next.y + len);
        const double prev = sim.row_concat(next.x, next.y, next.y + len - 1);
        const double rival =
            next.x + 1 <= n_rows
                ? sim.row_concat(next.x + 1, next.y, next.y + len)
                : 0.0;
        if (grown > prev - cfg.beta && grown > rival) {
          mark({next.x, next.y + len}, PairOrigin::Expansion);
          ++len;
        } else {
          break;
        }
      }
      cur = IndexPair{next.x, next.y + len - 1};
      continue;
    }

    // N-1 case, mirror of the above.
    mark(next, PairOrigin::VerticalEntry);
    std::size_t len = 1;
    while (next.x + len <= n_rows) {
      const double grown = sim.col_concat(next.x, next.x + len, next.y);
      const double prev = sim.col_concat(next.x, next.x + len - 1, next.y);
      const double rival = next.y + 1 <= n_cols
                               ? sim.col_concat(next.x, next.x + len, next.y + 1)
                               : 0.0;
      if (grown > prev - cfg.beta && grown > rival) {
        mark({next.x + len, next.y}, PairOrigin::Expansion);
        ++len;
      } else {
        break;
      }
    }
    cur = IndexPair{next.x + len - 1, next.y};
  }
  return path;
}

AlignmentPath align_sentences(const TfIdfModel& model, const Paragraph& p1,
                              const Paragraph& p2, const SentAlignConfig& cfg,
                              AlignTrace* trace) {
  if (p1.sentences.empty() || p2.sentences.empty()) {
    throw EmptyParagraphError("sentence alignment requires non-empty paragraphs");
  }
  TfidfSentenceSource source(model, p1, p2);
  return align_sentences_on(source, cfg, trace);
}

std::vector<AlignmentGroup> group_sentence_alignments(
    const AlignmentPath& path) {
  return group_alignments(path);
}

}  // namespace valign

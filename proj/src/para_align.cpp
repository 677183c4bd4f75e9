#include "valign/para_align.hpp"

#include "valign/errors.hpp"
#include "vicinity.hpp"

namespace valign {

AlignmentPath align_paragraphs(const SimilarityMatrix& m,
                               const ParaAlignConfig& cfg,
                               AlignTrace* trace) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw EmptyMatrixError("paragraph alignment requires a non-empty matrix");
  }

  AlignmentPath path;
  path.n_rows = m.rows();
  path.n_cols = m.cols();
  if (trace) *trace = AlignTrace{};

  auto mark = [&](IndexPair cell, PairOrigin origin) {
    path.pairs.push_back(cell);
    if (trace) trace->origins.push_back(origin);
  };
  auto at = [&](std::size_t x, std::size_t y) { return m.at(x, y); };

  // The first paragraphs (titles) are aligned unconditionally, below the
  // threshold or not.
  IndexPair cur{1, 1};
  mark(cur, PairOrigin::Anchor);

  while (true) {
    if (trace) ++trace->iterations;

    // V1: immediate neighbors, diagonal preferred on ties.
    auto v1 = detail::best_candidate({{cur.x + 1, cur.y + 1},
                                      {cur.x, cur.y + 1},
                                      {cur.x + 1, cur.y}},
                                     m.rows(), m.cols(), at);
    if (v1 && v1->value >= cfg.alpha) {
      cur = v1->cell;
      mark(cur, PairOrigin::Vicinity1);
      continue;
    }

    // V2: single skips.
    auto v2 = detail::best_candidate(
        {{cur.x + 2, cur.y + 1}, {cur.x + 1, cur.y + 2}}, m.rows(), m.cols(),
        at);
    if (v2 && v2->value >= cfg.alpha) {
      cur = v2->cell;
      mark(cur, PairOrigin::Vicinity2Skip);
      continue;
    }

    // V3: nearest qualifying cell anywhere in the remaining rectangle.
    auto v3 = detail::nearest_at_or_above(cur, cur, /*exclude_start=*/true,
                                          cfg.alpha, m.rows(), m.cols(), at);
    if (!v3) break;
    cur = v3->cell;
    mark(cur, PairOrigin::Vicinity3Jump);
  }
  return path;
}

std::pair<Paragraph, Paragraph> concatenate_group(const Document& d1,
                                                  const Document& d2,
                                                  const AlignmentGroup& g) {
  auto concat = [](const Document& doc, const IndexRange& range) {
    if (range.lo < 1 || range.hi > doc.size() || range.lo > range.hi) {
      throw OutOfBoundsError("group range out of document bounds");
    }
    Paragraph merged;
    merged.index = 1;
    for (std::size_t p = range.lo; p <= range.hi; ++p) {
      for (const Sentence& s : doc.paragraph(p).sentences) {
        Sentence copy = s;
        copy.index = merged.sentences.size() + 1;
        merged.sentences.push_back(std::move(copy));
      }
    }
    return merged;
  };
  return {concat(d1, g.src), concat(d2, g.tgt)};
}

}  // namespace valign

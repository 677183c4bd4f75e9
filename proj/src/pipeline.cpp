#include "valign/pipeline.hpp"

#include "valign/errors.hpp"

namespace valign {

GroupOffsets make_group_offsets(const Document& d1, const Document& d2,
                                const AlignmentGroup& g) {
  GroupOffsets off;
  for (std::size_t p = g.src.lo; p <= g.src.hi; ++p) {
    off.src_sizes.push_back(d1.paragraph(p).size());
  }
  for (std::size_t p = g.tgt.lo; p <= g.tgt.hi; ++p) {
    off.tgt_sizes.push_back(d2.paragraph(p).size());
  }
  return off;
}

namespace {

SentenceRef resolve(std::size_t first_par,
                    const std::vector<std::size_t>& sizes, std::size_t local) {
  if (local < 1) throw OutOfBoundsError("local sentence index out of bounds");
  std::size_t remaining = local;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (remaining <= sizes[i]) return SentenceRef{first_par + i, remaining};
    remaining -= sizes[i];
  }
  throw OutOfBoundsError("local sentence index out of bounds");
}

}  // namespace

GlobalPair local_to_global(const AlignmentGroup& g, const GroupOffsets& off,
                           IndexPair local) {
  return GlobalPair{resolve(g.src.lo, off.src_sizes, local.x),
                    resolve(g.tgt.lo, off.tgt_sizes, local.y)};
}

PipelineResult align_documents(const Document& d1, const Document& d2,
                               const ParaAlignConfig& para_cfg,
                               const SentAlignConfig& sent_cfg,
                               PipelineDebug* debug) {
  if (d1.paragraphs.empty()) {
    throw EmptyDocumentError("source document is empty");
  }
  if (d2.paragraphs.empty()) {
    throw EmptyDocumentError("target document is empty");
  }

  PipelineResult result;
  result.para_cfg = para_cfg;
  result.sent_cfg = sent_cfg;

  const TfIdfModel model = fit_document_pair(d1, d2);
  const SimilarityMatrix para_matrix = paragraph_matrix(model, d1, d2);
  if (debug) debug->paragraph_matrix = para_matrix;

  const AlignmentPath para_path = align_paragraphs(para_matrix, para_cfg);
  result.paragraph_groups = group_alignments_bounded(para_path);

  for (const AlignmentGroup& group : result.paragraph_groups) {
    const auto [pseudo_src, pseudo_tgt] = concatenate_group(d1, d2, group);
    const TfidfSentenceSource source(model, pseudo_src, pseudo_tgt);
    if (debug) debug->group_matrices.emplace_back(group, source.matrix());

    const AlignmentPath sent_path = align_sentences_on(source, sent_cfg);
    const GroupOffsets offsets = make_group_offsets(d1, d2, group);
    for (const IndexPair& local : sent_path.pairs) {
      result.sentence_pairs.push_back(
          {local_to_global(group, offsets, local),
           source.at(local.x, local.y)});
    }
  }
  return result;
}

std::set<GlobalPair> pipeline_pairs(const PipelineResult& result) {
  std::set<GlobalPair> pairs;
  for (const ScoredSentencePair& p : result.sentence_pairs) {
    pairs.insert(p.pair);
  }
  return pairs;
}

}  // namespace valign

#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "valign/baseline.hpp"
#include "valign/eval.hpp"
#include "valign/pipeline.hpp"

namespace valign {

// Sentence-pair TSV: `src_par src_sent tgt_par tgt_sent score`, scores with
// six decimals, one '#' header line. The JSON form carries the same pairs
// grouped by paragraph group.
std::string result_to_tsv(const PipelineResult& result);
std::string result_to_json(const PipelineResult& result);

std::string groups_to_tsv(const std::vector<AlignmentGroup>& groups);
std::string groups_to_json(const std::vector<AlignmentGroup>& groups,
                           double alpha_paragraph);

std::string baseline_to_tsv(const std::vector<ScoredGlobalPair>& pairs);
std::string baseline_to_json(const std::vector<ScoredGlobalPair>& pairs,
                             double threshold);

std::string report_to_text(const EvalReport& report);
std::string report_to_json(const EvalReport& report);

// Gold / predicted pair files: four 1-based integer columns
// `src_par src_sent tgt_par tgt_sent`; '#'-prefixed comment lines and blank
// lines are ignored; extra columns (e.g. a score) are tolerated.
GoldAlignment read_gold_tsv(std::istream& in);
GoldAlignment read_gold_file(const std::string& path);
std::string gold_to_tsv(const GoldAlignment& gold);

std::set<GlobalPair> read_pairs_tsv(std::istream& in);
std::set<GlobalPair> read_pairs_file(const std::string& path);

// Debug dump: `row col value` with six decimals.
std::string matrix_to_tsv(const SimilarityMatrix& m);

}  // namespace valign

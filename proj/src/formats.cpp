#include "valign/formats.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "valign/errors.hpp"

namespace valign {

namespace {

using nlohmann::ordered_json;

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Scores are rounded to the TSV precision before JSON serialization so both
// formats carry identical information.
double round6(double v) { return std::round(v * 1e6) / 1e6; }

ordered_json pair_to_json(const GlobalPair& p, double score) {
  ordered_json j;
  j["src_par"] = p.src.par;
  j["src_sent"] = p.src.sent;
  j["tgt_par"] = p.tgt.par;
  j["tgt_sent"] = p.tgt.sent;
  j["score"] = round6(score);
  return j;
}

void append_pair_tsv(std::string& out, const GlobalPair& p, double score) {
  out += std::to_string(p.src.par) + '\t' + std::to_string(p.src.sent) + '\t' +
         std::to_string(p.tgt.par) + '\t' + std::to_string(p.tgt.sent) + '\t' +
         format_score(score) + '\n';
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::size_t parse_index(const std::string& field, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(field, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != field.size() || value < 1) {
    throw IoError("line " + std::to_string(line_no) +
                  ": expected a positive integer, got '" + field + "'");
  }
  return static_cast<std::size_t>(value);
}

std::set<GlobalPair> read_pair_lines(std::istream& in) {
  std::set<GlobalPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() < 4) {
      throw IoError("line " + std::to_string(line_no) +
                    ": expected 4 columns `src_par src_sent tgt_par tgt_sent`");
    }
    pairs.insert(GlobalPair{{parse_index(fields[0], line_no), parse_index(fields[1], line_no)},
                  {parse_index(fields[2], line_no), parse_index(fields[3], line_no)}});
  }
  return pairs;
}

}  // namespace

std::string result_to_tsv(const PipelineResult& result) {
  std::string out = "# src_par\tsrc_sent\ttgt_par\ttgt_sent\tscore\n";
  for (const ScoredSentencePair& p : result.sentence_pairs) {
    append_pair_tsv(out, p.pair, p.score);
  }
  return out;
}

std::string result_to_json(const PipelineResult& result) {
  ordered_json j;
  j["config"]["alpha_paragraph"] = result.para_cfg.alpha;
  j["config"]["alpha_sentence"] = result.sent_cfg.alpha;
  j["config"]["beta"] = result.sent_cfg.beta;
  j["paragraph_groups"] = ordered_json::array();
  for (const AlignmentGroup& g : result.paragraph_groups) {
    ordered_json jg;
    jg["src_start"] = g.src.lo;
    jg["src_end"] = g.src.hi;
    jg["tgt_start"] = g.tgt.lo;
    jg["tgt_end"] = g.tgt.hi;
    jg["sentence_pairs"] = ordered_json::array();
    for (const ScoredSentencePair& p : result.sentence_pairs) {
      if (p.pair.src.par >= g.src.lo && p.pair.src.par <= g.src.hi) {
        jg["sentence_pairs"].push_back(pair_to_json(p.pair, p.score));
      }
    }
    j["paragraph_groups"].push_back(std::move(jg));
  }
  return j.dump(2) + "\n";
}

std::string groups_to_tsv(const std::vector<AlignmentGroup>& groups) {
  std::string out = "# src_start\tsrc_end\ttgt_start\ttgt_end\n";
  for (const AlignmentGroup& g : groups) {
    out += std::to_string(g.src.lo) + '\t' + std::to_string(g.src.hi) + '\t' +
           std::to_string(g.tgt.lo) + '\t' + std::to_string(g.tgt.hi) + '\n';
  }
  return out;
}

std::string groups_to_json(const std::vector<AlignmentGroup>& groups,
                           double alpha_paragraph) {
  ordered_json j;
  j["config"]["alpha_paragraph"] = alpha_paragraph;
  j["paragraph_groups"] = ordered_json::array();
  for (const AlignmentGroup& g : groups) {
    ordered_json jg;
    jg["src_start"] = g.src.lo;
    jg["src_end"] = g.src.hi;
    jg["tgt_start"] = g.tgt.lo;
    jg["tgt_end"] = g.tgt.hi;
    j["paragraph_groups"].push_back(std::move(jg));
  }
  return j.dump(2) + "\n";
}

std::string baseline_to_tsv(const std::vector<ScoredGlobalPair>& pairs) {
  std::string out = "# src_par\tsrc_sent\ttgt_par\ttgt_sent\tscore\n";
  for (const ScoredGlobalPair& p : pairs) {
    append_pair_tsv(out, p.pair, p.score);
  }
  return out;
}

std::string baseline_to_json(const std::vector<ScoredGlobalPair>& pairs,
                             double threshold) {
  ordered_json j;
  j["config"]["threshold"] = threshold;
  j["sentence_pairs"] = ordered_json::array();
  for (const ScoredGlobalPair& p : pairs) {
    j["sentence_pairs"].push_back(pair_to_json(p.pair, p.score));
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const EvalReport& report) {
  std::string out;
  out += "true_positives\t" + std::to_string(report.true_positives) + '\n';
  out += "false_positives\t" + std::to_string(report.false_positives) + '\n';
  out += "false_negatives\t" + std::to_string(report.false_negatives) + '\n';
  out += "precision\t" + format_score(report.precision) + '\n';
  out += "recall\t" + format_score(report.recall) + '\n';
  out += "f1\t" + format_score(report.f1) + '\n';
  return out;
}

std::string report_to_json(const EvalReport& report) {
  ordered_json j;
  j["true_positives"] = report.true_positives;
  j["false_positives"] = report.false_positives;
  j["false_negatives"] = report.false_negatives;
  j["precision"] = round6(report.precision);
  j["recall"] = round6(report.recall);
  j["f1"] = round6(report.f1);
  return j.dump(2) + "\n";
}

GoldAlignment read_gold_tsv(std::istream& in) {
  return GoldAlignment{read_pair_lines(in)};
}

GoldAlignment read_gold_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open gold file: " + path);
  return read_gold_tsv(in);
}

std::string gold_to_tsv(const GoldAlignment& gold) {
  std::string out = "# src_par\tsrc_sent\ttgt_par\ttgt_sent\n";
  for (const GlobalPair& p : gold.pairs) {
    out += std::to_string(p.src.par) + '\t' + std::to_string(p.src.sent) +
           '\t' + std::to_string(p.tgt.par) + '\t' +
           std::to_string(p.tgt.sent) + '\n';
  }
  return out;
}

std::set<GlobalPair> read_pairs_tsv(std::istream& in) {
  return read_pair_lines(in);
}

std::set<GlobalPair> read_pairs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pairs file: " + path);
  return read_pairs_tsv(in);
}

std::string matrix_to_tsv(const SimilarityMatrix& m) {
  std::string out;
  for (std::size_t x = 1; x <= m.rows(); ++x) {
    for (std::size_t y = 1; y <= m.cols(); ++y) {
      out += std::to_string(x) + '\t' + std::to_string(y) + '\t' +
             format_score(m.at(x, y)) + '\n';
    }
  }
  return out;
}

}  // namespace valign

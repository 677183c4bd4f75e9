// valign: vicinity-driven paragraph and sentence aligner for comparable
// document pairs.
//
// Subcommands: align, align-paragraphs, baseline-jaccard, eval, synth.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "valign/baseline.hpp"
#include "valign/errors.hpp"
#include "valign/eval.hpp"
#include "valign/formats.hpp"
#include "valign/pipeline.hpp"
#include "valign/synth.hpp"

namespace {

struct RunConfig {
  std::string src_path;
  std::string tgt_path;
  std::string pred_path;
  std::string gold_path;
  std::string output_path;  // empty = stdout
  std::string format = "tsv";
  double alpha_paragraph = 0.5;
  double alpha_sentence = 0.5;
  double beta = 0.05;
  double jaccard_threshold = 0.5;
  bool dump_matrices = false;

  std::uint64_t seed = 42;
  std::string spec_path;
  std::string out_src;
  std::string out_tgt;
  std::string out_gold;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw valign::IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw valign::IoError("cannot open output file: " + path);
  out << content;
  if (!out) throw valign::IoError("failed writing output file: " + path);
}

// Outputs are materialized in memory first; nothing is written on error.
void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.output_path.empty()) {
    std::cout << content;
  } else {
    write_file(cfg.output_path, content);
  }
}

int run_align(const RunConfig& cfg) {
  const valign::Document src = valign::parse_document_file(cfg.src_path);
  const valign::Document tgt = valign::parse_document_file(cfg.tgt_path);

  const valign::ParaAlignConfig para_cfg{cfg.alpha_paragraph};
  const valign::SentAlignConfig sent_cfg{cfg.alpha_sentence, cfg.beta};

  valign::PipelineDebug debug;
  valign::PipelineResult result = valign::align_documents(
      src, tgt, para_cfg, sent_cfg, cfg.dump_matrices ? &debug : nullptr);

  if (cfg.dump_matrices) {
    std::cerr << "# paragraph_matrix " << debug.paragraph_matrix.rows() << "x"
              << debug.paragraph_matrix.cols() << "\n"
              << valign::matrix_to_tsv(debug.paragraph_matrix);
    for (const auto& [group, matrix] : debug.group_matrices) {
      std::cerr << "# sentence_matrix src " << group.src.lo << "-"
                << group.src.hi << " tgt " << group.tgt.lo << "-"
                << group.tgt.hi << " " << matrix.rows() << "x" << matrix.cols()
                << "\n"
                << valign::matrix_to_tsv(matrix);
    }
  }

  emit(cfg, cfg.format == "json" ? valign::result_to_json(result)
                                 : valign::result_to_tsv(result));
  return 0;
}

int run_align_paragraphs(const RunConfig& cfg) {
  const valign::Document src = valign::parse_document_file(cfg.src_path);
  const valign::Document tgt = valign::parse_document_file(cfg.tgt_path);

  const valign::TfIdfModel model = valign::fit_document_pair(src, tgt);
  const valign::SimilarityMatrix matrix =
      valign::paragraph_matrix(model, src, tgt);
  if (cfg.dump_matrices) {
    std::cerr << "# paragraph_matrix " << matrix.rows() << "x" << matrix.cols()
              << "\n"
              << valign::matrix_to_tsv(matrix);
  }

  const valign::AlignmentPath path =
      valign::align_paragraphs(matrix, {cfg.alpha_paragraph});
  const auto groups = valign::group_alignments_bounded(path);
  emit(cfg, cfg.format == "json"
                ? valign::groups_to_json(groups, cfg.alpha_paragraph)
                : valign::groups_to_tsv(groups));
  return 0;
}

int run_baseline(const RunConfig& cfg) {
  const valign::Document src = valign::parse_document_file(cfg.src_path);
  const valign::Document tgt = valign::parse_document_file(cfg.tgt_path);
  const auto pairs = valign::jaccard_align(src, tgt, cfg.jaccard_threshold);
  emit(cfg, cfg.format == "json"
                ? valign::baseline_to_json(pairs, cfg.jaccard_threshold)
                : valign::baseline_to_tsv(pairs));
  return 0;
}

int run_eval(const RunConfig& cfg) {
  const auto predicted = valign::read_pairs_file(cfg.pred_path);
  const auto gold = valign::read_gold_file(cfg.gold_path);
  const valign::EvalReport report = valign::evaluate(predicted, gold);
  emit(cfg, cfg.format == "json" ? valign::report_to_json(report)
                                 : valign::report_to_text(report));
  return 0;
}

int run_synth(const RunConfig& cfg) {
  valign::SynthSpec spec;
  if (!cfg.spec_path.empty()) {
    spec = valign::synth_spec_from_json(read_file(cfg.spec_path));
  }
  const valign::SynthResult result = valign::synthesize_pair(cfg.seed, spec);
  const std::string src_text = valign::serialize_document(result.source);
  const std::string tgt_text = valign::serialize_document(result.target);
  const std::string gold_text = valign::gold_to_tsv(result.gold);
  write_file(cfg.out_src, src_text);
  write_file(cfg.out_tgt, tgt_text);
  write_file(cfg.out_gold, gold_text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vicinity-driven paragraph and sentence aligner for "
               "comparable document pairs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", cfg.output_path,
                    "Output path (default: stdout)");
  };
  auto add_corpus_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--src", cfg.src_path, "Source corpus file")->required();
    cmd->add_option("--tgt", cfg.tgt_path, "Target corpus file")->required();
  };
  auto add_para_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha-paragraph", cfg.alpha_paragraph,
                    "Paragraph similarity threshold")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  };

  CLI::App* align = app.add_subcommand(
      "align", "Align a document pair at paragraph and sentence level");
  add_corpus_inputs(align);
  add_para_alpha(align);
  align->add_option("--alpha-sentence", cfg.alpha_sentence,
                    "Sentence similarity threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  align->add_option("--beta", cfg.beta,
                    "Slack tolerated by 1-N/N-1 expansion")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  align->add_flag("--dump-matrices", cfg.dump_matrices,
                  "Dump similarity matrices as TSV to stderr");
  add_format(align);

  CLI::App* align_paragraphs = app.add_subcommand(
      "align-paragraphs", "Paragraph stage only: emit paragraph groups");
  add_corpus_inputs(align_paragraphs);
  add_para_alpha(align_paragraphs);
  align_paragraphs->add_flag("--dump-matrices", cfg.dump_matrices,
                             "Dump similarity matrices as TSV to stderr");
  add_format(align_paragraphs);

  CLI::App* baseline = app.add_subcommand(
      "baseline-jaccard",
      "Threshold baseline: all sentence pairs above a Jaccard threshold");
  add_corpus_inputs(baseline);
  baseline->add_option("--threshold", cfg.jaccard_threshold,
                       "Strict Jaccard threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_format(baseline);

  CLI::App* eval = app.add_subcommand(
      "eval", "Precision/recall/F1 of predicted pairs against gold pairs");
  eval->add_option("--pred", cfg.pred_path, "Predicted pairs TSV")->required();
  eval->add_option("--gold", cfg.gold_path, "Gold pairs TSV")->required();
  add_format(eval);

  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a synthetic comparable document pair with gold");
  synth->add_option("--seed", cfg.seed, "Generator seed")
      ->capture_default_str();
  synth->add_option("--spec", cfg.spec_path,
                    "Synthesis parameters (JSON file; default: identity pair)");
  synth->add_option("--out-src", cfg.out_src, "Source corpus output path")
      ->required();
  synth->add_option("--out-tgt", cfg.out_tgt, "Target corpus output path")
      ->required();
  synth->add_option("--out-gold", cfg.out_gold, "Gold TSV output path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(align)) return run_align(cfg);
    if (app.got_subcommand(align_paragraphs)) return run_align_paragraphs(cfg);
    if (app.got_subcommand(baseline)) return run_baseline(cfg);
    if (app.got_subcommand(eval)) return run_eval(cfg);
    if (app.got_subcommand(synth)) return run_synth(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

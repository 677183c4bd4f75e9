#include "doctest.h"

#include <filesystem>

#include "json.hpp"
#include "test_util.hpp"
#include "valign/formats.hpp"
#include "valign/synth.hpp"

using namespace valign;
using valign::testing::run_cli;
using valign::testing::scratch_dir;
using valign::testing::write_text_file;

namespace {

struct CorpusFiles {
  std::string src;
  std::string tgt;
  std::string gold;
};

CorpusFiles write_pair(const std::filesystem::path& dir,
                       const SynthResult& r) {
  CorpusFiles files{(dir / "src.txt").string(), (dir / "tgt.txt").string(),
                    (dir / "gold.tsv").string()};
  write_text_file(files.src, serialize_document(r.source));
  write_text_file(files.tgt, serialize_document(r.target));
  write_text_file(files.gold, gold_to_tsv(r.gold));
  return files;
}

}  // namespace

TEST_CASE("align on identical files emits identity pairs and exits 0") {
  const auto dir = scratch_dir("cli-align");
  const std::string corpus = "alpha beta\n\ngamma delta\nepsilon zeta\n";
  write_text_file((dir / "a.txt").string(), corpus);
  write_text_file((dir / "b.txt").string(), corpus);

  const auto result = run_cli("align --src " + (dir / "a.txt").string() +
                              " --tgt " + (dir / "b.txt").string() +
                              " --format tsv");
  REQUIRE(result.exit_code == 0);
  CHECK(result.out ==
        "# src_par\tsrc_sent\ttgt_par\ttgt_sent\tscore\n"
        "1\t1\t1\t1\t1.000000\n"
        "2\t1\t2\t1\t1.000000\n"
        "2\t2\t2\t2\t1.000000\n");
}

TEST_CASE("out-of-range options are usage errors without output files") {
  const auto dir = scratch_dir("cli-usage");
  const std::string out = (dir / "never.tsv").string();
  std::filesystem::remove(out);
  const auto result =
      run_cli("align --alpha-sentence 1.5 --src missing.txt --tgt missing.txt "
              "--output " + out);
  CHECK(result.exit_code == 1);
  CHECK(!result.err.empty());
  CHECK(!std::filesystem::exists(out));
}

TEST_CASE("missing input files are data errors (exit 2)") {
  const auto result =
      run_cli("align --src /nonexistent/a.txt --tgt /nonexistent/b.txt");
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("error:") != std::string::npos);
}

TEST_CASE("unknown subcommands are usage errors") {
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("eval reports P/R/F1 on the documented toy case") {
  const auto dir = scratch_dir("cli-eval");
  write_text_file((dir / "pred.tsv").string(), "1\t1\t1\t1\n1\t2\t1\t2\n");
  write_text_file((dir / "gold.tsv").string(),
                  "# comment\n1\t1\t1\t1\n2\t1\t2\t1\n");
  const auto result = run_cli("eval --pred " + (dir / "pred.tsv").string() +
                              " --gold " + (dir / "gold.tsv").string());
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("precision\t0.500000") != std::string::npos);
  CHECK(result.out.find("recall\t0.500000") != std::string::npos);
  CHECK(result.out.find("f1\t0.500000") != std::string::npos);
}

TEST_CASE("synth writes a consistent triple that align and eval consume") {
  const auto dir = scratch_dir("cli-synth");
  const std::string spec_path = (dir / "spec.json").string();
  SynthSpec spec;
  spec.p_split = 0.1;
  spec.p_quote = 0.2;
  spec.replacement_rate = 0.1;
  write_text_file(spec_path, synth_spec_to_json(spec));

  const std::string src = (dir / "src.txt").string();
  const std::string tgt = (dir / "tgt.txt").string();
  const std::string gold = (dir / "gold.tsv").string();
  const auto synth_result =
      run_cli("synth --seed 9 --spec " + spec_path + " --out-src " + src +
              " --out-tgt " + tgt + " --out-gold " + gold);
  REQUIRE(synth_result.exit_code == 0);

  // The written pair matches the in-process generator.
  const SynthResult expected = synthesize_pair(9, spec);
  CHECK(valign::testing::read_file_or_empty(src) ==
        serialize_document(expected.source));
  CHECK(valign::testing::read_file_or_empty(gold) == gold_to_tsv(expected.gold));

  const std::string pred = (dir / "pred.tsv").string();
  REQUIRE(run_cli("align --src " + src + " --tgt " + tgt + " --output " + pred)
              .exit_code == 0);
  const auto eval_result =
      run_cli("eval --pred " + pred + " --gold " + gold + " --format json");
  REQUIRE(eval_result.exit_code == 0);
  const auto j = nlohmann::json::parse(eval_result.out);
  CHECK(j.at("f1").get<double>() > 0.0);
}

TEST_CASE("TSV and JSON outputs of align carry identical pairs") {
  const auto dir = scratch_dir("cli-formats");
  const SynthResult r = synthesize_pair(11, SynthSpec{});
  const auto files = write_pair(dir, r);

  const auto tsv = run_cli("align --src " + files.src + " --tgt " + files.tgt);
  const auto json =
      run_cli("align --src " + files.src + " --tgt " + files.tgt +
              " --format json");
  REQUIRE(tsv.exit_code == 0);
  REQUIRE(json.exit_code == 0);

  std::istringstream tsv_in(tsv.out);
  const auto tsv_pairs = read_pairs_tsv(tsv_in);
  std::set<GlobalPair> json_pairs;
  const auto j = nlohmann::json::parse(json.out);
  for (const auto& group : j.at("paragraph_groups")) {
    for (const auto& p : group.at("sentence_pairs")) {
      json_pairs.insert(GlobalPair{{p.at("src_par"), p.at("src_sent")},
                         {p.at("tgt_par"), p.at("tgt_sent")}});
    }
  }
  CHECK(tsv_pairs == json_pairs);
}

TEST_CASE("align-paragraphs emits the group table") {
  const auto dir = scratch_dir("cli-groups");
  const SynthResult r = synthesize_pair(5, SynthSpec{});
  const auto files = write_pair(dir, r);
  const auto result = run_cli("align-paragraphs --src " + files.src +
                              " --tgt " + files.tgt);
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.rfind("# src_start\tsrc_end\ttgt_start\ttgt_end\n", 0) == 0);
  // Identity pair: every paragraph is a 1-1 group.
  std::size_t lines = 0;
  for (char c : result.out) lines += c == '\n';
  CHECK(lines == r.source.size() + 1);
}

TEST_CASE("baseline-jaccard respects its strict threshold") {
  const auto dir = scratch_dir("cli-baseline");
  const std::string corpus = "a b\n\nc d\n";
  write_text_file((dir / "a.txt").string(), corpus);
  write_text_file((dir / "b.txt").string(), corpus);
  const auto strict =
      run_cli("baseline-jaccard --src " + (dir / "a.txt").string() +
              " --tgt " + (dir / "b.txt").string() + " --threshold 1.0");
  REQUIRE(strict.exit_code == 0);
  CHECK(strict.out == "# src_par\tsrc_sent\ttgt_par\ttgt_sent\tscore\n");

  const auto loose =
      run_cli("baseline-jaccard --src " + (dir / "a.txt").string() +
              " --tgt " + (dir / "b.txt").string() + " --threshold 0.9");
  REQUIRE(loose.exit_code == 0);
  CHECK(loose.out.find("1\t1\t1\t1\t1.000000") != std::string::npos);
  CHECK(loose.out.find("2\t1\t2\t1\t1.000000") != std::string::npos);
}

TEST_CASE("--dump-matrices writes the similarity tables to stderr") {
  const auto dir = scratch_dir("cli-dump");
  const std::string corpus = "a b\n\nc d\n";
  write_text_file((dir / "a.txt").string(), corpus);
  const auto result = run_cli("align --src " + (dir / "a.txt").string() +
                              " --tgt " + (dir / "a.txt").string() +
                              " --dump-matrices");
  REQUIRE(result.exit_code == 0);
  CHECK(result.err.find("# paragraph_matrix 2x2") != std::string::npos);
  CHECK(result.err.find("# sentence_matrix") != std::string::npos);
}

TEST_CASE("align output is byte-stable across repeated runs") {
  const auto dir = scratch_dir("cli-determinism");
  SynthSpec spec;
  spec.p_split = 0.15;
  spec.p_merge = 0.15;
  spec.replacement_rate = 0.1;
  const SynthResult r = synthesize_pair(1234, spec);
  const auto files = write_pair(dir, r);

  const std::string cmd = "align --src " + files.src + " --tgt " + files.tgt;
  const auto first = run_cli(cmd);
  REQUIRE(first.exit_code == 0);
  for (int round = 0; round < 2; ++round) {
    const auto again = run_cli(cmd);
    REQUIRE(again.exit_code == 0);
    CHECK(again.out == first.out);
  }
}

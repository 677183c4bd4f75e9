#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "valign/alignment.hpp"
#include "valign/rng.hpp"
#include "valign/similarity.hpp"
#include "valign/synth.hpp"
#include "valign/text_model.hpp"

namespace valign::testing {

inline SimilarityMatrix random_matrix(Rng& rng, std::size_t rows,
                                      std::size_t cols) {
  SimilarityMatrix m(rows, cols);
  for (std::size_t x = 1; x <= rows; ++x) {
    for (std::size_t y = 1; y <= cols; ++y) {
      m.set(x, y, rng.next_unit());
    }
  }
  return m;
}

inline Paragraph random_paragraph(Rng& rng, std::size_t index,
                                  std::size_t min_sentences,
                                  std::size_t max_sentences,
                                  std::size_t min_tokens,
                                  std::size_t max_tokens,
                                  const std::vector<std::string>& pool) {
  Paragraph p;
  p.index = index;
  const std::size_t n = rng.next_between(min_sentences, max_sentences);
  for (std::size_t s = 0; s < n; ++s) {
    std::string text;
    const std::size_t len = rng.next_between(min_tokens, max_tokens);
    for (std::size_t t = 0; t < len; ++t) {
      if (t > 0) text.push_back(' ');
      text += pool[rng.next_index(pool.size())];
    }
    p.sentences.push_back(make_sentence(s + 1, text));
  }
  return p;
}

inline std::set<IndexPair> as_set(const std::vector<IndexPair>& pairs) {
  return {pairs.begin(), pairs.end()};
}

inline std::set<IndexPair> as_set(const AlignmentPath& path) {
  return {path.pairs.begin(), path.pairs.end()};
}

inline std::string fixture_dir() {
  if (const char* env = std::getenv("VALIGN_FIXTURE_DIR")) return env;
#ifdef VALIGN_FIXTURE_DIR_DEFAULT
  return VALIGN_FIXTURE_DIR_DEFAULT;
#else
  return "tests/fixtures";
#endif
}

inline std::string read_file_or_empty(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string cli_path() {
  if (const char* env = std::getenv("VALIGN_BIN")) return env;
#ifdef VALIGN_BIN_DEFAULT
  return VALIGN_BIN_DEFAULT;
#else
  return "";
#endif
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI via the shell with stdout/stderr captured in a scratch
// directory.
inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path() / "valign-tests";
  std::filesystem::create_directories(dir);
  const std::string tag = std::to_string(++counter);
  const std::string out_path = (dir / ("out" + tag)).string();
  const std::string err_path = (dir / ("err" + tag)).string();

  const std::string cmd =
      cli_path() + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());

  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file_or_empty(out_path);
  result.err = read_file_or_empty(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return result;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "valign-tests" / name;
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace valign::testing

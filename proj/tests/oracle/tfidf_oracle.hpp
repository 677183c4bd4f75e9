#pragma once

// Test-only TF-IDF oracle, independent of the library implementation:
// document frequencies and vectors are plain string-keyed maps, and
// concatenated-range similarities are recomputed from scratch by joining
// token lists. Used to pin expected values for the cosine and
// concatenated-similarity operations.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace valign::testing {

using Tokens = std::vector<std::string>;

struct OracleTfIdf {
  std::map<std::string, std::size_t> document_frequency;
  std::size_t n_units = 0;
};

OracleTfIdf oracle_fit(const std::vector<Tokens>& units);

double oracle_idf(const OracleTfIdf& model, const std::string& token);

std::map<std::string, double> oracle_vector(const OracleTfIdf& model,
                                            const Tokens& tokens);

double oracle_cosine(const OracleTfIdf& model, const Tokens& a,
                     const Tokens& b);

// Joins the ranged side's token lists (inclusive 0-based indices into
// `units`) and recomputes the cosine from scratch.
double oracle_concat_cosine(const OracleTfIdf& model, const Tokens& single,
                            const std::vector<Tokens>& units, std::size_t lo,
                            std::size_t hi);

}  // namespace valign::testing

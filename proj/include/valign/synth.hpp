#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "valign/eval.hpp"
#include "valign/rng.hpp"
#include "valign/text_model.hpp"

namespace valign {

struct SizeRange {
  std::size_t min = 1;
  std::size_t max = 1;
};

// Parameters for the synthetic comparable-corpus generator. Defaults
// describe an identity pair: no edits, no perturbation.
struct SynthSpec {
  SizeRange title_tokens{3, 6};
  SizeRange body_paragraphs{4, 8};
  SizeRange sentences_per_paragraph{2, 5};
  SizeRange tokens_per_sentence{6, 12};
  std::size_t vocabulary = 400;
  double zipf_exponent = 1.1;

  double p_drop_paragraph = 0.0;
  double p_drop_sentence = 0.0;
  double p_split = 0.0;
  double p_merge = 0.0;
  double p_quote = 0.0;        // chance of one shared quote per body paragraph
  double replacement_rate = 0.0;
};

// Throws InvalidSpecError when sizes or rates are out of range.
void validate(const SynthSpec& spec);

// Per-sentence derivation plan. Replacements are (0-based token position,
// replacement token) over the source token sequence feeding the derived
// target sentence(s).
struct SentencePlan {
  enum class Op { Keep, Drop, Split, MergeWithNext, MergedIntoPrevious };

  Op op = Op::Keep;
  std::size_t split_after = 0;  // Split: target one = tokens [0, split_after)
  std::vector<std::pair<std::size_t, std::string>> replacements;
};

struct ParagraphPlan {
  bool drop = false;
  std::vector<SentencePlan> sentences;
};

// The recorded edit script a target document is derived from. Applying the
// same script to the same source is deterministic.
struct EditScript {
  std::vector<ParagraphPlan> paragraphs;
};

// Marks sentences that must survive edits verbatim (the title and injected
// shared quotes). mask[p][s] is 0-based.
using ProtectedMask = std::vector<std::vector<bool>>;

struct SynthResult {
  Document source;
  Document target;
  GoldAlignment gold;
  EditScript script;
};

// Generates the source document from a closed Zipf-weighted token pool;
// quote sentences (if any) are injected here and flagged in the mask.
Document synth_source(Rng& rng, const SynthSpec& spec, ProtectedMask* mask);

EditScript sample_edit_script(Rng& rng, const SynthSpec& spec,
                              const Document& source,
                              const ProtectedMask& mask);

// Derives the target document and the gold alignment from a source and a
// script. Gold pairs are monotone by construction: the script never
// reorders.
std::pair<Document, GoldAlignment> apply_edit_script(const Document& source,
                                                     const EditScript& script);

// Deterministic by (seed, spec): generate source, sample script, apply.
SynthResult synthesize_pair(std::uint64_t seed, const SynthSpec& spec);

// Token pool shared by generation and perturbation: syllable words indexed
// deterministically, sampled with Zipf-like weights.
std::vector<std::string> build_token_pool(std::size_t size);

// Parses a SynthSpec from a JSON object; unknown keys are rejected.
SynthSpec synth_spec_from_json(const std::string& json_text);
std::string synth_spec_to_json(const SynthSpec& spec);

}  // namespace valign

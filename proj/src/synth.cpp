#include "valign/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "valign/errors.hpp"

namespace valign {

namespace {

const char* const kConsonants = "bdfgklmnprstvz";
const char* const kVowels = "aeiou";

std::string syllable(std::size_t index) {
  std::string s;
  s.push_back(kConsonants[index / 5]);
  s.push_back(kVowels[index % 5]);
  return s;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string text;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) text.push_back(' ');
    text.append(tokens[i]);
  }
  return text;
}

// Zipf-like sampling over the pool: weight of word i is 1/(i+1)^exponent.
class ZipfPool {
 public:
  ZipfPool(std::size_t size, double exponent)
      : words_(build_token_pool(size)), cdf_(size) {
    double total = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      total += 1.0 / std::pow(static_cast<double>(i + 1), exponent);
      cdf_[i] = total;
    }
  }

  const std::string& sample(Rng& rng) const {
    const double r = rng.next_unit() * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), r);
    if (it == cdf_.end()) --it;
    return words_[static_cast<std::size_t>(it - cdf_.begin())];
  }

 private:
  std::vector<std::string> words_;
  std::vector<double> cdf_;
};

class SentenceFactory {
 public:
  SentenceFactory(const ZipfPool& pool) : pool_(&pool) {}

  // Samples a token sequence unique within the document pair, so identity
  // pairs always have strictly dominant diagonals.
  std::vector<std::string> fresh_tokens(Rng& rng, const SizeRange& length) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<std::string> tokens;
      const std::size_t len = rng.next_between(length.min, length.max);
      tokens.reserve(len);
      for (std::size_t i = 0; i < len; ++i) tokens.push_back(pool_->sample(rng));
      if (used_.insert(tokens).second) return tokens;
    }
    // A pool this small cannot supply unique sentences of the requested
    // length; disambiguate with a counter token.
    std::vector<std::string> tokens{"uniq" + std::to_string(counter_++)};
    used_.insert(tokens);
    return tokens;
  }

 private:
  const ZipfPool* pool_;
  std::set<std::vector<std::string>> used_;
  std::size_t counter_ = 0;
};

void check_range(const SizeRange& r, const char* name) {
  if (r.min < 1 || r.min > r.max) {
    throw InvalidSpecError(std::string("invalid size range for ") + name);
  }
}

void check_rate(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidSpecError(std::string("rate out of [0,1]: ") + name);
  }
}

}  // namespace

std::vector<std::string> build_token_pool(std::size_t size) {
  // Base-70 syllable encoding of (index + 70): always at least two
  // syllables, bijective, lowercase ASCII.
  std::vector<std::string> pool;
  pool.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::string word;
    std::size_t v = i + 70;
    while (v > 0) {
      word = syllable(v % 70) + word;
      v /= 70;
    }
    pool.push_back(word);
  }
  return pool;
}

void validate(const SynthSpec& spec) {
  check_range(spec.title_tokens, "title_tokens");
  check_range(spec.body_paragraphs, "body_paragraphs");
  check_range(spec.sentences_per_paragraph, "sentences_per_paragraph");
  check_range(spec.tokens_per_sentence, "tokens_per_sentence");
  if (spec.vocabulary < 1) throw InvalidSpecError("vocabulary must be >= 1");
  if (!(spec.zipf_exponent >= 0.0)) {
    throw InvalidSpecError("zipf_exponent must be >= 0");
  }
  check_rate(spec.p_drop_paragraph, "p_drop_paragraph");
  check_rate(spec.p_drop_sentence, "p_drop_sentence");
  check_rate(spec.p_split, "p_split");
  check_rate(spec.p_merge, "p_merge");
  check_rate(spec.p_quote, "p_quote");
  check_rate(spec.replacement_rate, "replacement_rate");
}

Document synth_source(Rng& rng, const SynthSpec& spec, ProtectedMask* mask) {
  const ZipfPool pool(spec.vocabulary, spec.zipf_exponent);
  SentenceFactory factory(pool);

  Document doc;
  if (mask) mask->clear();

  auto push_paragraph = [&](std::vector<std::vector<std::string>> sentences,
                            std::vector<bool> protected_flags) {
    Paragraph par;
    par.index = doc.paragraphs.size() + 1;
    for (auto& tokens : sentences) {
      par.sentences.push_back(
          make_sentence(par.sentences.size() + 1, join_tokens(tokens)));
    }
    doc.paragraphs.push_back(std::move(par));
    if (mask) mask->push_back(std::move(protected_flags));
  };

  // Paragraph 1 is the title: one sentence, always protected.
  push_paragraph({factory.fresh_tokens(rng, spec.title_tokens)}, {true});

  const std::size_t n_paragraphs =
      rng.next_between(spec.body_paragraphs.min, spec.body_paragraphs.max);
  for (std::size_t p = 0; p < n_paragraphs; ++p) {
    const std::size_t n_sentences = rng.next_between(
        spec.sentences_per_paragraph.min, spec.sentences_per_paragraph.max);
    std::vector<std::vector<std::string>> sentences;
    std::vector<bool> protected_flags;
    for (std::size_t s = 0; s < n_sentences; ++s) {
      sentences.push_back(factory.fresh_tokens(rng, spec.tokens_per_sentence));
      protected_flags.push_back(false);
    }
    if (rng.chance(spec.p_quote)) {
      // Shared quote: survives all edits verbatim in both documents.
      auto quote = factory.fresh_tokens(rng, spec.tokens_per_sentence);
      const std::size_t pos = rng.next_between(0, sentences.size());
      sentences.insert(sentences.begin() + pos, std::move(quote));
      protected_flags.insert(protected_flags.begin() + pos, true);
    }
    push_paragraph(std::move(sentences), std::move(protected_flags));
  }
  return doc;
}

EditScript sample_edit_script(Rng& rng, const SynthSpec& spec,
                              const Document& source,
                              const ProtectedMask& mask) {
  const ZipfPool pool(spec.vocabulary, spec.zipf_exponent);
  EditScript script;
  script.paragraphs.resize(source.size());

  auto sample_replacements = [&](std::size_t token_count,
                                 SentencePlan& plan) {
    for (std::size_t pos = 0; pos < token_count; ++pos) {
      if (rng.chance(spec.replacement_rate)) {
        plan.replacements.emplace_back(pos, pool.sample(rng));
      }
    }
  };

  for (std::size_t p = 0; p < source.size(); ++p) {
    ParagraphPlan& par_plan = script.paragraphs[p];
    const Paragraph& par = source.paragraphs[p];
    par_plan.sentences.resize(par.size());

    if (p > 0 && rng.chance(spec.p_drop_paragraph)) {
      par_plan.drop = true;
      continue;
    }

    std::size_t emitted = 0;
    for (std::size_t s = 0; s < par.size(); ++s) {
      SentencePlan& plan = par_plan.sentences[s];
      if (plan.op == SentencePlan::Op::MergedIntoPrevious) continue;

      const bool is_protected = p < mask.size() && s < mask[p].size() &&
                                mask[p][s];
      if (is_protected) {
        ++emitted;
        continue;
      }

      const std::size_t len = par.sentences[s].tokens.size();
      const bool next_mergeable =
          s + 1 < par.size() &&
          !(p < mask.size() && s + 1 < mask[p].size() && mask[p][s + 1]);

      if (rng.chance(spec.p_drop_sentence)) {
        plan.op = SentencePlan::Op::Drop;
        continue;
      }
      if (len >= 2 && rng.chance(spec.p_split)) {
        plan.op = SentencePlan::Op::Split;
        plan.split_after = rng.next_between(1, len - 1);
        sample_replacements(len, plan);
        emitted += 2;
        continue;
      }
      if (next_mergeable && rng.chance(spec.p_merge)) {
        plan.op = SentencePlan::Op::MergeWithNext;
        par_plan.sentences[s + 1].op = SentencePlan::Op::MergedIntoPrevious;
        sample_replacements(len + par.sentences[s + 1].tokens.size(), plan);
        ++emitted;
        continue;
      }
      sample_replacements(len, plan);
      ++emitted;
    }

    // A paragraph must keep at least one sentence; undo the first drop.
    if (emitted == 0) {
      for (SentencePlan& plan : par_plan.sentences) {
        if (plan.op == SentencePlan::Op::Drop) {
          plan = SentencePlan{};
          break;
        }
      }
    }
  }
  return script;
}

std::pair<Document, GoldAlignment> apply_edit_script(const Document& source,
                                                     const EditScript& script) {
  if (script.paragraphs.size() != source.size()) {
    throw InvalidSpecError("edit script paragraph count mismatch");
  }

  Document target;
  target.id = source.id;
  GoldAlignment gold;

  auto replaced_tokens = [](std::vector<std::string> tokens,
                            const SentencePlan& plan) {
    for (const auto& [pos, token] : plan.replacements) {
      if (pos >= tokens.size()) {
        throw InvalidSpecError("replacement position out of bounds");
      }
      tokens[pos] = token;
    }
    return tokens;
  };

  for (std::size_t p = 0; p < source.size(); ++p) {
    const ParagraphPlan& par_plan = script.paragraphs[p];
    const Paragraph& par = source.paragraphs[p];
    if (par_plan.sentences.size() != par.size()) {
      throw InvalidSpecError("edit script sentence count mismatch");
    }
    if (par_plan.drop) continue;

    Paragraph out;
    const std::size_t tgt_par = target.paragraphs.size() + 1;

    auto emit = [&](Sentence sentence) {
      sentence.index = out.sentences.size() + 1;
      out.sentences.push_back(std::move(sentence));
      return out.sentences.size();
    };
    auto record_pair = [&](std::size_t src_sent, std::size_t tgt_sent) {
      gold.pairs.insert(GlobalPair{{p + 1, src_sent}, {tgt_par, tgt_sent}});
    };

    for (std::size_t s = 0; s < par.size(); ++s) {
      const SentencePlan& plan = par_plan.sentences[s];
      const Sentence& src = par.sentences[s];
      switch (plan.op) {
        case SentencePlan::Op::Drop:
        case SentencePlan::Op::MergedIntoPrevious:
          break;
        case SentencePlan::Op::Keep: {
          if (plan.replacements.empty()) {
            record_pair(s + 1, emit(src));
          } else {
            auto tokens = replaced_tokens(src.tokens, plan);
            record_pair(s + 1, emit(make_sentence(0, join_tokens(tokens))));
          }
          break;
        }
        case SentencePlan::Op::Split: {
          auto tokens = replaced_tokens(src.tokens, plan);
          if (plan.split_after < 1 || plan.split_after >= tokens.size()) {
            throw InvalidSpecError("split point out of bounds");
          }
          std::vector<std::string> head(tokens.begin(),
                                        tokens.begin() + plan.split_after);
          std::vector<std::string> tail(tokens.begin() + plan.split_after,
                                        tokens.end());
          record_pair(s + 1, emit(make_sentence(0, join_tokens(head))));
          record_pair(s + 1, emit(make_sentence(0, join_tokens(tail))));
          break;
        }
        case SentencePlan::Op::MergeWithNext: {
          if (s + 1 >= par.size() ||
              par_plan.sentences[s + 1].op !=
                  SentencePlan::Op::MergedIntoPrevious) {
            throw InvalidSpecError("merge plan without a merged successor");
          }
          std::vector<std::string> tokens = src.tokens;
          const auto& next = par.sentences[s + 1].tokens;
          tokens.insert(tokens.end(), next.begin(), next.end());
          tokens = replaced_tokens(std::move(tokens), plan);
          const std::size_t tgt_sent = emit(make_sentence(0, join_tokens(tokens)));
          record_pair(s + 1, tgt_sent);
          record_pair(s + 2, tgt_sent);
          break;
        }
      }
    }

    if (out.sentences.empty()) {
      throw InvalidSpecError("edit script drops every sentence of a paragraph");
    }
    out.index = tgt_par;
    target.paragraphs.push_back(std::move(out));
  }

  if (target.paragraphs.empty()) {
    throw InvalidSpecError("edit script drops every paragraph");
  }
  return {std::move(target), std::move(gold)};
}

SynthResult synthesize_pair(std::uint64_t seed, const SynthSpec& spec) {
  validate(spec);
  Rng rng(seed);
  ProtectedMask mask;

  SynthResult result;
  result.source = synth_source(rng, spec, &mask);
  result.source.id = "synth-" + std::to_string(seed) + "-src";
  result.script = sample_edit_script(rng, spec, result.source, mask);
  auto [target, gold] = apply_edit_script(result.source, result.script);
  result.target = std::move(target);
  result.target.id = "synth-" + std::to_string(seed) + "-tgt";
  result.gold = std::move(gold);
  return result;
}

namespace {

using nlohmann::json;

SizeRange range_from_json(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() ||
      !j[1].is_number_unsigned()) {
    throw InvalidSpecError(std::string(name) + " must be [min, max]");
  }
  return SizeRange{j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

}  // namespace

SynthSpec synth_spec_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidSpecError(std::string("synthesis spec is not valid JSON: ") +
                           e.what());
  }
  if (!j.is_object()) throw InvalidSpecError("synthesis spec must be an object");

  SynthSpec spec;
  for (const auto& [key, value] : j.items()) {
    if (key == "title_tokens") {
      spec.title_tokens = range_from_json(value, "title_tokens");
    } else if (key == "body_paragraphs") {
      spec.body_paragraphs = range_from_json(value, "body_paragraphs");
    } else if (key == "sentences_per_paragraph") {
      spec.sentences_per_paragraph =
          range_from_json(value, "sentences_per_paragraph");
    } else if (key == "tokens_per_sentence") {
      spec.tokens_per_sentence = range_from_json(value, "tokens_per_sentence");
    } else if (key == "vocabulary") {
      spec.vocabulary = value.get<std::size_t>();
    } else if (key == "zipf_exponent") {
      spec.zipf_exponent = value.get<double>();
    } else if (key == "p_drop_paragraph") {
      spec.p_drop_paragraph = value.get<double>();
    } else if (key == "p_drop_sentence") {
      spec.p_drop_sentence = value.get<double>();
    } else if (key == "p_split") {
      spec.p_split = value.get<double>();
    } else if (key == "p_merge") {
      spec.p_merge = value.get<double>();
    } else if (key == "p_quote") {
      spec.p_quote = value.get<double>();
    } else if (key == "replacement_rate") {
      spec.replacement_rate = value.get<double>();
    } else {
      throw InvalidSpecError("unknown synthesis spec key: " + key);
    }
  }
  validate(spec);
  return spec;
}

std::string synth_spec_to_json(const SynthSpec& spec) {
  nlohmann::ordered_json j;
  j["title_tokens"] = {spec.title_tokens.min, spec.title_tokens.max};
  j["body_paragraphs"] = {spec.body_paragraphs.min, spec.body_paragraphs.max};
  j["sentences_per_paragraph"] = {spec.sentences_per_paragraph.min,
                                  spec.sentences_per_paragraph.max};
  j["tokens_per_sentence"] = {spec.tokens_per_sentence.min,
                              spec.tokens_per_sentence.max};
  j["vocabulary"] = spec.vocabulary;
  j["zipf_exponent"] = spec.zipf_exponent;
  j["p_drop_paragraph"] = spec.p_drop_paragraph;
  j["p_drop_sentence"] = spec.p_drop_sentence;
  j["p_split"] = spec.p_split;
  j["p_merge"] = spec.p_merge;
  j["p_quote"] = spec.p_quote;
  j["replacement_rate"] = spec.replacement_rate;
  return j.dump(2) + "\n";
}

}  // namespace valign

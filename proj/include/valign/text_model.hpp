#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace valign {

// One sentence of a parsed document: the raw line text plus its normalized
// token list. `index` is the 1-based position within the owning paragraph.
// Tokens are always reproducible from `text` via tokenize().
struct Sentence {
  std::size_t index = 0;
  std::string text;
  std::vector<std::string> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Paragraph {
  std::size_t index = 0;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
  // 1-based access, bounds-checked.
  const Sentence& sentence(std::size_t i) const;

  bool operator==(const Paragraph&) const = default;
};

struct Document {
  std::string id;
  std::vector<Paragraph> paragraphs;

  std::size_t size() const { return paragraphs.size(); }
  // 1-based access, bounds-checked.
  const Paragraph& paragraph(std::size_t i) const;

  bool operator==(const Document&) const = default;
};

// Normalizes to NFC, lowercases, and splits on every maximal run of
// non-alphanumeric code points. Empty fragments are dropped; empty input
// yields an empty list. No stemming, no stopword removal.
std::vector<std::string> tokenize(const std::string& text);

// Parses the plain-text corpus format: one sentence per line, paragraphs
// separated by one or more blank lines. By convention the first paragraph
// is the article title. Throws EmptyDocumentError when no non-blank line
// exists.
Document parse_document(std::istream& in, const std::string& id);
Document parse_document(const std::string& raw, const std::string& id);
Document parse_document_file(const std::string& path);

// Inverse of parse_document: one line per sentence, one blank line between
// paragraphs, trailing newline. Re-parsing the output yields an equal
// Document.
std::string serialize_document(const Document& doc);

// Rebuilds a sentence from raw text (tokens derived via tokenize).
Sentence make_sentence(std::size_t index, std::string text);

}  // namespace valign

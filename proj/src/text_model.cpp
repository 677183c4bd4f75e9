#include "valign/text_model.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "valign/errors.hpp"

namespace valign {

namespace {

bool is_blank_line(const std::string& line) {
  for (unsigned char c : line) {
    if (!std::isspace(c)) return false;
  }
  return true;
}

}  // namespace

const Sentence& Paragraph::sentence(std::size_t i) const {
  if (i < 1 || i > sentences.size()) {
    throw OutOfBoundsError("sentence index out of bounds");
  }
  return sentences[i - 1];
}

const Paragraph& Document::paragraph(std::size_t i) const {
  if (i < 1 || i > paragraphs.size()) {
    throw OutOfBoundsError("paragraph index out of bounds");
  }
  return paragraphs[i - 1];
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  if (text.empty()) return tokens;

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(text);
  icu::UnicodeString normalized = nfc->normalize(input, status);
  if (U_FAILURE(status)) {
    // Normalization only fails on internal ICU errors; fall back to the
    // un-normalized string rather than dropping the text.
    normalized = input;
  }

  icu::UnicodeString current;
  auto flush = [&] {
    if (current.isEmpty()) return;
    std::string token;
    current.toUTF8String(token);
    tokens.push_back(std::move(token));
    current.remove();
  };

  for (int32_t i = 0; i < normalized.length();) {
    UChar32 cp = normalized.char32At(i);
    if (u_isalnum(cp)) {
      current.append(u_tolower(cp));
    } else {
      flush();
    }
    i += U16_LENGTH(cp);
  }
  flush();
  return tokens;
}

Sentence make_sentence(std::size_t index, std::string text) {
  Sentence s;
  s.index = index;
  s.tokens = tokenize(text);
  s.text = std::move(text);
  return s;
}

Document parse_document(std::istream& in, const std::string& id) {
  Document doc;
  doc.id = id;

  Paragraph current;
  auto flush_paragraph = [&] {
    if (current.sentences.empty()) return;
    current.index = doc.paragraphs.size() + 1;
    doc.paragraphs.push_back(std::move(current));
    current = Paragraph{};
  };

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank_line(line)) {
      flush_paragraph();
      continue;
    }
    current.sentences.push_back(
        make_sentence(current.sentences.size() + 1, line));
  }
  flush_paragraph();

  if (doc.paragraphs.empty()) {
    throw EmptyDocumentError("document '" + id + "' has no non-blank line");
  }
  return doc;
}

Document parse_document(const std::string& raw, const std::string& id) {
  std::istringstream in(raw);
  return parse_document(in, id);
}

Document parse_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open corpus file: " + path);
  }
  return parse_document(in, path);
}

std::string serialize_document(const Document& doc) {
  std::string out;
  for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
    if (p > 0) out.push_back('\n');
    for (const Sentence& s : doc.paragraphs[p].sentences) {
      out.append(s.text);
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace valign

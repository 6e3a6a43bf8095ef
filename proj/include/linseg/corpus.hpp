#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linseg {

/// Half-open index range.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  bool contains(std::size_t i) const noexcept { return i >= begin && i < end; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  std::string stem;
  std::size_t sentence = 0;
  std::size_t paragraph = 0;
  /// Byte offset into the LF-normalized source text.
  std::size_t offset = 0;
};

struct Sentence {
  std::size_t index = 0;
  std::size_t paragraph = 0;
  Span tokens;
};

struct Paragraph {
  std::size_t index = 0;
  Span sentences;
};

/// A tokenized article. Immutable once built; share freely across threads.
class Document {
 public:
  Document(std::string id, std::vector<Token> tokens, std::vector<Sentence> sentences,
           std::vector<Paragraph> paragraphs);

  const std::string& id() const noexcept { return id_; }
  std::span<const Token> tokens() const noexcept { return tokens_; }
  std::span<const Sentence> sentences() const noexcept { return sentences_; }
  std::span<const Paragraph> paragraphs() const noexcept { return paragraphs_; }

  std::size_t word_count() const noexcept { return tokens_.size(); }
  std::size_t paragraph_count() const noexcept { return paragraphs_.size(); }
  std::size_t sentence_count() const noexcept { return sentences_.size(); }

  /// True for the first token of its sentence.
  bool sentence_initial(std::size_t token) const noexcept;

 private:
  std::string id_;
  std::vector<Token> tokens_;
  std::vector<Sentence> sentences_;
  std::vector<Paragraph> paragraphs_;
};

/// Splits raw UTF-8 text into paragraphs (blank-line separated), sentences
/// and word tokens. CRLF and lone CR are normalized to LF first. Paragraphs
/// and sentences that contain no word are dropped.
///
/// Sentences end at `.`, `!` or `?` (optionally followed by closing quotes or
/// brackets) when whitespace and then an uppercase letter or an opening quote
/// follow, unless the period closes one of the abbreviations in
/// `sentence_abbreviations()`.
///
/// Throws EmptyInput when the text has no word characters.
Document ingest_document(std::string_view raw, std::string id);

std::span<const std::string_view> sentence_abbreviations();

/// Minimal inflectional stemmer: lowercases, removes a possessive clitic and
/// strips plural endings. Idempotent.
std::string stem(std::string_view surface);

}  // namespace linseg

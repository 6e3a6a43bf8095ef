#include "linseg/corpus.hpp"

#include <algorithm>
#include <array>

#include "linseg/errors.hpp"
#include "text_util.hpp"

namespace linseg {

using detail::decode_utf8;

namespace {

constexpr std::array<std::string_view, 6> kAbbreviations{"Mr.", "Mrs.", "Dr.", "U.S.", "Inc.", "Co."};

bool is_closer(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == U'’' ||
         cp == U'”' || cp == U'»';
}

bool is_opener(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == '(' || cp == '[' || cp == U'‘' ||
         cp == U'“' || cp == U'«';
}

bool is_quote(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == U'‘' || cp == U'“' || cp == U'«';
}

std::string normalize_newlines(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      out.push_back(raw[i]);
    }
  }
  return out;
}

// Paragraphs are maximal runs of non-blank lines.
std::vector<Span> paragraph_ranges(std::string_view text) {
  std::vector<Span> out;
  std::size_t line_begin = 0;
  std::size_t para_begin = std::string_view::npos;
  std::size_t para_end = 0;
  while (line_begin <= text.size()) {
    std::size_t line_end = text.find('\n', line_begin);
    if (line_end == std::string_view::npos) line_end = text.size();
    const auto line = text.substr(line_begin, line_end - line_begin);
    const bool blank = line.find_first_not_of(" \t\f\v") == std::string_view::npos;
    if (blank) {
      if (para_begin != std::string_view::npos) out.push_back({para_begin, para_end});
      para_begin = std::string_view::npos;
    } else {
      if (para_begin == std::string_view::npos) para_begin = line_begin;
      para_end = line_end;
    }
    line_begin = line_end + 1;
  }
  if (para_begin != std::string_view::npos) out.push_back({para_begin, para_end});
  return out;
}

bool closes_abbreviation(std::string_view text, std::size_t begin, std::size_t period) {
  std::size_t chunk = period;
  // Whitespace is ASCII or NBSP, so walking back byte-wise finds it.
  while (chunk > begin) {
    const auto b = static_cast<unsigned char>(text[chunk - 1]);
    if (b == ' ' || b == '\t' || b == '\n' || b == '\f' || b == '\v') break;
    if (b == 0xA0 && chunk >= 2 && static_cast<unsigned char>(text[chunk - 2]) == 0xC2) break;
    --chunk;
  }
  std::string_view word = text.substr(chunk, period + 1 - chunk);
  while (!word.empty()) {
    char32_t cp;
    const std::size_t n = decode_utf8(word, 0, cp);
    if (!is_opener(cp)) break;
    word.remove_prefix(n);
  }
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) != kAbbreviations.end();
}

// Offsets (exclusive) where sentences end inside [range.begin, range.end).
std::vector<std::size_t> sentence_ends(std::string_view text, Span range) {
  std::vector<std::size_t> ends;
  std::size_t i = range.begin;
  while (i < range.end) {
    char32_t cp;
    const std::size_t n = decode_utf8(text, i, cp);
    if (cp != '.' && cp != '!' && cp != '?') {
      i += n;
      continue;
    }
    std::size_t k = i + n;
    while (k < range.end) {
      char32_t c;
      const std::size_t m = decode_utf8(text, k, c);
      if (!is_closer(c)) break;
      k += m;
    }
    const std::size_t end_of_sentence = k;
    bool saw_space = false;
    while (k < range.end) {
      char32_t c;
      const std::size_t m = decode_utf8(text, k, c);
      if (!detail::is_space(c)) break;
      saw_space = true;
      k += m;
    }
    if (saw_space && k < range.end) {
      char32_t next;
      decode_utf8(text, k, next);
      const bool starts_sentence = detail::is_uppercase(next) || is_quote(next);
      if (starts_sentence && !(cp == '.' && closes_abbreviation(text, range.begin, i))) {
        ends.push_back(end_of_sentence);
      }
    }
    i += n;
  }
  ends.push_back(range.end);
  return ends;
}

struct RawToken {
  std::size_t begin;
  std::size_t end;
};

// Word runs joined by internal apostrophes or hyphens, plus a trailing
// possessive apostrophe after a final s ("Cellars'").
std::vector<RawToken> scan_tokens(std::string_view text, Span range) {
  std::vector<RawToken> out;
  auto cp_at = [&](std::size_t pos, char32_t& cp) -> std::size_t {
    if (pos >= range.end) {
      cp = 0;
      return 0;
    }
    return decode_utf8(text, pos, cp);
  };
  auto skip_word = [&](std::size_t pos) {
    char32_t cp;
    for (std::size_t n = cp_at(pos, cp); n && detail::is_word_char(cp); n = cp_at(pos, cp)) pos += n;
    return pos;
  };

  std::size_t i = range.begin;
  while (i < range.end) {
    char32_t cp;
    const std::size_t n = cp_at(i, cp);
    if (!detail::is_word_char(cp)) {
      i += n;
      continue;
    }
    const std::size_t begin = i;
    std::size_t j = skip_word(i);
    for (;;) {
      char32_t joiner;
      const std::size_t jn = cp_at(j, joiner);
      if (!jn || !(detail::is_apostrophe(joiner) || joiner == '-' || joiner == U'‐')) break;
      char32_t after;
      cp_at(j + jn, after);
      if (!detail::is_word_char(after)) {
        if (detail::is_apostrophe(joiner) && (text[j - 1] == 's' || text[j - 1] == 'S')) j += jn;
        break;
      }
      j = skip_word(j + jn);
    }
    out.push_back({begin, j});
    i = j;
  }
  return out;
}

}  // namespace

Document::Document(std::string id, std::vector<Token> tokens, std::vector<Sentence> sentences,
                   std::vector<Paragraph> paragraphs)
    : id_(std::move(id)),
      tokens_(std::move(tokens)),
      sentences_(std::move(sentences)),
      paragraphs_(std::move(paragraphs)) {}

bool Document::sentence_initial(std::size_t token) const noexcept {
  if (token >= tokens_.size()) return false;
  return sentences_[tokens_[token].sentence].tokens.begin == token;
}

std::span<const std::string_view> sentence_abbreviations() { return kAbbreviations; }

Document ingest_document(std::string_view raw, std::string id) {
  const std::string text = normalize_newlines(raw);
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
  std::vector<Paragraph> paragraphs;

  for (const Span& para : paragraph_ranges(text)) {
    const auto raw_tokens = scan_tokens(text, para);
    if (raw_tokens.empty()) continue;
    const std::size_t para_index = paragraphs.size();
    const std::size_t first_sentence = sentences.size();

    std::size_t next = 0;
    for (std::size_t end : sentence_ends(text, para)) {
      const std::size_t first_token = tokens.size();
      for (; next < raw_tokens.size() && raw_tokens[next].begin < end; ++next) {
        const auto& rt = raw_tokens[next];
        std::string surface = text.substr(rt.begin, rt.end - rt.begin);
        std::string stemmed = stem(surface);
        tokens.push_back(Token{std::move(surface), std::move(stemmed), sentences.size(), para_index, rt.begin});
      }
      if (tokens.size() == first_token) continue;
      sentences.push_back(Sentence{sentences.size(), para_index, {first_token, tokens.size()}});
    }
    paragraphs.push_back(Paragraph{para_index, {first_sentence, sentences.size()}});
  }

  if (tokens.empty()) throw EmptyInput(id);
  return Document(std::move(id), std::move(tokens), std::move(sentences), std::move(paragraphs));
}

std::string stem(std::string_view surface) {
  using detail::ends_with;
  const std::string lowered = detail::fold(surface);
  std::string s = lowered;
  while (ends_with(s, "'s") || ends_with(s, "'")) s.resize(s.size() - (ends_with(s, "'s") ? 2 : 1));
  if (s.empty()) return lowered;
  if (s.size() <= 3 || ends_with(s, "ss") || ends_with(s, "us") || ends_with(s, "is")) return s;

  if (ends_with(s, "ies") && s.size() > 4) {
    s.resize(s.size() - 3);
    return s + "y";
  }
  if (ends_with(s, "es")) {
    const std::string_view base = std::string_view(s).substr(0, s.size() - 2);
    if (ends_with(base, "sh") || ends_with(base, "ch") || ends_with(base, "x") ||
        ends_with(base, "z") || ends_with(base, "ss")) {
      return std::string(base);
    }
  }
  if (ends_with(s, "s")) s.pop_back();
  return s;
}

}  // namespace linseg

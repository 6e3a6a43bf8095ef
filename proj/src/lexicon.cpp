#include "linseg/lexicon.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <sstream>

#include "linseg/errors.hpp"
#include "text_util.hpp"

namespace linseg {

namespace detail {
extern const std::string_view kBuiltinLexicon;
}

namespace {

// Lower value wins when flattening.
int precedence(PosCategory c) {
  switch (c) {
    case PosCategory::PossessivePronoun: return 0;
    case PosCategory::PersonalPronoun: return 1;
    case PosCategory::ProperNoun: return 2;
    case PosCategory::CommonNoun: return 3;
    case PosCategory::Adjective: return 4;
    case PosCategory::Other: return 5;
  }
  return 5;
}

std::optional<PosCategory> parse_code(std::string_view code) {
  static constexpr std::array<std::pair<std::string_view, PosCategory>, 14> kCodes{{
      {"PN", PosCategory::ProperNoun},
      {"N", PosCategory::CommonNoun},
      {"ADJ", PosCategory::Adjective},
      {"PRON", PosCategory::PersonalPronoun},
      {"POSS", PosCategory::PossessivePronoun},
      {"OTHER", PosCategory::Other},
      {"V", PosCategory::Other},
      {"ADV", PosCategory::Other},
      {"AUX", PosCategory::Other},
      {"DET", PosCategory::Other},
      {"PREP", PosCategory::Other},
      {"CONJ", PosCategory::Other},
      {"NUM", PosCategory::Other},
      {"INTJ", PosCategory::Other},
  }};
  for (const auto& [name, cat] : kCodes)
    if (name == code) return cat;
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool has_letter(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    char32_t cp;
    i += detail::decode_utf8(s, i, cp);
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= 0x80 && detail::is_word_char(cp)))
      return true;
  }
  return false;
}

bool capitalized(std::string_view s) {
  if (s.empty()) return false;
  char32_t cp;
  detail::decode_utf8(s, 0, cp);
  return detail::is_uppercase(cp);
}

constexpr std::array<std::string_view, 6> kClitics{"'s", "'re", "'ve", "'ll", "'d", "'m"};

}  // namespace

std::string_view to_string(PosCategory c) {
  switch (c) {
    case PosCategory::ProperNoun: return "PN";
    case PosCategory::CommonNoun: return "N";
    case PosCategory::Adjective: return "ADJ";
    case PosCategory::PersonalPronoun: return "PRON";
    case PosCategory::PossessivePronoun: return "POSS";
    case PosCategory::Other: return "OTHER";
  }
  return "OTHER";
}

PosCategory flatten(std::span<const PosCategory> categories) {
  if (categories.empty()) return PosCategory::Other;
  return *std::min_element(categories.begin(), categories.end(),
                           [](PosCategory a, PosCategory b) { return precedence(a) < precedence(b); });
}

Lexicon Lexicon::parse(std::istream& in, const std::string& source) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  std::vector<PosCategory> cats;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw MalformedLexiconLine(source, line_no);
    const std::string_view surface = trim(std::string_view(line).substr(0, tab));
    const std::string_view codes = trim(std::string_view(line).substr(tab + 1));
    if (surface.empty() || codes.empty()) throw MalformedLexiconLine(source, line_no);

    cats.clear();
    std::size_t pos = 0;
    while (pos <= codes.size()) {
      auto comma = codes.find(',', pos);
      if (comma == std::string_view::npos) comma = codes.size();
      const std::string_view code = trim(codes.substr(pos, comma - pos));
      if (code.empty()) throw MalformedLexiconLine(source, line_no);
      const auto cat = parse_code(code);
      if (!cat) throw UnknownCategoryCode(source, line_no, std::string(code));
      cats.push_back(*cat);
      pos = comma + 1;
    }
    lex.insert(surface, flatten(cats));
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open lexicon");
  return parse(in, path.string());
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = [] {
    std::istringstream in{std::string(detail::kBuiltinLexicon)};
    return parse(in, "<builtin lexicon>");
  }();
  return lex;
}

std::optional<PosCategory> Lexicon::find(std::string_view surface) const {
  const auto it = entries_.find(detail::fold(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void Lexicon::insert(std::string_view surface, PosCategory category) {
  entries_[detail::fold(surface)] = category;
}

PosCategory tag(const Token& token, const Lexicon& lexicon, bool sentence_initial) {
  const std::string& surface = token.surface;
  if (!has_letter(surface)) return PosCategory::Other;

  auto known = lexicon.find(surface);
  if (!known) {
    const std::string folded = detail::fold(surface);
    for (std::string_view clitic : kClitics) {
      if (folded.size() > clitic.size() && detail::ends_with(folded, clitic)) {
        known = lexicon.find(std::string_view(folded).substr(0, folded.size() - clitic.size()));
        break;
      }
    }
  }

  const bool mid_sentence_capital = !sentence_initial && capitalized(surface);
  if (known) {
    if (*known == PosCategory::CommonNoun && mid_sentence_capital) return PosCategory::ProperNoun;
    return *known;
  }
  return mid_sentence_capital ? PosCategory::ProperNoun : PosCategory::CommonNoun;
}

std::vector<PosCategory> tag_document(const Document& doc, const Lexicon& lexicon) {
  std::vector<PosCategory> tags;
  tags.reserve(doc.word_count());
  const auto tokens = doc.tokens();
  for (std::size_t i = 0; i < tokens.size(); ++i) tags.push_back(tag(tokens[i], lexicon, doc.sentence_initial(i)));
  return tags;
}

}  // namespace linseg

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linseg/corpus.hpp"

namespace linseg {

enum class PosCategory { ProperNoun, CommonNoun, Adjective, PersonalPronoun, PossessivePronoun, Other };

std::string_view to_string(PosCategory c);

/// Part-of-speech table with exactly one category per lowercase surface form.
///
/// Table files hold `surface<TAB>CAT[,CAT...]` lines; `#` starts a comment.
/// Codes PN, N, ADJ, PRON, POSS and OTHER name the categories directly. The
/// open-class codes V, ADV, AUX, DET, PREP, CONJ, NUM and INTJ are read as
/// OTHER. Several codes on one line are flattened by term-recall precedence
/// (POSS > PRON > PN > N > ADJ > OTHER), and a repeated surface keeps the
/// last line.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon parse(std::istream& in, const std::string& source = "<lexicon>");
  static Lexicon load(const std::filesystem::path& path);

  /// The table compiled into the library from data/lexicon.tsv.
  static const Lexicon& builtin();

  std::optional<PosCategory> find(std::string_view surface) const;
  void insert(std::string_view surface, PosCategory category);
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::unordered_map<std::string, PosCategory> entries_;
};

inline Lexicon load_lexicon(const std::filesystem::path& path) { return Lexicon::load(path); }

/// Single category for a multi-category entry. Empty input gives Other.
PosCategory flatten(std::span<const PosCategory> categories);

/// Total tagging function. Known words take their stored category, except a
/// capitalized common noun in mid-sentence, which is read as a proper noun.
/// Unknown capitalized words in mid-sentence are proper nouns; every other
/// unknown word is a common noun, and tokens without a letter are Other.
PosCategory tag(const Token& token, const Lexicon& lexicon, bool sentence_initial);

std::vector<PosCategory> tag_document(const Document& doc, const Lexicon& lexicon);

}  // namespace linseg

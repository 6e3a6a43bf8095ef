#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linseg/corpus.hpp"
#include "linseg/lexicon.hpp"

namespace linseg {

enum class TermKind { ProperNP = 0, CommonNP = 1, Pronoun = 2 };

inline constexpr TermKind kAllTermKinds[] = {TermKind::ProperNP, TermKind::CommonNP, TermKind::Pronoun};

std::string_view to_string(TermKind k);
std::optional<TermKind> parse_term_kind(std::string_view name);

struct Occurrence {
  std::size_t sentence = 0;
  std::size_t paragraph = 0;
  Span tokens;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// A topical unit and every place it occurs, ordered by position.
struct Term {
  std::string key;
  TermKind kind = TermKind::CommonNP;
  std::vector<Occurrence> occurrences;
};

/// One match of `(Adj | Noun)* Noun` inside a sentence.
struct NounPhrase {
  Occurrence where;
  TermKind kind = TermKind::CommonNP;
  /// Stem of the final token.
  std::string head;
  /// Stems of every token, space separated.
  std::string form;

  bool modified() const noexcept { return where.tokens.size() > 1; }
};

/// Leftmost-longest matches per sentence. A phrase is a proper NP when its
/// head is tagged ProperNoun.
std::vector<NounPhrase> extract_noun_phrases(const Document& doc, std::span<const PosCategory> tags);

/// Groups phrases by (kind, head stem). A group with at most one distinct
/// modified form collapses into one term keyed by the head. Otherwise every
/// modified form stays its own term and bare heads form a separate term.
std::vector<Term> canonicalize(std::span<const NounPhrase> phrases);

/// Canonical personal pronoun for a personal or possessive form ("mine" ->
/// "I"), or nullopt when the word is not in the class table.
std::optional<std::string_view> pronoun_class(std::string_view surface);

std::vector<Term> extract_pronoun_terms(const Document& doc, std::span<const PosCategory> tags);

/// Keeps terms with at least two occurrences.
std::vector<Term> filter_terms(std::vector<Term> terms);

/// Tags, extracts, canonicalizes and filters. Result is sorted by (kind, key).
std::vector<Term> extract_terms(const Document& doc, const Lexicon& lexicon);

}  // namespace linseg

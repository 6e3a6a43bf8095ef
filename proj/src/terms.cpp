#include "linseg/terms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "text_util.hpp"

namespace linseg {

namespace {

bool is_noun(PosCategory c) { return c == PosCategory::CommonNoun || c == PosCategory::ProperNoun; }
bool is_modifier(PosCategory c) { return is_noun(c) || c == PosCategory::Adjective; }

bool occurrence_less(const Occurrence& a, const Occurrence& b) {
  return std::tie(a.sentence, a.tokens.begin) < std::tie(b.sentence, b.tokens.begin);
}

void sort_terms(std::vector<Term>& terms) {
  for (auto& t : terms) std::sort(t.occurrences.begin(), t.occurrences.end(), occurrence_less);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(a.kind, a.key) < std::tie(b.kind, b.key);
  });
}

struct PronounEntry {
  std::string_view surface;
  std::string_view cls;
};

constexpr std::array<PronounEntry, 23> kPronouns{{
    {"i", "I"},       {"me", "I"},      {"my", "I"},       {"mine", "I"},
    {"we", "we"},     {"us", "we"},     {"our", "we"},     {"ours", "we"},
    {"you", "you"},   {"your", "you"},  {"yours", "you"},  {"he", "he"},
    {"him", "he"},    {"his", "he"},    {"she", "she"},    {"her", "she"},
    {"hers", "she"},  {"it", "it"},     {"its", "it"},     {"they", "they"},
    {"them", "they"}, {"their", "they"}, {"theirs", "they"},
}};

}  // namespace

std::string_view to_string(TermKind k) {
  switch (k) {
    case TermKind::ProperNP: return "proper";
    case TermKind::CommonNP: return "common";
    case TermKind::Pronoun: return "pronoun";
  }
  return "common";
}

std::optional<TermKind> parse_term_kind(std::string_view name) {
  for (TermKind k : kAllTermKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::vector<NounPhrase> extract_noun_phrases(const Document& doc, std::span<const PosCategory> tags) {
  std::vector<NounPhrase> out;
  const auto tokens = doc.tokens();
  for (const Sentence& s : doc.sentences()) {
    std::size_t i = s.tokens.begin;
    while (i < s.tokens.end) {
      if (!is_modifier(tags[i])) {
        ++i;
        continue;
      }
      std::size_t run_end = i;
      std::size_t last_noun = s.tokens.end;
      while (run_end < s.tokens.end && is_modifier(tags[run_end])) {
        if (is_noun(tags[run_end])) last_noun = run_end;
        ++run_end;
      }
      if (last_noun == s.tokens.end) {
        i = run_end;
        continue;
      }
      NounPhrase np;
      np.where = Occurrence{s.index, s.paragraph, {i, last_noun + 1}};
      np.kind = tags[last_noun] == PosCategory::ProperNoun ? TermKind::ProperNP : TermKind::CommonNP;
      np.head = tokens[last_noun].stem;
      for (std::size_t k = i; k <= last_noun; ++k) {
        if (k > i) np.form += ' ';
        np.form += tokens[k].stem;
      }
      out.push_back(std::move(np));
      i = last_noun + 1;
    }
  }
  return out;
}

std::vector<Term> canonicalize(std::span<const NounPhrase> phrases) {
  std::map<std::pair<TermKind, std::string>, std::vector<const NounPhrase*>> groups;
  for (const auto& p : phrases) groups[{p.kind, p.head}].push_back(&p);

  std::vector<Term> terms;
  for (const auto& [group_key, members] : groups) {
    const auto& [kind, head] = group_key;
    std::set<std::string> modified_forms;
    for (const auto* p : members)
      if (p->modified()) modified_forms.insert(p->form);

    if (modified_forms.size() <= 1) {
      Term t{head, kind, {}};
      for (const auto* p : members) t.occurrences.push_back(p->where);
      terms.push_back(std::move(t));
      continue;
    }
    std::map<std::string, Term> split;
    for (const auto* p : members) {
      const std::string& key = p->modified() ? p->form : head;
      auto [it, inserted] = split.try_emplace(key, Term{key, kind, {}});
      it->second.occurrences.push_back(p->where);
    }
    for (auto& [key, t] : split) terms.push_back(std::move(t));
  }
  sort_terms(terms);
  return terms;
}

std::optional<std::string_view> pronoun_class(std::string_view surface) {
  const std::string folded = detail::fold(surface);
  for (const auto& e : kPronouns)
    if (e.surface == folded) return e.cls;
  // Pronoun with a contracted verb: "I'm", "they're", "he'll".
  const auto apos = folded.find('\'');
  if (apos != std::string::npos && apos > 0) {
    const std::string_view base = std::string_view(folded).substr(0, apos);
    for (const auto& e : kPronouns)
      if (e.surface == base) return e.cls;
  }
  return std::nullopt;
}

std::vector<Term> extract_pronoun_terms(const Document& doc, std::span<const PosCategory> tags) {
  std::map<std::string, Term> by_class;
  const auto tokens = doc.tokens();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tags[i] != PosCategory::PersonalPronoun && tags[i] != PosCategory::PossessivePronoun) continue;
    const auto cls = pronoun_class(tokens[i].surface);
    const std::string key = cls ? std::string(*cls) : detail::fold(tokens[i].surface);
    auto [it, inserted] = by_class.try_emplace(key, Term{key, TermKind::Pronoun, {}});
    it->second.occurrences.push_back(Occurrence{tokens[i].sentence, tokens[i].paragraph, {i, i + 1}});
  }
  std::vector<Term> terms;
  for (auto& [key, t] : by_class) terms.push_back(std::move(t));
  sort_terms(terms);
  return terms;
}

std::vector<Term> filter_terms(std::vector<Term> terms) {
  std::erase_if(terms, [](const Term& t) { return t.occurrences.size() < 2; });
  return terms;
}

std::vector<Term> extract_terms(const Document& doc, const Lexicon& lexicon) {
  const auto tags = tag_document(doc, lexicon);
  const auto phrases = extract_noun_phrases(doc, tags);
  auto terms = canonicalize(phrases);
  auto pronouns = extract_pronoun_terms(doc, tags);
  terms.insert(terms.end(), std::make_move_iterator(pronouns.begin()), std::make_move_iterator(pronouns.end()));
  terms = filter_terms(std::move(terms));
  sort_terms(terms);
  return terms;
}

}  // namespace linseg

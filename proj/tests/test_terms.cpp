#include <doctest.h>

#include <algorithm>
#include <random>

#include "linseg/terms.hpp"

using namespace linseg;
using P = PosCategory;

namespace {

std::vector<NounPhrase> phrases_for(const std::string& text, const std::vector<P>& tags) {
  const Document d = ingest_document(text, "x");
  REQUIRE(tags.size() == d.word_count());
  return extract_noun_phrases(d, tags);
}

std::vector<std::string> forms(const std::vector<NounPhrase>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.form);
  return out;
}

NounPhrase phrase(std::size_t sentence, std::string head, std::string form) {
  NounPhrase p;
  p.where = Occurrence{sentence, 0, Span{sentence, sentence + 1 + (form != head)}};
  p.head = std::move(head);
  p.form = std::move(form);
  return p;
}

const Term* find_term(const std::vector<Term>& terms, std::string_view key) {
  for (const auto& t : terms)
    if (t.key == key) return &t;
  return nullptr;
}

// Every maximal run of (Adj|Noun)* Noun: extend from each start as far as
// possible, keep the longest run that ends in a noun.
std::vector<Span> brute_matches(const std::vector<P>& tags) {
  auto nounish = [](P t) { return t == P::CommonNoun || t == P::ProperNoun; };
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < tags.size()) {
    std::size_t best = i;
    for (std::size_t j = i; j < tags.size() && (nounish(tags[j]) || tags[j] == P::Adjective); ++j)
      if (nounish(tags[j])) best = j + 1;
    if (best > i) {
      out.push_back({i, best});
      i = best;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("noun phrase pattern") {
  auto ps = phrases_for("red wine", {P::Adjective, P::CommonNoun});
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].head == "wine");
  CHECK(ps[0].kind == TermKind::CommonNP);
  CHECK(ps[0].form == "red wine");

  ps = phrases_for("wine cellar door", {P::CommonNoun, P::CommonNoun, P::CommonNoun});
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].where.tokens == Span{0, 3});
  CHECK(ps[0].head == "door");

  ps = phrases_for("red green", {P::Adjective, P::Adjective});
  CHECK(ps.empty());

  ps = phrases_for("wine red", {P::CommonNoun, P::Adjective});
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].where.tokens == Span{0, 1});
}

TEST_CASE("proprietor of Stag's Leap Wine Cellars in Napa Valley") {
  const Document d = ingest_document("He is the proprietor of Stag's Leap Wine Cellars in Napa Valley.", "x");
  const auto tags = tag_document(d, Lexicon::builtin());
  const auto ps = extract_noun_phrases(d, tags);
  CHECK(forms(ps) == std::vector<std::string>{"proprietor", "stag leap wine cellar", "napa valley"});
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].kind == TermKind::CommonNP);
  CHECK(ps[1].kind == TermKind::ProperNP);
  CHECK(ps[2].kind == TermKind::ProperNP);
}

TEST_CASE("phrases never cross sentences") {
  const Document d = ingest_document("The wine. Cellars grew.", "x");
  const std::vector<P> tags{P::Other, P::CommonNoun, P::CommonNoun, P::Other};
  const auto ps = extract_noun_phrases(d, tags);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].where.sentence == 0);
  CHECK(ps[1].where.sentence == 1);
}

TEST_CASE("extraction matches brute-force maximal matches") {
  std::mt19937_64 rng(11);
  const P alphabet[] = {P::CommonNoun, P::ProperNoun, P::Adjective, P::Other, P::PersonalPronoun};
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
    std::string text;
    std::vector<P> tags;
    for (std::size_t i = 0; i < n; ++i) {
      text += (i ? " w" : "w") + std::to_string(i);
      tags.push_back(alphabet[std::uniform_int_distribution<int>(0, 4)(rng)]);
    }
    const auto ps = phrases_for(text, tags);
    std::vector<Span> spans;
    for (const auto& p : ps) spans.push_back(p.where.tokens);
    CHECK(spans == brute_matches(tags));
  }
}

TEST_CASE("canonicalization by head") {
  SUBCASE("one modified form merges") {
    const std::vector<NounPhrase> ps{phrase(0, "wine", "red wine"), phrase(1, "wine", "wine"),
                                     phrase(2, "wine", "wine")};
    const auto terms = canonicalize(ps);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].key == "wine");
    CHECK(terms[0].occurrences.size() == 3);
  }
  SUBCASE("two modified forms block merging") {
    const std::vector<NounPhrase> ps{phrase(0, "wine", "red wine"), phrase(1, "wine", "white wine"),
                                     phrase(2, "wine", "wine")};
    const auto terms = canonicalize(ps);
    CHECK(terms.size() == 3);
    CHECK(find_term(terms, "red wine"));
    CHECK(find_term(terms, "white wine"));
    CHECK(find_term(terms, "wine"));
  }
  SUBCASE("repeated single form") {
    const std::vector<NounPhrase> ps{phrase(0, "wine", "wine"), phrase(3, "wine", "wine")};
    const auto terms = canonicalize(ps);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].occurrences.size() == 2);
  }
  SUBCASE("kinds stay apart") {
    auto proper = phrase(0, "wine", "wine");
    proper.kind = TermKind::ProperNP;
    const std::vector<NounPhrase> ps{proper, phrase(1, "wine", "wine")};
    CHECK(canonicalize(ps).size() == 2);
  }
}

TEST_CASE("canonicalization preserves occurrence count and order") {
  std::mt19937_64 rng(3);
  const char* heads[] = {"wine", "cellar", "valley"};
  const char* mods[] = {"red", "white", "old"};
  for (int round = 0; round < 200; ++round) {
    std::vector<NounPhrase> ps;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string h = heads[std::uniform_int_distribution<int>(0, 2)(rng)];
      const int m = std::uniform_int_distribution<int>(0, 3)(rng);
      ps.push_back(phrase(i, h, m == 3 ? h : std::string(mods[m]) + " " + h));
    }
    const auto terms = canonicalize(ps);
    std::size_t total = 0;
    for (const auto& t : terms) {
      total += t.occurrences.size();
      CHECK(std::is_sorted(t.occurrences.begin(), t.occurrences.end(),
                           [](const Occurrence& a, const Occurrence& b) { return a.sentence < b.sentence; }));
    }
    CHECK(total == n);
  }
}

TEST_CASE("pronoun classes") {
  CHECK(pronoun_class("my") == "I");
  CHECK(pronoun_class("mine") == "I");
  CHECK(pronoun_class("Me") == "I");
  CHECK(pronoun_class("ours") == "we");
  CHECK(pronoun_class("yours") == "you");
  CHECK(pronoun_class("his") == "he");
  CHECK(pronoun_class("hers") == "she");
  CHECK(pronoun_class("its") == "it");
  CHECK(pronoun_class("theirs") == "they");
  CHECK(pronoun_class("it's") == "it");
  CHECK_FALSE(pronoun_class("wine"));

  const Document d = ingest_document("My cat and I left. Her hat was hers, she said.", "x");
  const auto terms = extract_pronoun_terms(d, tag_document(d, Lexicon::builtin()));
  const Term* i = find_term(terms, "I");
  const Term* she = find_term(terms, "she");
  REQUIRE(i);
  REQUIRE(she);
  CHECK(i->occurrences.size() == 2);
  CHECK(she->occurrences.size() == 3);
  CHECK(i->kind == TermKind::Pronoun);
}

TEST_CASE("frequency filter") {
  std::vector<Term> terms(3);
  terms[0].occurrences.resize(1);
  terms[1].occurrences.resize(2);
  terms[2].occurrences.resize(5);
  const auto kept = filter_terms(terms);
  CHECK(kept.size() == 2);
  CHECK(filter_terms({}).empty());
}

TEST_CASE("extract_terms end to end") {
  const Document d = ingest_document(
      "The red wine was sold. Napa Valley grew. The wine was good.\n\nIn Napa Valley it rained. It was late.", "x");
  const auto terms = extract_terms(d, Lexicon::builtin());
  const Term* wine = find_term(terms, "wine");
  const Term* napa = find_term(terms, "valley");
  const Term* it = find_term(terms, "it");
  REQUIRE(wine);
  REQUIRE(napa);
  REQUIRE(it);
  CHECK(wine->occurrences.size() == 2);
  CHECK(napa->kind == TermKind::ProperNP);
  CHECK(it->occurrences.size() == 2);
  for (const auto& t : terms) CHECK(t.occurrences.size() >= 2);
  CHECK(std::is_sorted(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(a.kind, a.key) < std::tie(b.kind, b.key);
  }));
}

TEST_CASE("NP terms never overlap") {
  const Document d = ingest_document(
      "The old wine cellar near the wine market held wine. Old cellars and markets sold wine.", "x");
  const auto terms = extract_terms(d, Lexicon::builtin());
  std::vector<bool> used(d.word_count(), false);
  for (const auto& t : terms) {
    if (t.kind == TermKind::Pronoun) continue;
    for (const auto& o : t.occurrences)
      for (std::size_t i = o.tokens.begin; i < o.tokens.end; ++i) {
        CHECK_FALSE(used[i]);
        used[i] = true;
      }
  }
}

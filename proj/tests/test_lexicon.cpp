#include <doctest.h>

#include <sstream>

#include "linseg/errors.hpp"
#include "linseg/lexicon.hpp"

using namespace linseg;

namespace {

Lexicon parse(const std::string& text) {
  std::istringstream in(text);
  return Lexicon::parse(in, "test.tsv");
}

PosCategory tag_in(const std::string& text, std::size_t token, const Lexicon& lex) {
  const Document d = ingest_document(text, "x");
  return tag_document(d, lex)[token];
}

}  // namespace

TEST_CASE("category codes and flattening") {
  const Lexicon lex = parse("# comment\njump\tN,V\nwine\tN\nher\tPOSS\nher\tPRON\nquick\tADJ,ADV\nrun\tV\n\n");
  CHECK(lex.size() == 5);
  CHECK(lex.find("jump") == PosCategory::CommonNoun);
  CHECK(lex.find("wine") == PosCategory::CommonNoun);
  CHECK(lex.find("her") == PosCategory::PersonalPronoun);
  CHECK(lex.find("quick") == PosCategory::Adjective);
  CHECK(lex.find("run") == PosCategory::Other);
  CHECK(lex.find("WINE") == PosCategory::CommonNoun);
  CHECK_FALSE(lex.find("beer"));
}

TEST_CASE("flatten precedence") {
  using P = PosCategory;
  CHECK(flatten(std::vector<P>{P::Other, P::Adjective, P::CommonNoun}) == P::CommonNoun);
  CHECK(flatten(std::vector<P>{P::CommonNoun, P::ProperNoun}) == P::ProperNoun);
  CHECK(flatten(std::vector<P>{P::ProperNoun, P::PersonalPronoun}) == P::PersonalPronoun);
  CHECK(flatten(std::vector<P>{P::PersonalPronoun, P::PossessivePronoun, P::Other}) == P::PossessivePronoun);
  CHECK(flatten(std::vector<P>{}) == P::Other);
}

TEST_CASE("any line containing POSS stores POSS") {
  const char* codes[] = {"PN", "N", "ADJ", "PRON", "OTHER", "V", "DET"};
  for (const char* c : codes) {
    CHECK(parse(std::string("w\t") + c + ",POSS\n").find("w") == PosCategory::PossessivePronoun);
    CHECK(parse(std::string("w\tPOSS,") + c + "\n").find("w") == PosCategory::PossessivePronoun);
  }
}

TEST_CASE("parse errors carry the line") {
  try {
    parse("wine\tN\nbad line without tab\n");
    FAIL("expected MalformedLexiconLine");
  } catch (const MalformedLexiconLine& e) {
    CHECK(e.line() == 2);
    CHECK(e.source() == "test.tsv");
  }
  try {
    parse("wine\tN\n\n# c\nx\tZZ\n");
    FAIL("expected UnknownCategoryCode");
  } catch (const UnknownCategoryCode& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse("wine\t\n"), MalformedLexiconLine);
}

TEST_CASE("loading is deterministic") {
  const std::string text = "a\tN,ADJ\nb\tPN\na\tOTHER\n";
  CHECK(parse(text) == parse(text));
}

TEST_CASE("tag fallbacks") {
  const Lexicon lex = parse("wine\tN\nthe\tOTHER\ngood\tADJ\nis\tOTHER\n");
  CHECK(tag_in("The Zyxco wine", 1, lex) == PosCategory::ProperNoun);
  CHECK(tag_in("The wine", 1, lex) == PosCategory::CommonNoun);
  CHECK(tag_in("We frobnicate", 1, lex) == PosCategory::CommonNoun);
  CHECK(tag_in("Zyxco is good", 0, lex) == PosCategory::CommonNoun);
  CHECK(tag_in("Good wine", 0, lex) == PosCategory::Adjective);
  CHECK(tag_in("The Wine is good", 1, lex) == PosCategory::ProperNoun);
  CHECK(tag_in("The wine's", 1, lex) == PosCategory::CommonNoun);
  CHECK(tag_in("In 1998 it", 1, lex) == PosCategory::Other);
}

TEST_CASE("builtin table") {
  const Lexicon& lex = Lexicon::builtin();
  CHECK(lex.size() > 5000);
  CHECK(lex.find("wine") == PosCategory::CommonNoun);
  CHECK(lex.find("the") == PosCategory::Other);
  CHECK(lex.find("my") == PosCategory::PossessivePronoun);
  CHECK(lex.find("mine") == PosCategory::PossessivePronoun);
  CHECK(lex.find("she") == PosCategory::PersonalPronoun);
  CHECK(lex.find("happy") == PosCategory::Adjective);
  CHECK(lex.find("good") == PosCategory::CommonNoun);
}

TEST_CASE("tag is total") {
  const Document d = ingest_document("Odd tokens: 42, x-ray, O'Neil's, \xC3\xA9t\xC3\xA9 and 3rd.", "x");
  const auto tags = tag_document(d, Lexicon::builtin());
  CHECK(tags.size() == d.word_count());
}

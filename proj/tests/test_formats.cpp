#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "linseg/errors.hpp"
#include "linseg/formats.hpp"

using namespace linseg;

namespace {

std::vector<JudgmentSet> judgments(const std::string& text) {
  std::istringstream in(text);
  return parse_judgments(in, "j.txt");
}

std::vector<std::pair<std::string, GapSet>> system_file(const std::string& text) {
  std::istringstream in(text);
  return parse_system_file(in, "s.txt");
}

std::size_t error_line(const std::string& text) {
  try {
    judgments(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("judgment files") {
  const auto js = judgments("# header\ndoc wine paragraphs 8\njudge a: 3 5\njudge b:\n\ndoc x paragraphs 2\njudge a: 1\n");
  REQUIRE(js.size() == 2);
  CHECK(js[0].doc_id == "wine");
  CHECK(js[0].paragraph_count == 8);
  REQUIRE(js[0].judges.size() == 2);
  CHECK(js[0].judges[0].gaps == GapSet{3, 5});
  CHECK(js[0].judges[1].gaps.empty());
  CHECK(judgments(format_judgments(js)).size() == 2);
  CHECK(format_judgments(judgments(format_judgments(js))) == format_judgments(js));

  CHECK(error_line("judge a: 1\n") == 1);
  CHECK(error_line("doc a paragraphs 4\njudge a: 3 2\n") == 2);
  CHECK(error_line("doc a paragraphs 4\njudge a: 4\n") == 2);
  CHECK(error_line("doc a paragraphs 4\njudge a: 0\n") == 2);
  CHECK(error_line("doc a paragraphs 4\njudge a: x\n") == 2);
  CHECK(error_line("doc a paragraphs 4\njudge a: 1\njudge a: 2\n") == 3);
  CHECK(error_line("doc a paragraphs zero\n") == 1);
  CHECK(error_line("doc a paragraphs 4\njudge a: 1\ndoc a paragraphs 4\n") == 3);
  CHECK(error_line("doc a paragraphs 4\nnonsense\n") == 2);
  CHECK_THROWS_AS(judgments("doc a paragraphs 4\n"), ParseError);
}

TEST_CASE("system files") {
  const auto s = system_file("# scores doc a: 1.0 2.0\ndoc a: 2 4\ndoc b:\n");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == std::pair<std::string, GapSet>{"a", {2, 4}});
  CHECK(s[1].second.empty());
  CHECK_THROWS_AS(system_file("a: 1\n"), ParseError);
  CHECK_THROWS_AS(system_file("doc a: 1\ndoc a: 2\n"), ParseError);
  CHECK_THROWS_AS(system_file("doc a: 2 1\n"), ParseError);
}

TEST_CASE("rendering") {
  CHECK(format_segmentation(Segmentation("x", 1, {})) == "doc x:");
  CHECK(format_segmentation(Segmentation("x", 5, {4, 1})) == "doc x: 1 4");
  CHECK(format_report({{"report.version", "1"}, {"a", "0.5000"}}) == "report.version\t1\na\t0.5000\n");
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "linseg_formats_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  write_file_atomic(path, "one\n");
  write_file_atomic(path, "two\n");
  CHECK(read_text_file(path) == "two\n");
  CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  CHECK_THROWS_AS(read_text_file(dir / "missing.txt"), ParseError);
  CHECK_THROWS_AS(load_judgments(dir / "missing.txt"), ParseError);
  std::filesystem::remove_all(dir);
}

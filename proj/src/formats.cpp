#include "linseg/formats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "linseg/errors.hpp"

namespace linseg {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, s.find_last_not_of(" \t\r") - b + 1));
}

GapSet parse_gaps(std::string_view text, const std::string& source, std::size_t line_no) {
  GapSet gaps;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(word, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != word.size() || word[0] == '-' || word[0] == '+' || value == 0)
      throw ParseError(source, line_no, "bad gap index '" + word + "'");
    if (!gaps.empty() && value <= gaps.back()) throw ParseError(source, line_no, "gap indices must ascend");
    gaps.push_back(value);
  }
  return gaps;
}

std::string join_gaps(const GapSet& gaps) {
  std::string out;
  for (std::size_t g : gaps) out += ' ' + std::to_string(g);
  return out;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return in;
}

}  // namespace

std::vector<JudgmentSet> parse_judgments(std::istream& in, const std::string& source) {
  std::vector<JudgmentSet> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    std::istringstream words(text);
    std::string keyword;
    words >> keyword;
    if (keyword == "doc") {
      std::string id, label;
      long paragraphs = 0;
      if (!(words >> id >> label >> paragraphs) || label != "paragraphs" || paragraphs < 1)
        throw ParseError(source, line_no, "expected 'doc <id> paragraphs <P>'");
      std::string extra;
      if (words >> extra) throw ParseError(source, line_no, "trailing text after paragraph count");
      for (const auto& js : out)
        if (js.doc_id == id) throw ParseError(source, line_no, "duplicate document '" + id + "'");
      out.push_back(JudgmentSet{id, static_cast<std::size_t>(paragraphs), {}});
    } else if (keyword == "judge") {
      if (out.empty()) throw ParseError(source, line_no, "judge line before any doc header");
      const auto colon = text.find(':');
      if (colon == std::string::npos) throw ParseError(source, line_no, "expected 'judge <name>: gaps'");
      const std::string name = trim(std::string_view(text).substr(5, colon - 5));
      if (name.empty()) throw ParseError(source, line_no, "judge name is empty");
      auto& js = out.back();
      for (const auto& j : js.judges)
        if (j.name == name) throw ParseError(source, line_no, "duplicate judge '" + name + "'");
      GapSet gaps = parse_gaps(std::string_view(text).substr(colon + 1), source, line_no);
      if (!gaps.empty() && gaps.back() + 1 > js.paragraph_count)
        throw ParseError(source, line_no, "gap " + std::to_string(gaps.back()) + " exceeds P - 1");
      js.judges.push_back(Judge{name, std::move(gaps)});
    } else {
      throw ParseError(source, line_no, "unknown line '" + keyword + "'");
    }
  }
  for (const auto& js : out)
    if (js.judges.empty()) throw ParseError(source, 0, "document '" + js.doc_id + "' has no judges");
  return out;
}

std::vector<JudgmentSet> load_judgments(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_judgments(in, path.string());
}

std::string format_judgments(std::span<const JudgmentSet> judgments) {
  std::string out;
  for (const auto& js : judgments) {
    out += "doc " + js.doc_id + " paragraphs " + std::to_string(js.paragraph_count) + "\n";
    for (const auto& j : js.judges) out += "judge " + j.name + ":" + join_gaps(j.gaps) + "\n";
  }
  return out;
}

std::vector<std::pair<std::string, GapSet>> parse_system_file(std::istream& in, const std::string& source) {
  std::vector<std::pair<std::string, GapSet>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto colon = text.find(':');
    if (text.rfind("doc ", 0) != 0 || colon == std::string::npos)
      throw ParseError(source, line_no, "expected 'doc <id>: gaps'");
    const std::string id = trim(std::string_view(text).substr(4, colon - 4));
    if (id.empty() || id.find_first_of(" \t") != std::string::npos)
      throw ParseError(source, line_no, "bad document id");
    for (const auto& [existing, gaps] : out)
      if (existing == id) throw ParseError(source, line_no, "duplicate document '" + id + "'");
    out.emplace_back(id, parse_gaps(std::string_view(text).substr(colon + 1), source, line_no));
  }
  return out;
}

std::vector<std::pair<std::string, GapSet>> load_system_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_system_file(in, path.string());
}

std::string format_segmentation(const Segmentation& seg) { return "doc " + seg.doc_id() + ":" + join_gaps(seg.gaps()); }

std::string format_report(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out;
  for (const auto& [k, v] : rows) out += k + '\t' + v + '\n';
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(tmp.string(), 0, "cannot write file");
    out << content;
    if (!out.flush()) throw ParseError(tmp.string(), 0, "write failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace linseg

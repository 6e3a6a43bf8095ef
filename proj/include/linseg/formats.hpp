#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linseg/evaluation.hpp"
#include "linseg/segmentation.hpp"

namespace linseg {

/// Judgment files:
///
///     doc <id> paragraphs <P>
///     judge <name>: g1 g2 ...
///
/// Any number of documents per file; gaps are 1-based and ascending. Blank
/// lines and `#` comments are ignored. Throws ParseError naming the line.
std::vector<JudgmentSet> parse_judgments(std::istream& in, const std::string& source = "<judgments>");
std::vector<JudgmentSet> load_judgments(const std::filesystem::path& path);
std::string format_judgments(std::span<const JudgmentSet> judgments);

/// System segmentation files: one `doc <id>: g1 g2 ...` line per document.
/// Lines starting with `#` are comments.
std::vector<std::pair<std::string, GapSet>> parse_system_file(std::istream& in,
                                                              const std::string& source = "<system>");
std::vector<std::pair<std::string, GapSet>> load_system_file(const std::filesystem::path& path);

/// `doc <id>: g1 g2 ...` (no trailing space when there are no gaps).
std::string format_segmentation(const Segmentation& seg);

/// `key<TAB>value` lines.
std::string format_report(const std::vector<std::pair<std::string, std::string>>& rows);

std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace linseg

#include "linseg/weighting.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

#include "linseg/errors.hpp"

namespace linseg {

bool operator<(const KindWeights& a, const KindWeights& b) {
  return std::tie(a.front, a.rear, a.during, a.link) < std::tie(b.front, b.rear, b.during, b.link);
}

KindWeights& WeightConfig::operator[](TermKind k) {
  switch (k) {
    case TermKind::ProperNP: return proper;
    case TermKind::CommonNP: return common;
    case TermKind::Pronoun: return pronoun;
  }
  return common;
}

const KindWeights& WeightConfig::operator[](TermKind k) const {
  return const_cast<WeightConfig&>(*this)[k];
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

WeightConfig parse_weight_config(std::istream& in, const std::string& source) {
  WeightConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    const auto dot = text.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
      throw ParseError(source, line_no, "expected kind.field=value");
    const std::string kind_name = trim(text.substr(0, dot));
    const std::string field = trim(text.substr(dot + 1, eq - dot - 1));
    const std::string value = trim(text.substr(eq + 1));

    const auto kind = parse_term_kind(kind_name);
    if (!kind) throw ParseError(source, line_no, "unknown term kind '" + kind_name + "'");
    KindWeights& w = config[*kind];

    Score parsed;
    if (!parse_score(value, parsed)) throw ParseError(source, line_no, "bad number '" + value + "'");
    if (field == "front") {
      w.front = parsed;
    } else if (field == "rear") {
      w.rear = parsed;
    } else if (field == "during") {
      w.during = parsed;
    } else if (field == "link") {
      if (denominator(parsed) != 1 || parsed < 0 || parsed > 100000)
        throw ParseError(source, line_no, "link length must be a non-negative integer");
      w.link = static_cast<int>(numerator(parsed));
    } else {
      throw ParseError(source, line_no, "unknown field '" + field + "'");
    }
  }
  return config;
}

WeightConfig load_weight_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open weight config");
  return parse_weight_config(in, path.string());
}

std::string format_weight_config(const WeightConfig& config) {
  std::ostringstream out;
  for (TermKind k : kAllTermKinds) {
    const KindWeights& w = config[k];
    const auto name = to_string(k);
    out << name << ".front=" << exact_string(w.front) << '\n'
        << name << ".rear=" << exact_string(w.rear) << '\n'
        << name << ".during=" << exact_string(w.during) << '\n'
        << name << ".link=" << w.link << '\n';
  }
  return out.str();
}

TermScoreVector assign_weights(std::span<const RoleCounts> roles, const KindWeights& weights, std::string key) {
  TermScoreVector vec;
  vec.key = std::move(key);
  vec.raw.reserve(roles.size());
  vec.no_link.reserve(roles.size());
  for (const RoleCounts& r : roles) {
    vec.raw.push_back(weights.front * r.front + weights.during * r.during + weights.rear * r.rear);
    vec.no_link.push_back(r.no_link());
  }
  vec.normalized = vec.raw;
  return vec;
}

void zero_sum(TermScoreVector& vec) {
  vec.normalized = vec.raw;
  Score assigned = 0;
  std::size_t unlinked = 0;
  for (std::size_t p = 0; p < vec.raw.size(); ++p) {
    if (vec.no_link[p]) {
      ++unlinked;
    } else {
      assigned += vec.raw[p];
    }
  }
  if (unlinked == 0) return;
  const Score share = -assigned / static_cast<long>(unlinked);
  for (std::size_t p = 0; p < vec.raw.size(); ++p)
    if (vec.no_link[p]) vec.normalized[p] = share;
}

std::vector<Score> total_scores(std::span<const TermScoreVector> vectors, std::size_t paragraph_count) {
  std::vector<Score> totals(paragraph_count);
  for (const auto& v : vectors) {
    if (v.normalized.size() != paragraph_count)
      throw LengthMismatch("score vector for '" + v.key + "' has " + std::to_string(v.normalized.size()) +
                           " paragraphs, expected " + std::to_string(paragraph_count));
    for (std::size_t p = 0; p < paragraph_count; ++p) totals[p] += v.normalized[p];
  }
  return totals;
}

}  // namespace linseg

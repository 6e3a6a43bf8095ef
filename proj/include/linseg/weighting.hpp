#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "linseg/linking.hpp"
#include "linseg/score.hpp"
#include "linseg/terms.hpp"

namespace linseg {

/// Scores one term type gives to its front, rear and during paragraphs, plus
/// the link length used when chaining its occurrences.
struct KindWeights {
  Score front;
  Score rear;
  Score during;
  int link = 0;

  friend bool operator==(const KindWeights&, const KindWeights&) = default;
};

/// Lexicographic order on (front, rear, during, link).
bool operator<(const KindWeights& a, const KindWeights& b);

struct WeightConfig {
  KindWeights proper{10, 8, -3, 8};
  KindWeights common{10, 8, -3, 4};
  KindWeights pronoun{1, 13, -1, 0};

  KindWeights& operator[](TermKind k);
  const KindWeights& operator[](TermKind k) const;

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

/// Reads `kind.field=value` lines (kind: proper, common, pronoun; field:
/// front, rear, during, link). Omitted fields keep their defaults. Values are
/// exact decimals; link must be a non-negative integer.
WeightConfig parse_weight_config(std::istream& in, const std::string& source = "<weights>");
WeightConfig load_weight_config(const std::filesystem::path& path);
std::string format_weight_config(const WeightConfig& config);

struct TermScoreVector {
  std::string key;
  std::vector<Score> raw;
  std::vector<bool> no_link;
  std::vector<Score> normalized;
};

/// Sums role contributions into raw paragraph scores. No-link paragraphs get
/// a provisional 0 and are flagged. `normalized` starts equal to `raw`.
TermScoreVector assign_weights(std::span<const RoleCounts> roles, const KindWeights& weights,
                               std::string key = {});

/// Spreads the negative of the assigned-score sum evenly over the no-link
/// paragraphs. Without no-link paragraphs the scores are left as they are.
void zero_sum(TermScoreVector& vec);

/// Elementwise sum of normalized scores. Throws LengthMismatch when a vector
/// does not have `paragraph_count` entries.
std::vector<Score> total_scores(std::span<const TermScoreVector> vectors, std::size_t paragraph_count);

}  // namespace linseg

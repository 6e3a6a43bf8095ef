#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linseg/corpus.hpp"
#include "linseg/score.hpp"

namespace linseg {

/// Sorted, duplicate-free 1-based gap indices; gap g separates paragraph g
/// from paragraph g + 1.
using GapSet = std::vector<std::size_t>;

/// Inclusive 1-based paragraph range.
struct Segment {
  std::size_t first = 1;
  std::size_t last = 1;
  friend bool operator==(const Segment&, const Segment&) = default;
};

class Segmentation {
 public:
  Segmentation() = default;
  /// Throws BoundaryMismatch if a gap is outside [1, paragraph_count - 1].
  /// Unsorted or repeated gaps are normalized.
  Segmentation(std::string doc_id, std::size_t paragraph_count, GapSet gaps);

  const std::string& doc_id() const noexcept { return doc_id_; }
  std::size_t paragraph_count() const noexcept { return paragraph_count_; }
  const GapSet& gaps() const noexcept { return gaps_; }

  std::size_t segment_count() const noexcept { return gaps_.size() + 1; }
  std::vector<Segment> segments() const;
  /// Segment index (0-based) of a 0-based paragraph.
  std::size_t segment_of(std::size_t paragraph) const;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;

 private:
  std::string doc_id_;
  std::size_t paragraph_count_ = 1;
  GapSet gaps_;
};

inline constexpr std::size_t kDefaultClusteringWordLimit = 1500;

/// Paragraphs after the first with a positive total are candidate
/// boundaries. For documents of at most `clustering_word_limit` words each
/// run of consecutive candidates keeps only its maximum (earliest on ties).
/// A boundary at paragraph p becomes gap p - 1.
Segmentation find_boundaries(std::span<const Score> totals, std::string doc_id, std::size_t word_count,
                             std::size_t clustering_word_limit = kDefaultClusteringWordLimit);

Segmentation find_boundaries(std::span<const Score> totals, const Document& doc,
                             std::size_t clustering_word_limit = kDefaultClusteringWordLimit);

}  // namespace linseg

#include "linseg/segmentation.hpp"

#include <algorithm>

#include "linseg/errors.hpp"

namespace linseg {

Segmentation::Segmentation(std::string doc_id, std::size_t paragraph_count, GapSet gaps)
    : doc_id_(std::move(doc_id)), paragraph_count_(paragraph_count), gaps_(std::move(gaps)) {
  if (paragraph_count_ == 0) throw BoundaryMismatch("document '" + doc_id_ + "' has no paragraphs");
  std::sort(gaps_.begin(), gaps_.end());
  gaps_.erase(std::unique(gaps_.begin(), gaps_.end()), gaps_.end());
  for (std::size_t g : gaps_) {
    if (g < 1 || g + 1 > paragraph_count_)
      throw BoundaryMismatch("gap " + std::to_string(g) + " outside [1, " + std::to_string(paragraph_count_ - 1) +
                             "] for document '" + doc_id_ + "'");
  }
}

std::vector<Segment> Segmentation::segments() const {
  std::vector<Segment> out;
  std::size_t first = 1;
  for (std::size_t g : gaps_) {
    out.push_back({first, g});
    first = g + 1;
  }
  out.push_back({first, paragraph_count_});
  return out;
}

std::size_t Segmentation::segment_of(std::size_t paragraph) const {
  // Gap g precedes 0-based paragraph g, so count gaps <= paragraph.
  return static_cast<std::size_t>(std::upper_bound(gaps_.begin(), gaps_.end(), paragraph) - gaps_.begin());
}

Segmentation find_boundaries(std::span<const Score> totals, std::string doc_id, std::size_t word_count,
                             std::size_t clustering_word_limit) {
  const std::size_t P = std::max<std::size_t>(totals.size(), 1);
  const bool cluster = word_count <= clustering_word_limit;
  GapSet gaps;
  // 0-based index i is 1-based paragraph i + 1; gap before it is i.
  std::size_t i = 1;
  while (i < totals.size()) {
    if (totals[i] <= 0) {
      ++i;
      continue;
    }
    if (!cluster) {
      gaps.push_back(i);
      ++i;
      continue;
    }
    std::size_t best = i;
    for (; i < totals.size() && totals[i] > 0; ++i)
      if (totals[i] > totals[best]) best = i;
    gaps.push_back(best);
  }
  return Segmentation(std::move(doc_id), P, std::move(gaps));
}

Segmentation find_boundaries(std::span<const Score> totals, const Document& doc, std::size_t clustering_word_limit) {
  return find_boundaries(totals, doc.id(), doc.word_count(), clustering_word_limit);
}

}  // namespace linseg

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linseg/corpus.hpp"
#include "linseg/lexicon.hpp"
#include "linseg/linking.hpp"
#include "linseg/segmentation.hpp"
#include "linseg/terms.hpp"
#include "linseg/weighting.hpp"

namespace linseg {

struct SegmenterOptions {
  WeightConfig weights;
  std::size_t clustering_word_limit = kDefaultClusteringWordLimit;
};

struct TermAnalysis {
  const Term* term = nullptr;
  std::vector<Link> links;
  std::vector<RoleCounts> roles;
  TermScoreVector scores;
};

/// Every intermediate of one segmentation run. `terms` points into the span
/// passed to analyze(), which must outlive the result.
struct DocumentAnalysis {
  std::vector<TermAnalysis> terms;
  std::vector<Score> totals;
  Segmentation segmentation;
};

/// Links, weighs and zero-sums each term, totals the paragraphs and finds
/// the boundaries.
DocumentAnalysis analyze(const Document& doc, std::span<const Term> terms, const SegmenterOptions& options);

/// Paragraph totals only; the hot path used by training.
std::vector<Score> paragraph_totals(std::size_t paragraph_count, std::span<const Term> terms,
                                    const WeightConfig& weights);

Segmentation segment(const Document& doc, std::span<const Term> terms, const SegmenterOptions& options);

/// Full pipeline from a document: term extraction with `lexicon`, then
/// segment().
Segmentation segment(const Document& doc, const Lexicon& lexicon, const SegmenterOptions& options);

}  // namespace linseg

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linseg/score.hpp"
#include "linseg/segmentation.hpp"
#include "linseg/terms.hpp"

namespace linseg {

enum class SegmentFunction { Summary, Anecdotal, Support };

std::string_view to_string(SegmentFunction f);

/// What TF means in TF*SF: occurrences inside the segment, or in the whole
/// document.
enum class TfMode { Segment, Document };

/// Coverage credit per term: H(SF) over the segments the term reaches, or
/// H(n) over its n occurrences inside the segment.
enum class CoverageMode { SegmentSpread, OccurrenceCount };

struct SignificanceOptions {
  TfMode tf = TfMode::Segment;
  CoverageMode coverage = CoverageMode::SegmentSpread;
  /// Allow one summary near the start and one near the end.
  bool summary_per_end = false;
};

struct SegmentAssessment {
  std::size_t segment = 0;  // 1-based
  Segment paragraphs;
  Score tf_sf_raw;
  Score tf_sf_norm;
  Score coverage_raw;
  Score coverage_norm;
  Score importance;
  SegmentFunction function = SegmentFunction::Support;
};

/// 1 + 1/2 + ... + 1/k; H(0) = 0.
Score harmonic(std::size_t k);

/// Number of segments holding at least one occurrence of the term.
std::size_t segment_frequency(const Term& term, const Segmentation& seg);

/// Sum over noun-phrase terms present in the segment of TF x SF. Pronoun
/// terms are ignored.
Score tf_sf_raw(const Segmentation& seg, std::size_t segment, std::span<const Term> terms,
                TfMode mode = TfMode::Segment);

/// Sum over noun-phrase terms present in the segment of their harmonic
/// coverage credit.
Score coverage_raw(const Segmentation& seg, std::size_t segment, std::span<const Term> terms,
                   CoverageMode mode = CoverageMode::SegmentSpread);

/// Raw scores for every segment, each normalized by its maximum over
/// segments (all zeros when the maximum is zero); importance is their sum.
/// Functions are left as Support.
std::vector<SegmentAssessment> assess(const Segmentation& seg, std::span<const Term> terms,
                                      const SignificanceOptions& options = {});

/// Labels segments in place. Summary: the most important segment touching
/// the first or last ceil(0.2 P) paragraphs, provided it ranks within the top
/// max(1, floor(0.1 S)) segments overall (earlier segments win ties).
/// Anecdotal: the first and the last segment, when not Summary, if a proper
/// noun phrase occurs there and in no other segment. The rest are Support.
void classify_functions(std::vector<SegmentAssessment>& assessments, const Segmentation& seg,
                        std::span<const Term> terms, const SignificanceOptions& options = {});

/// assess() followed by classify_functions().
std::vector<SegmentAssessment> signify(const Segmentation& seg, std::span<const Term> terms,
                                       const SignificanceOptions& options = {});

/// `segment  start_para  end_para  tf_sf  coverage  importance  function`
/// rows (tab separated, normalized scores to 4 decimals) and a closing
/// `# summary=... anecdotal=...` line.
std::string format_assessments(std::span<const SegmentAssessment> assessments);

}  // namespace linseg

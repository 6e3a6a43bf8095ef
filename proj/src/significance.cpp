#include "linseg/significance.hpp"

#include <algorithm>
#include <sstream>

namespace linseg {

namespace {

bool is_np(const Term& t) { return t.kind != TermKind::Pronoun; }

std::size_t count_in_segment(const Term& term, const Segmentation& seg, std::size_t segment) {
  return static_cast<std::size_t>(std::count_if(term.occurrences.begin(), term.occurrences.end(), [&](const Occurrence& o) {
    return seg.segment_of(o.paragraph) == segment;
  }));
}

Score normalize(const Score& value, const Score& max) { return max > 0 ? Score(value / max) : Score(0); }

}  // namespace

std::string_view to_string(SegmentFunction f) {
  switch (f) {
    case SegmentFunction::Summary: return "summary";
    case SegmentFunction::Anecdotal: return "anecdotal";
    case SegmentFunction::Support: return "support";
  }
  return "support";
}

Score harmonic(std::size_t k) {
  Score h = 0;
  for (std::size_t i = 1; i <= k; ++i) h += Score(1, static_cast<long>(i));
  return h;
}

std::size_t segment_frequency(const Term& term, const Segmentation& seg) {
  std::vector<std::size_t> segs;
  for (const auto& o : term.occurrences) segs.push_back(seg.segment_of(o.paragraph));
  std::sort(segs.begin(), segs.end());
  return static_cast<std::size_t>(std::unique(segs.begin(), segs.end()) - segs.begin());
}

Score tf_sf_raw(const Segmentation& seg, std::size_t segment, std::span<const Term> terms, TfMode mode) {
  Score total = 0;
  for (const Term& t : terms) {
    if (!is_np(t)) continue;
    const std::size_t local = count_in_segment(t, seg, segment);
    if (local == 0) continue;
    const std::size_t tf = mode == TfMode::Segment ? local : t.occurrences.size();
    total += Score(static_cast<long>(tf * segment_frequency(t, seg)));
  }
  return total;
}

Score coverage_raw(const Segmentation& seg, std::size_t segment, std::span<const Term> terms, CoverageMode mode) {
  Score total = 0;
  for (const Term& t : terms) {
    if (!is_np(t)) continue;
    const std::size_t local = count_in_segment(t, seg, segment);
    if (local == 0) continue;
    total += harmonic(mode == CoverageMode::SegmentSpread ? segment_frequency(t, seg) : local);
  }
  return total;
}

std::vector<SegmentAssessment> assess(const Segmentation& seg, std::span<const Term> terms,
                                      const SignificanceOptions& options) {
  const auto segments = seg.segments();
  std::vector<SegmentAssessment> out(segments.size());
  Score max_tf = 0, max_cov = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    auto& a = out[s];
    a.segment = s + 1;
    a.paragraphs = segments[s];
    a.tf_sf_raw = tf_sf_raw(seg, s, terms, options.tf);
    a.coverage_raw = coverage_raw(seg, s, terms, options.coverage);
    max_tf = std::max(max_tf, a.tf_sf_raw);
    max_cov = std::max(max_cov, a.coverage_raw);
  }
  for (auto& a : out) {
    a.tf_sf_norm = normalize(a.tf_sf_raw, max_tf);
    a.coverage_norm = normalize(a.coverage_raw, max_cov);
    a.importance = a.tf_sf_norm + a.coverage_norm;
  }
  return out;
}

void classify_functions(std::vector<SegmentAssessment>& assessments, const Segmentation& seg,
                        std::span<const Term> terms, const SignificanceOptions& options) {
  const std::size_t S = assessments.size();
  if (S == 0) return;
  for (auto& a : assessments) a.function = SegmentFunction::Support;

  const std::size_t P = seg.paragraph_count();
  const std::size_t edge = (P * 2 + 9) / 10;  // ceil(0.2 P)
  const std::size_t cutoff = std::max<std::size_t>(1, S / 10);

  // 1-based rank with earlier segments ahead on ties.
  auto rank = [&](std::size_t s) {
    std::size_t r = 1;
    for (std::size_t o = 0; o < S; ++o) {
      const auto& a = assessments[o].importance;
      const auto& b = assessments[s].importance;
      if (a > b || (a == b && o < s)) ++r;
    }
    return r;
  };
  auto pick = [&](auto in_zone) {
    std::optional<std::size_t> best;
    for (std::size_t s = 0; s < S; ++s)
      if (in_zone(assessments[s].paragraphs) && (!best || assessments[s].importance > assessments[*best].importance))
        best = s;
    if (best && rank(*best) <= cutoff) assessments[*best].function = SegmentFunction::Summary;
  };
  auto head = [&](const Segment& g) { return g.first <= edge; };
  auto tail = [&](const Segment& g) { return g.last + edge > P; };
  if (options.summary_per_end) {
    pick(head);
    pick(tail);
  } else {
    pick([&](const Segment& g) { return head(g) || tail(g); });
  }

  auto has_local_proper = [&](std::size_t s) {
    for (const Term& t : terms) {
      if (t.kind != TermKind::ProperNP || t.occurrences.empty()) continue;
      if (segment_frequency(t, seg) == 1 && seg.segment_of(t.occurrences.front().paragraph) == s) return true;
    }
    return false;
  };
  for (std::size_t s : {std::size_t{0}, S - 1}) {
    if (assessments[s].function == SegmentFunction::Summary) continue;
    if (has_local_proper(s)) assessments[s].function = SegmentFunction::Anecdotal;
  }
}

std::vector<SegmentAssessment> signify(const Segmentation& seg, std::span<const Term> terms,
                                       const SignificanceOptions& options) {
  auto out = assess(seg, terms, options);
  classify_functions(out, seg, terms, options);
  return out;
}

std::string format_assessments(std::span<const SegmentAssessment> assessments) {
  std::ostringstream out;
  std::string summary, anecdotal;
  for (const auto& a : assessments) {
    out << a.segment << '\t' << a.paragraphs.first << '\t' << a.paragraphs.last << '\t'
        << format_score(a.tf_sf_norm) << '\t' << format_score(a.coverage_norm) << '\t'
        << format_score(a.importance) << '\t' << to_string(a.function) << '\n';
    std::string& list = a.function == SegmentFunction::Summary ? summary : anecdotal;
    if (a.function != SegmentFunction::Support) list += (list.empty() ? "" : ",") + std::to_string(a.segment);
  }
  out << "# summary=" << (summary.empty() ? "-" : summary) << " anecdotal=" << (anecdotal.empty() ? "-" : anecdotal)
      << '\n';
  return out.str();
}

}  // namespace linseg

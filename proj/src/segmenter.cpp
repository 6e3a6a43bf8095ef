#include "linseg/segmenter.hpp"

namespace linseg {

namespace {

TermScoreVector score_term(const Term& term, std::size_t paragraph_count, const KindWeights& w,
                           std::vector<Link>* links_out, std::vector<RoleCounts>* roles_out) {
  auto links = build_links(term, w.link);
  auto roles = label_paragraphs(links, paragraph_count);
  auto vec = assign_weights(roles, w, term.key);
  zero_sum(vec);
  if (links_out) *links_out = std::move(links);
  if (roles_out) *roles_out = std::move(roles);
  return vec;
}

}  // namespace

DocumentAnalysis analyze(const Document& doc, std::span<const Term> terms, const SegmenterOptions& options) {
  DocumentAnalysis out;
  const std::size_t P = doc.paragraph_count();
  std::vector<TermScoreVector> vectors;
  vectors.reserve(terms.size());
  for (const Term& t : terms) {
    TermAnalysis ta;
    ta.term = &t;
    ta.scores = score_term(t, P, options.weights[t.kind], &ta.links, &ta.roles);
    vectors.push_back(ta.scores);
    out.terms.push_back(std::move(ta));
  }
  out.totals = total_scores(vectors, P);
  out.segmentation = find_boundaries(out.totals, doc, options.clustering_word_limit);
  return out;
}

std::vector<Score> paragraph_totals(std::size_t paragraph_count, std::span<const Term> terms,
                                    const WeightConfig& weights) {
  std::vector<Score> totals(paragraph_count);
  for (const Term& t : terms) {
    const auto vec = score_term(t, paragraph_count, weights[t.kind], nullptr, nullptr);
    for (std::size_t p = 0; p < paragraph_count; ++p) totals[p] += vec.normalized[p];
  }
  return totals;
}

Segmentation segment(const Document& doc, std::span<const Term> terms, const SegmenterOptions& options) {
  const auto totals = paragraph_totals(doc.paragraph_count(), terms, options.weights);
  return find_boundaries(totals, doc, options.clustering_word_limit);
}

Segmentation segment(const Document& doc, const Lexicon& lexicon, const SegmenterOptions& options) {
  const auto terms = extract_terms(doc, lexicon);
  return segment(doc, terms, options);
}

}  // namespace linseg

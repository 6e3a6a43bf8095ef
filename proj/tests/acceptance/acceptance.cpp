// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "linseg/chisq.hpp"
#include "linseg/evaluation.hpp"
#include "linseg/segmenter.hpp"
#include "linseg/significance.hpp"
#include "linseg/trainer.hpp"
#include "oracles.hpp"
#include "planted.hpp"

using namespace linseg;
namespace t = linseg::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double time_limit_s;
  std::function<Outcome()> body;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Outcome zero_sum_invariant() {
  Outcome o;
  std::mt19937_64 rng(1001);
  const WeightConfig w;
  std::size_t checked = 0;
  for (int doc = 0; doc < 1000; ++doc) {
    const auto layout = t::random_layout(rng, 30, 20);
    for (const auto& term : layout.terms) {
      const auto& kw = w[term.kind];
      auto v = assign_weights(label_paragraphs(build_links(term, kw.link), layout.paragraphs), kw, term.key);
      zero_sum(v);
      bool any_no_link = false;
      for (bool b : v.no_link) any_no_link = any_no_link || b;
      if (!any_no_link) continue;
      Score sum = 0;
      for (const auto& s : v.normalized) sum += s;
      ++checked;
      if (sum != 0) fail(o, "term " + term.key + " in doc " + std::to_string(doc) + " sums to " + exact_string(sum));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " term vectors sum to exactly 0";
  return o;
}

Outcome table_one() {
  Outcome o;
  const WeightConfig c;
  const Score expected[3][3] = {{10, 8, -3}, {10, 8, -3}, {1, 13, -1}};
  const int links[3] = {8, 4, 0};
  int ok = 0;
  for (int k = 0; k < 3; ++k) {
    const auto& w = c[kAllTermKinds[k]];
    ok += w.front == expected[k][0];
    ok += w.rear == expected[k][1];
    ok += w.during == expected[k][2];
    ok += w.link == links[k];
  }
  if (ok != 12) fail(o, std::to_string(ok) + "/12 values match");
  else o.detail = "12/12 values match";
  return o;
}

Outcome monte_carlo_vs_enumeration() {
  Outcome o;
  std::mt19937_64 rng(1002);
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t P = 2; P <= 12; ++P) {
    for (int rep = 0; rep < 4; ++rep) {
      GapSet gold;
      for (std::size_t g = 1; g < P; ++g)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) gold.push_back(g);
      const auto mc = monte_carlo_baseline(P, gold, {0.33, 10000, kDefaultSeed + P * 10 + rep});
      const auto exact = t::enumerate_bernoulli(P, gold, 0.33);
      const double dp = std::fabs(mc.precision.mean - exact.precision);
      const double dr = std::fabs(mc.recall.mean - exact.recall);
      worst = std::max({worst, dp, dr});
      ++cases;
      if (dp > 0.01 || dr > 0.01) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "P=%zu |gold|=%zu off by %.4f / %.4f", P, gold.size(), dp, dr);
        fail(o, buf);
      }
    }
  }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu cases, max deviation %.4f", cases, worst);
    o.detail = buf;
  }
  return o;
}

Outcome hypergeometric_identity() {
  Outcome o;
  std::size_t checked = 0, enumerated = 0;
  for (std::size_t n = 1; n <= 20; ++n) {
    const std::size_t P = n + 1;
    for (std::size_t r = 1; r <= n; ++r) {
      const auto hg = hypergeometric_baseline(P, r);
      const double expected = double(r) / double(n);
      ++checked;
      if (hg.precision != expected || hg.recall != expected || hg.precision != hg.recall)
        fail(o, "P=" + std::to_string(P) + " r=" + std::to_string(r));
      if (P <= 12) {
        const auto e = t::enumerate_draws(P, r);
        ++enumerated;
        if (std::fabs(e.precision - hg.precision) > 1e-12 || std::fabs(e.recall - hg.recall) > 1e-12)
          fail(o, "enumeration differs at P=" + std::to_string(P) + " r=" + std::to_string(r));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " identities, " + std::to_string(enumerated) + " enumerated";
  return o;
}

Outcome significance_range() {
  Outcome o;
  std::mt19937_64 rng(1003);
  std::size_t singles = 0;
  for (int round = 0; round < 1000; ++round) {
    const auto layout = t::random_layout(rng, 20, 12);
    GapSet gaps;
    const int density = std::uniform_int_distribution<int>(0, 4)(rng);
    for (std::size_t g = 1; g < layout.paragraphs; ++g)
      if (density > 0 && std::uniform_int_distribution<int>(0, density)(rng) == 0) gaps.push_back(g);
    const Segmentation seg("r", layout.paragraphs, gaps);
    const auto a = signify(seg, layout.terms);
    Score max_tf = 0, max_cov = 0;
    for (const auto& s : a) {
      if (s.importance < 0 || s.importance > 2) fail(o, "importance out of range in round " + std::to_string(round));
      max_tf = std::max(max_tf, s.tf_sf_raw);
      max_cov = std::max(max_cov, s.coverage_raw);
    }
    for (const auto& s : a) {
      if (s.tf_sf_raw == max_tf && max_tf > 0 && s.tf_sf_norm != 1) fail(o, "tf_sf argmax not 1");
      if (s.coverage_raw == max_cov && max_cov > 0 && s.coverage_norm != 1) fail(o, "coverage argmax not 1");
    }
    bool has_np = false;
    for (const auto& term : layout.terms) has_np = has_np || term.kind != TermKind::Pronoun;
    if (a.size() == 1 && has_np) {
      ++singles;
      if (a[0].importance != 2) fail(o, "single segment importance " + exact_string(a[0].importance));
    }
  }
  if (o.pass) o.detail = "1000 segmentations, " + std::to_string(singles) + " single-segment at exactly 2";
  return o;
}

Outcome coverage_harmonic() {
  Outcome o;
  for (std::size_t k = 1; k <= 10; ++k) {
    GapSet gaps;
    for (std::size_t g = 1; g < k; ++g) gaps.push_back(g);
    const Segmentation seg("h", k, gaps);
    Term term;
    term.key = "x";
    for (std::size_t p = 0; p < k; ++p) term.occurrences.push_back({p, p, Span{p, p + 1}});
    if (k == 1) term.occurrences.push_back({1, 0, Span{1, 2}});
    Score expected = 0;
    for (std::size_t i = 1; i <= k; ++i) expected += Score(1, static_cast<long>(i));
    for (std::size_t s = 0; s < k; ++s)
      if (coverage_raw(seg, s, std::vector{term}) != expected) fail(o, "k=" + std::to_string(k));
  }
  if (harmonic(3) != Score(11, 6)) fail(o, "H(3) = " + exact_string(harmonic(3)));
  if (o.pass) o.detail = "H(1..10) exact, H(3) = 11/6";
  return o;
}

Outcome agreement_stats() {
  Outcome o;
  const JudgmentSet unanimous{"u", 8, {{"a", {2, 5}}, {"b", {2, 5}}, {"c", {2, 5}}, {"d", {2, 5}}}};
  const auto c = cochran_q(unanimous);
  if (c.q != 0 || c.p_value != 1 || kappa(unanimous) != 1) fail(o, "unanimous case");

  double worst = 0;
  for (double df = 1; df <= 10; df += 1)
    for (double q = 0.25; q <= 30; q += 0.25)
      worst = std::max(worst, std::fabs(chi_square_survival(q, df) - t::chi_square_tail_quadrature(q, df)));
  if (worst > 1e-10) fail(o, "chi-square tail off by " + std::to_string(worst));

  const JudgmentSet hand{"h", 5, {{"a", {1, 2, 3}}, {"b", {1, 3}}, {"c", {3}}}};
  const std::vector<std::vector<int>> rows{{1, 1, 0}, {1, 0, 0}, {1, 1, 1}, {0, 0, 0}};
  const auto h = cochran_q(hand);
  const double brute = t::cochran_bruteforce(rows);
  if (std::fabs(h.q - brute) > 1e-12) fail(o, "hand case Q " + std::to_string(h.q) + " vs " + std::to_string(brute));
  if (std::fabs(h.p_value - t::chi_square_tail_quadrature(brute, 2)) > 1e-10) fail(o, "hand case p");
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "Q=%.4f p=%.6f on the hand case; tail max error %.2e", h.q, h.p_value, worst);
    o.detail = buf;
  }
  return o;
}

Outcome clustering_rule() {
  Outcome o;
  std::mt19937_64 rng(1004);
  for (int round = 0; round < 10000; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    std::vector<Score> totals;
    std::vector<double> d;
    for (std::size_t i = 0; i < n; ++i) {
      const int v = std::uniform_int_distribution<int>(-20, 20)(rng);
      const int den = std::uniform_int_distribution<int>(1, 6)(rng);
      totals.emplace_back(v, den);
      d.push_back(double(v) / den);
    }
    const auto s = find_boundaries(totals, "c", 100).gaps();
    const auto l = find_boundaries(totals, "c", 100000).gaps();
    if (!std::includes(l.begin(), l.end(), s.begin(), s.end())) fail(o, "short gaps not within long gaps");
    // One gap per positive run, at its (earliest) maximum.
    std::size_t runs = 0;
    for (std::size_t p = 1; p < n; ++p)
      if (totals[p] > 0 && (p == 1 || !(totals[p - 1] > 0))) ++runs;
    if (s.size() != runs) fail(o, "cluster count mismatch in round " + std::to_string(round));
    for (std::size_t g : s) {
      std::size_t a = g, b = g;
      while (a > 1 && totals[a - 1] > 0) --a;
      while (b + 1 < n && totals[b + 1] > 0) ++b;
      for (std::size_t p = a; p <= b; ++p)
        if (totals[p] > totals[g] || (totals[p] == totals[g] && p < g)) fail(o, "gap not at cluster maximum");
    }
    if (s != t::reference_gaps(d, true) || l != t::reference_gaps(d, false)) fail(o, "differs from reference rule");
  }
  if (o.pass) o.detail = "10000 vectors";
  return o;
}

struct PlantedRun {
  std::vector<t::PlantedDocument> docs;
  std::vector<TrainingDocument> corpus;
};

const PlantedRun& planted() {
  static const PlantedRun run = [] {
    PlantedRun r;
    r.docs = t::planted_corpus(16, 20);
    r.corpus = t::training_corpus(r.docs);
    return r;
  }();
  return run;
}

Outcome trainer_recovery() {
  Outcome o;
  const auto result = train_weights(planted().corpus, TrainerGrid::defaults());
  for (TermKind k : kAllTermKinds)
    if (result.settings_per_kind.at(k) != 225) fail(o, "grid size for " + std::string(to_string(k)));
  std::size_t full_rows[3] = {0, 0, 0};
  for (const auto& e : result.log)
    if (e.stage == "full") ++full_rows[static_cast<int>(e.kind)];
  for (std::size_t rows : full_rows)
    if (rows != 225) fail(o, "log rows per kind " + std::to_string(rows));
  const double heldout = result.heldout_f1();
  char buf[128];
  std::snprintf(buf, sizeof buf, "held-out F1 %.4f over %zu folds, 225 settings per kind", heldout,
                result.folds.size());
  if (heldout < 0.9) fail(o, buf);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome end_to_end() {
  Outcome o;
  NamedSystem sys{"segmenter", {}};
  std::vector<JudgmentSet> judged;
  for (std::size_t i = 0; i < planted().docs.size(); ++i) {
    const auto& d = planted().corpus[i];
    sys.documents.emplace_back(d.doc.id(), segment(d.doc, d.terms, SegmenterOptions{}).gaps());
    judged.push_back(planted().docs[i].judgments);
  }
  ScoreOptions opts;
  opts.monte_carlo = true;
  opts.hypergeometric = true;
  const auto report = score_corpus(std::vector{sys}, judged, opts);
  const auto& s = report.systems[0];
  const auto& mc = *report.monte_carlo;
  const auto& hg = *report.hypergeometric;
  char buf[200];
  std::snprintf(buf, sizeof buf, "segmenter %.3f/%.3f, monte carlo %.3f/%.3f, hypergeometric %.3f/%.3f",
                s.precision.mean, s.recall.mean, mc.precision.mean, mc.recall.mean, hg.precision.mean,
                hg.recall.mean);
  if (!(s.precision.mean > mc.precision.mean && s.precision.mean > hg.precision.mean &&
        s.recall.mean > mc.recall.mean && s.recall.mean > hg.recall.mean))
    fail(o, buf);
  if (o.pass) o.detail = buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"zero-sum invariant (1000 documents)", 10, zero_sum_invariant},
      {"default weight table (12 values)", 0, table_one},
      {"monte carlo within 0.01 of enumeration (P <= 12)", 30, monte_carlo_vs_enumeration},
      {"hypergeometric identity (P - 1 <= 20)", 0, hypergeometric_identity},
      {"significance range and normalization", 0, significance_range},
      {"coverage harmonic H(k), k <= 10", 0, coverage_harmonic},
      {"agreement statistics", 0, agreement_stats},
      {"local-maxima clustering (10000 vectors)", 0, clustering_rule},
      {"trainer recovery on the planted corpus", 300, trainer_recovery},
      {"segmenter beats both baselines", 0, end_to_end},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) fail(o, "took " + std::to_string(secs) + " s");
    std::printf("%s  %-52s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), secs, o.detail.c_str());
    failures += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

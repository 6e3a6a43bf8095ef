#include "linseg/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "linseg/chisq.hpp"
#include "linseg/errors.hpp"

namespace linseg {

MeanSd mean_sd(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

double f1(const PrecisionRecall& pr) {
  const double denom = pr.precision + pr.recall;
  return denom > 0.0 ? 2.0 * pr.precision * pr.recall / denom : 0.0;
}

GoldStandard majority_gold(const JudgmentSet& judgments) {
  std::map<std::size_t, std::size_t> votes;
  for (const auto& judge : judgments.judges)
    for (std::size_t g : judge.gaps) ++votes[g];
  GoldStandard gold{judgments.doc_id, judgments.paragraph_count, {}};
  const std::size_t k = judgments.judges.size();
  for (const auto& [gap, count] : votes)
    if (2 * count > k) gold.gaps.push_back(gap);
  return gold;
}

PrecisionRecall precision_recall(const GapSet& proposed, const GapSet& gold) {
  std::size_t hits = 0;
  auto a = proposed.begin();
  auto b = gold.begin();
  while (a != proposed.end() && b != gold.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++hits;
      ++a;
      ++b;
    }
  }
  PrecisionRecall pr;
  if (proposed.empty()) {
    pr.precision = gold.empty() ? 1.0 : 0.0;
  } else {
    pr.precision = static_cast<double>(hits) / static_cast<double>(proposed.size());
  }
  pr.recall = gold.empty() ? 1.0 : static_cast<double>(hits) / static_cast<double>(gold.size());
  return pr;
}

PrecisionRecall hypergeometric_baseline(std::size_t paragraph_count, std::size_t gold_count) {
  if (paragraph_count < 2 || gold_count == 0) return {0.0, 0.0};
  if (gold_count > paragraph_count - 1)
    throw std::invalid_argument("gold boundary count exceeds the number of gaps");
  // E[hits] = k r / (P - 1) with k = r draws, so hits / k = hits / r = r / (P - 1).
  const double rate = static_cast<double>(gold_count) / static_cast<double>(paragraph_count - 1);
  return {rate, rate};
}

namespace {

// Row i of the mark matrix is gap i + 1; column j is judge j.
std::vector<std::vector<int>> mark_matrix(const JudgmentSet& js) {
  const std::size_t gaps = js.paragraph_count > 0 ? js.paragraph_count - 1 : 0;
  std::vector<std::vector<int>> m(gaps, std::vector<int>(js.judges.size(), 0));
  for (std::size_t j = 0; j < js.judges.size(); ++j) {
    for (std::size_t g : js.judges[j].gaps) {
      if (g < 1 || g > gaps)
        throw BoundaryMismatch("judge '" + js.judges[j].name + "' marks gap " + std::to_string(g) +
                               " outside [1, " + std::to_string(gaps) + "] in '" + js.doc_id + "'");
      m[g - 1][j] = 1;
    }
  }
  return m;
}

void require_two_judges(const JudgmentSet& js) {
  if (js.judges.size() < 2) throw std::invalid_argument("agreement statistics need at least two judges");
}

}  // namespace

CochranResult cochran_q(const JudgmentSet& judgments) {
  require_two_judges(judgments);
  const auto m = mark_matrix(judgments);
  const std::size_t k = judgments.judges.size();
  std::vector<double> column(k, 0.0);
  double total = 0.0;
  double row_sq = 0.0;
  for (const auto& row : m) {
    double r = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      r += row[j];
      column[j] += row[j];
    }
    total += r;
    row_sq += r * r;
  }
  double col_sq = 0.0;
  for (double c : column) col_sq += c * c;

  CochranResult out;
  out.dof = k - 1;
  const double kd = static_cast<double>(k);
  const double denom = kd * total - row_sq;
  if (denom == 0.0) {
    out.degenerate = true;
    return out;
  }
  out.q = (kd - 1.0) * (kd * col_sq - total * total) / denom;
  out.p_value = chi_square_survival(out.q, static_cast<double>(out.dof));
  return out;
}

double pairwise_kappa(const GapSet& a, const GapSet& b, std::size_t paragraph_count) {
  const std::size_t n = paragraph_count > 0 ? paragraph_count - 1 : 0;
  if (n == 0) return 1.0;
  std::size_t both = 0;
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] < b[ib]) {
      ++ia;
    } else if (b[ib] < a[ia]) {
      ++ib;
    } else {
      ++both;
      ++ia;
      ++ib;
    }
  }
  const double nd = static_cast<double>(n);
  const double neither = nd - static_cast<double>(a.size() + b.size() - both);
  const double agree = (static_cast<double>(both) + neither) / nd;
  const double pa = static_cast<double>(a.size()) / nd;
  const double pb = static_cast<double>(b.size()) / nd;
  const double chance = pa * pb + (1.0 - pa) * (1.0 - pb);
  if (chance >= 1.0) return agree >= 1.0 ? 1.0 : 0.0;
  return (agree - chance) / (1.0 - chance);
}

double kappa(const JudgmentSet& judgments) {
  require_two_judges(judgments);
  mark_matrix(judgments);  // range check
  double sum = 0.0;
  std::size_t pairs = 0;
  const auto& js = judgments.judges;
  for (std::size_t i = 0; i < js.size(); ++i) {
    for (std::size_t j = i + 1; j < js.size(); ++j) {
      sum += pairwise_kappa(js[i].gaps, js[j].gaps, judgments.paragraph_count);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void check_gaps(const GapSet& gaps, const JudgmentSet& js, const std::string& who) {
  for (std::size_t g : gaps)
    if (g < 1 || g + 1 > js.paragraph_count)
      throw BoundaryMismatch(who + " marks gap " + std::to_string(g) + " but '" + js.doc_id + "' has " +
                             std::to_string(js.paragraph_count) + " paragraphs");
}

template <typename T>
MeanSd summarize(const std::vector<std::pair<std::string, T>>& docs, auto get) {
  std::vector<double> v;
  v.reserve(docs.size());
  for (const auto& d : docs) v.push_back(get(d.second));
  return mean_sd(v);
}

GapSet normalized(GapSet g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

}  // namespace

EvalReport score_corpus(std::span<const NamedSystem> systems, std::span<const JudgmentSet> judgments,
                        const ScoreOptions& options) {
  std::map<std::string, const JudgmentSet*> by_id;
  for (const auto& js : judgments) by_id[js.doc_id] = &js;

  std::map<std::string, GoldStandard> gold;
  auto gold_of = [&](const JudgmentSet& js) -> const GoldStandard& {
    auto it = gold.find(js.doc_id);
    if (it == gold.end()) {
      for (const auto& j : js.judges) check_gaps(j.gaps, js, "judge '" + j.name + "'");
      it = gold.emplace(js.doc_id, majority_gold(js)).first;
    }
    return it->second;
  };

  EvalReport report;
  std::vector<const JudgmentSet*> covered;
  for (const auto& sys : systems) {
    SystemReport sr{sys.name, {}, {}, {}};
    for (const auto& [doc, gaps] : sys.documents) {
      const auto it = by_id.find(doc);
      if (it == by_id.end()) throw MissingJudgments(doc);
      const GapSet proposed = normalized(gaps);
      check_gaps(proposed, *it->second, "system '" + sys.name + "'");
      sr.documents.emplace_back(doc, precision_recall(proposed, gold_of(*it->second).gaps));
      if (std::find(covered.begin(), covered.end(), it->second) == covered.end()) covered.push_back(it->second);
    }
    std::sort(sr.documents.begin(), sr.documents.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    sr.precision = summarize(sr.documents, [](const PrecisionRecall& pr) { return pr.precision; });
    sr.recall = summarize(sr.documents, [](const PrecisionRecall& pr) { return pr.recall; });
    report.systems.push_back(std::move(sr));
  }
  if (systems.empty())
    for (const auto& [id, js] : by_id) covered.push_back(js);
  std::sort(covered.begin(), covered.end(),
            [](const JudgmentSet* a, const JudgmentSet* b) { return a->doc_id < b->doc_id; });
  for (const auto* js : covered) gold_of(*js);

  const long n = static_cast<long>(covered.size());
  if (options.monte_carlo) {
    BaselineReport br;
    br.documents.resize(covered.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      const JudgmentSet& js = *covered[i];
      MonteCarloOptions mc = options.mc;
      mc.seed = trial_seed(options.mc.seed, fnv1a(js.doc_id));
      br.documents[i] = {js.doc_id, monte_carlo_baseline(js.paragraph_count, gold.at(js.doc_id).gaps, mc)};
    }
    br.precision = summarize(br.documents, [](const BaselineScores& s) { return s.precision.mean; });
    br.recall = summarize(br.documents, [](const BaselineScores& s) { return s.recall.mean; });
    report.monte_carlo = std::move(br);
  }

  if (options.hypergeometric) {
    BaselineReport br;
    for (const auto* js : covered) {
      const auto pr = hypergeometric_baseline(js->paragraph_count, gold.at(js->doc_id).gaps.size());
      br.documents.push_back({js->doc_id, BaselineScores{{pr.precision, 0.0}, {pr.recall, 0.0}}});
    }
    br.precision = summarize(br.documents, [](const BaselineScores& s) { return s.precision.mean; });
    br.recall = summarize(br.documents, [](const BaselineScores& s) { return s.recall.mean; });
    report.hypergeometric = std::move(br);
  }

  if (options.agreement) {
    AgreementReport ar;
    ar.judges.name = "judges";
    for (const auto* js : covered) {
      if (js->judges.size() < 2) continue;
      ar.cochran.emplace_back(js->doc_id, cochran_q(*js));
      ar.kappa.emplace_back(js->doc_id, kappa(*js));
      std::vector<double> p, r;
      for (const auto& judge : js->judges) {
        const auto pr = precision_recall(normalized(judge.gaps), gold.at(js->doc_id).gaps);
        p.push_back(pr.precision);
        r.push_back(pr.recall);
      }
      ar.judges.documents.emplace_back(js->doc_id, PrecisionRecall{mean_sd(p).mean, mean_sd(r).mean});
    }
    ar.kappa_summary = summarize(ar.kappa, [](double k) { return k; });
    ar.judges.precision = summarize(ar.judges.documents, [](const PrecisionRecall& pr) { return pr.precision; });
    ar.judges.recall = summarize(ar.judges.documents, [](const PrecisionRecall& pr) { return pr.recall; });
    report.agreement = std::move(ar);
  }
  return report;
}

namespace {

std::string fixed4(double v) {
  if (std::fabs(v) < 5e-5) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void add_system(std::vector<std::pair<std::string, std::string>>& rows, const SystemReport& s) {
  for (const auto& [doc, pr] : s.documents) {
    rows.emplace_back(s.name + "." + doc + ".precision", fixed4(pr.precision));
    rows.emplace_back(s.name + "." + doc + ".recall", fixed4(pr.recall));
  }
  rows.emplace_back(s.name + ".total.precision", fixed4(s.precision.mean));
  rows.emplace_back(s.name + ".total.precision.sd", fixed4(s.precision.sd));
  rows.emplace_back(s.name + ".total.recall", fixed4(s.recall.mean));
  rows.emplace_back(s.name + ".total.recall.sd", fixed4(s.recall.sd));
  rows.emplace_back(s.name + ".total.documents", std::to_string(s.documents.size()));
}

void add_baseline(std::vector<std::pair<std::string, std::string>>& rows, const std::string& prefix,
                  const BaselineReport& b, bool per_doc_sd) {
  for (const auto& [doc, s] : b.documents) {
    rows.emplace_back(prefix + "." + doc + ".precision", fixed4(s.precision.mean));
    rows.emplace_back(prefix + "." + doc + ".recall", fixed4(s.recall.mean));
    if (per_doc_sd) {
      rows.emplace_back(prefix + "." + doc + ".precision.sd", fixed4(s.precision.sd));
      rows.emplace_back(prefix + "." + doc + ".recall.sd", fixed4(s.recall.sd));
    }
  }
  rows.emplace_back(prefix + ".precision", fixed4(b.precision.mean));
  rows.emplace_back(prefix + ".precision.sd", fixed4(b.precision.sd));
  rows.emplace_back(prefix + ".recall", fixed4(b.recall.mean));
  rows.emplace_back(prefix + ".recall.sd", fixed4(b.recall.sd));
}

}  // namespace

std::vector<std::pair<std::string, std::string>> EvalReport::rows() const {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& s : systems) add_system(rows, s);
  if (monte_carlo) add_baseline(rows, "baseline.mc", *monte_carlo, true);
  if (hypergeometric) add_baseline(rows, "baseline.hg", *hypergeometric, false);
  if (agreement) {
    for (const auto& [doc, c] : agreement->cochran) {
      rows.emplace_back("agreement.q." + doc, fixed4(c.q));
      rows.emplace_back("agreement.q." + doc + ".p", fixed4(c.p_value));
      rows.emplace_back("agreement.q." + doc + ".df", std::to_string(c.dof));
      rows.emplace_back("agreement.q." + doc + ".degenerate", c.degenerate ? "1" : "0");
    }
    for (const auto& [doc, k] : agreement->kappa) rows.emplace_back("agreement.kappa." + doc, fixed4(k));
    rows.emplace_back("agreement.kappa.avg", fixed4(agreement->kappa_summary.mean));
    rows.emplace_back("agreement.kappa.sd", fixed4(agreement->kappa_summary.sd));
    add_system(rows, agreement->judges);
  }
  std::sort(rows.begin(), rows.end());
  rows.insert(rows.begin(), {"report.version", "1"});
  return rows;
}

}  // namespace linseg

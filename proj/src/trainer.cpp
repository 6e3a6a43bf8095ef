#include "linseg/trainer.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "linseg/errors.hpp"
#include "linseg/linking.hpp"
#include "trainer_common.hpp"

namespace linseg {

std::vector<KindWeights> KindGrid::points() const {
  std::vector<KindWeights> out;
  out.reserve(size());
  for (const auto& f : front)
    for (const auto& r : rear)
      for (const auto& d : during)
        for (int l : link) out.push_back(KindWeights{f, r, d, l});
  return out;
}

KindGrid& TrainerGrid::operator[](TermKind k) {
  switch (k) {
    case TermKind::ProperNP: return proper;
    case TermKind::CommonNP: return common;
    case TermKind::Pronoun: return pronoun;
  }
  return common;
}

const KindGrid& TrainerGrid::operator[](TermKind k) const { return const_cast<TrainerGrid&>(*this)[k]; }

namespace {

template <typename T>
void sort_axis(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_axes(KindGrid& g) {
  sort_axis(g.front);
  sort_axis(g.rear);
  sort_axis(g.during);
  sort_axis(g.link);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

TrainerGrid TrainerGrid::defaults() {
  KindGrid g{{2, 6, 10, 14, 18}, {4, 8, 13, 18, 22}, {-5, -3, -1}, {0, 4, 8}};
  sort_axes(g);
  return TrainerGrid{g, g, g};
}

TrainerGrid TrainerGrid::singleton(const WeightConfig& config) {
  TrainerGrid grid;
  for (TermKind k : kAllTermKinds) {
    const KindWeights& w = config[k];
    grid[k] = KindGrid{{w.front}, {w.rear}, {w.during}, {w.link}};
  }
  return grid;
}

TrainerGrid parse_trainer_grid(std::istream& in, const std::string& source) {
  TrainerGrid grid = TrainerGrid::defaults();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    const auto dot = text.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
      throw ParseError(source, line_no, "expected kind.field=v1,v2,...");
    const std::string kind_name = trim(text.substr(0, dot));
    const std::string field = trim(text.substr(dot + 1, eq - dot - 1));
    const auto kind = parse_term_kind(kind_name);
    if (!kind) throw ParseError(source, line_no, "unknown term kind '" + kind_name + "'");

    std::vector<Score> values;
    std::stringstream list(text.substr(eq + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      Score v;
      if (!parse_score(trim(item), v)) throw ParseError(source, line_no, "bad number '" + trim(item) + "'");
      values.push_back(v);
    }
    if (values.empty()) throw ParseError(source, line_no, "empty value list");

    KindGrid& g = grid[*kind];
    if (field == "front") {
      g.front = values;
    } else if (field == "rear") {
      g.rear = values;
    } else if (field == "during") {
      g.during = values;
    } else if (field == "link") {
      g.link.clear();
      for (const auto& v : values) {
        if (denominator(v) != 1 || v < 0 || v > 100000)
          throw ParseError(source, line_no, "link length must be a non-negative integer");
        g.link.push_back(static_cast<int>(numerator(v)));
      }
    } else {
      throw ParseError(source, line_no, "unknown field '" + field + "'");
    }
    sort_axes(g);
  }
  return grid;
}

TrainerGrid load_trainer_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open grid file");
  return parse_trainer_grid(in, path.string());
}

std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::F1: return "f1";
    case Objective::Precision: return "precision";
    case Objective::Recall: return "recall";
  }
  return "f1";
}

std::optional<Objective> parse_objective(std::string_view name) {
  for (Objective o : {Objective::F1, Objective::Precision, Objective::Recall})
    if (to_string(o) == name) return o;
  return std::nullopt;
}

double objective_value(Objective o, const PrecisionRecall& pr) {
  switch (o) {
    case Objective::F1: return f1(pr);
    case Objective::Precision: return pr.precision;
    case Objective::Recall: return pr.recall;
  }
  return f1(pr);
}

std::size_t fold_of(std::size_t index, std::size_t documents, std::size_t folds) {
  return documents == 0 ? 0 : index * folds / documents;
}

PrecisionRecall TrainingResult::heldout() const {
  if (folds.empty()) return {};
  PrecisionRecall out;
  for (const auto& f : folds) {
    out.precision += f.heldout.precision;
    out.recall += f.heldout.recall;
  }
  out.precision /= static_cast<double>(folds.size());
  out.recall /= static_cast<double>(folds.size());
  return out;
}

double TrainingResult::heldout_f1() const {
  if (folds.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& f : folds) sum += f.heldout_f1;
  return sum / static_cast<double>(folds.size());
}

std::string format_training_log(const TrainingResult& result) {
  std::ostringstream out;
  out << "# stage\tkind\tfront\trear\tduring\tlink\tscore\n";
  for (const auto& e : result.log) {
    char score[32];
    std::snprintf(score, sizeof score, "%.4f", e.score);
    out << e.stage << '\t' << to_string(e.kind) << '\t' << exact_string(e.weights.front) << '\t'
        << exact_string(e.weights.rear) << '\t' << exact_string(e.weights.during) << '\t' << e.weights.link << '\t'
        << score << '\n';
  }
  for (const auto& [kind, n] : result.settings_per_kind)
    out << "# settings\t" << to_string(kind) << '\t' << n << '\n';
  return out.str();
}

namespace {

// Zero-summed paragraph scores of one term type are linear in its three
// weights: totals = front * F + rear * R + during * D. The basis vectors are
// fixed once the link length is, so grid points only pay for nine
// multiply-adds per paragraph.
struct RoleBasis {
  std::vector<Score> front;
  std::vector<Score> rear;
  std::vector<Score> during;
};

RoleBasis make_basis(std::span<const Term> terms, TermKind kind, int link, std::size_t P) {
  RoleBasis b{std::vector<Score>(P), std::vector<Score>(P), std::vector<Score>(P)};
  for (const Term& t : terms) {
    if (t.kind != kind) continue;
    const auto links = build_links(t, link);
    const auto roles = label_paragraphs(links, P);
    long f = 0, r = 0, d = 0, unlinked = 0;
    for (const auto& rc : roles) {
      f += rc.front;
      r += rc.rear;
      d += rc.during;
      unlinked += rc.no_link();
    }
    for (std::size_t p = 0; p < P; ++p) {
      if (!roles[p].no_link()) {
        b.front[p] += roles[p].front;
        b.rear[p] += roles[p].rear;
        b.during[p] += roles[p].during;
      } else {
        b.front[p] -= Score(f, unlinked);
        b.rear[p] -= Score(r, unlinked);
        b.during[p] -= Score(d, unlinked);
      }
    }
  }
  return b;
}

struct PreparedDocument {
  const TrainingDocument* source = nullptr;
  std::map<std::pair<TermKind, int>, RoleBasis> basis;
};

PrecisionRecall evaluate(const PreparedDocument& pd, const WeightConfig& config, std::size_t word_limit) {
  const std::size_t P = pd.source->doc.paragraph_count();
  std::vector<Score> totals(P);
  for (TermKind k : kAllTermKinds) {
    const KindWeights& w = config[k];
    const RoleBasis& b = pd.basis.at({k, w.link});
    for (std::size_t p = 0; p < P; ++p) totals[p] += w.front * b.front[p] + w.rear * b.rear[p] + w.during * b.during[p];
  }
  const auto seg = find_boundaries(totals, pd.source->doc, word_limit);
  return precision_recall(seg.gaps(), pd.source->gold);
}

}  // namespace

TrainingResult train_weights(std::span<const TrainingDocument> corpus, const TrainerGrid& grid,
                             const TrainerOptions& options) {
  std::vector<PreparedDocument> prepared(corpus.size());
  const long n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    PreparedDocument& pd = prepared[i];
    pd.source = &corpus[i];
    const std::size_t P = corpus[i].doc.paragraph_count();
    for (TermKind k : kAllTermKinds) {
      std::set<int> links(grid[k].link.begin(), grid[k].link.end());
      links.insert(options.base[k].link);
      for (int l : links) pd.basis.emplace(std::pair{k, l}, make_basis(corpus[i].terms, k, l, P));
    }
  }

  auto search = [&](const std::vector<std::size_t>& docs, const WeightConfig& base, TermKind kind,
                    const std::vector<KindWeights>& points) {
    std::vector<double> scores(points.size());
    const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      WeightConfig config = base;
      config[kind] = points[i];
      double sum = 0.0;
      for (std::size_t d : docs) sum += objective_value(options.objective, evaluate(prepared[d], config, options.clustering_word_limit));
      scores[i] = sum / static_cast<double>(docs.size());
    }
    return scores;
  };

  auto score_docs = [&](const std::vector<std::size_t>& docs, const WeightConfig& config) {
    std::vector<PrecisionRecall> out;
    for (std::size_t d : docs) out.push_back(evaluate(prepared[d], config, options.clustering_word_limit));
    return out;
  };

  return detail::run_training(corpus, grid, options, search, score_docs);
}

}  // namespace linseg

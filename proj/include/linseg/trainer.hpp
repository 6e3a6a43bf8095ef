#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linseg/corpus.hpp"
#include "linseg/evaluation.hpp"
#include "linseg/segmentation.hpp"
#include "linseg/terms.hpp"
#include "linseg/weighting.hpp"

namespace linseg {

/// Candidate values for one term type. Axes are kept sorted ascending, so
/// points() enumerates settings in lexicographic (front, rear, during, link)
/// order.
struct KindGrid {
  std::vector<Score> front;
  std::vector<Score> rear;
  std::vector<Score> during;
  std::vector<int> link;

  std::size_t size() const noexcept { return front.size() * rear.size() * during.size() * link.size(); }
  std::vector<KindWeights> points() const;
};

struct TrainerGrid {
  KindGrid proper;
  KindGrid common;
  KindGrid pronoun;

  KindGrid& operator[](TermKind k);
  const KindGrid& operator[](TermKind k) const;

  /// 5 x 5 x 3 x 3 = 225 settings per term type bracketing the default weights.
  static TrainerGrid defaults();
  /// A grid whose only point is `config`.
  static TrainerGrid singleton(const WeightConfig& config);
};

/// Reads `kind.field=v1,v2,...` lines; fields left out keep the default axis.
TrainerGrid parse_trainer_grid(std::istream& in, const std::string& source = "<grid>");
TrainerGrid load_trainer_grid(const std::filesystem::path& path);

enum class Objective { F1, Precision, Recall };

std::string_view to_string(Objective o);
std::optional<Objective> parse_objective(std::string_view name);
double objective_value(Objective o, const PrecisionRecall& pr);

struct TrainingDocument {
  Document doc;
  std::vector<Term> terms;
  GapSet gold;
};

struct TrainerOptions {
  std::size_t folds = 4;
  Objective objective = Objective::F1;
  std::size_t clustering_word_limit = kDefaultClusteringWordLimit;
  /// Starting point; each term type is searched with the others held at the
  /// best values found so far.
  WeightConfig base;
};

struct GridEvaluation {
  std::string stage;
  TermKind kind = TermKind::ProperNP;
  KindWeights weights;
  double score = 0.0;
};

struct FoldResult {
  std::size_t fold = 0;
  std::size_t train_documents = 0;
  std::size_t test_documents = 0;
  WeightConfig config;
  double train_score = 0.0;
  PrecisionRecall heldout;
  double heldout_f1 = 0.0;
};

struct TrainingResult {
  WeightConfig best;
  double best_score = 0.0;
  std::vector<FoldResult> folds;
  std::vector<GridEvaluation> log;
  std::map<TermKind, std::size_t> settings_per_kind;

  /// Mean held-out precision, recall and F1 across folds.
  PrecisionRecall heldout() const;
  double heldout_f1() const;
};

/// Fold of document i among n: contiguous blocks, i * folds / n.
std::size_t fold_of(std::size_t index, std::size_t documents, std::size_t folds);

/// Cross-validated grid search. For every fold the grid is searched on the
/// other folds and the winner is scored on the held-out fold; the returned
/// configuration is the winner on the whole corpus. Term types are searched
/// one after another (proper, common, pronoun), each over its full grid, and
/// ties go to the lexicographically smallest setting. Grid points run under
/// OpenMP. Throws InsufficientCorpus when there are fewer documents than
/// folds.
TrainingResult train_weights(std::span<const TrainingDocument> corpus, const TrainerGrid& grid,
                             const TrainerOptions& options = {});

/// Tab-separated log rows: stage, kind, front, rear, during, link, score.
std::string format_training_log(const TrainingResult& result);

namespace serial {

/// Single-threaded reference that segments every document through the full
/// pipeline for every grid point. Agrees with linseg::train_weights exactly.
TrainingResult train_weights(std::span<const TrainingDocument> corpus, const TrainerGrid& grid,
                             const TrainerOptions& options = {});

}  // namespace serial

}  // namespace linseg

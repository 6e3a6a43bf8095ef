#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linseg/segmentation.hpp"

namespace linseg {

struct Judge {
  std::string name;
  GapSet gaps;
};

/// Boundary markings from several judges for one document.
struct JudgmentSet {
  std::string doc_id;
  std::size_t paragraph_count = 1;
  std::vector<Judge> judges;
};

struct GoldStandard {
  std::string doc_id;
  std::size_t paragraph_count = 1;
  GapSet gaps;
};

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  friend bool operator==(const PrecisionRecall&, const PrecisionRecall&) = default;
};

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

/// Population mean and standard deviation; empty input gives {0, 0}.
MeanSd mean_sd(std::span<const double> values);

/// Harmonic mean of precision and recall; 0 when both are 0.
double f1(const PrecisionRecall& pr);

/// Gaps marked by strictly more than half of the judges.
GoldStandard majority_gold(const JudgmentSet& judgments);

/// Exact-gap matching. Precision is 1 when both sets are empty and 0 when only
/// the proposal is empty; recall is 1 when the gold set is empty.
PrecisionRecall precision_recall(const GapSet& proposed, const GapSet& gold);

inline constexpr std::uint64_t kDefaultSeed = 1998;

struct MonteCarloOptions {
  double probability = 0.33;
  std::size_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
};

struct BaselineScores {
  MeanSd precision;
  MeanSd recall;
};

/// Random segmenter that cuts each of the P - 1 gaps independently with
/// `probability`. Trial t draws from its own generator seeded from (seed, t),
/// and trials are reduced in index order, so the result does not depend on
/// the number of threads. Trials run under OpenMP.
BaselineScores monte_carlo_baseline(std::size_t paragraph_count, const GapSet& gold, const MonteCarloOptions& options);

/// Seed of trial `trial` in a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Gaps picked by one Monte Carlo trial.
GapSet monte_carlo_trial(std::size_t paragraph_count, double probability, std::uint64_t seed);

/// Expected precision and recall of drawing r of the P - 1 gaps uniformly
/// without replacement when r gaps are gold: both equal r / (P - 1).
/// r = 0 gives (0, 0).
PrecisionRecall hypergeometric_baseline(std::size_t paragraph_count, std::size_t gold_count);

struct CochranResult {
  double q = 0.0;
  double p_value = 1.0;
  std::size_t dof = 0;
  /// Every gap was marked by all judges or by none; Q is reported as 0.
  bool degenerate = false;
};

/// Cochran's Q over the judge x gap mark matrix, with a chi-square (k - 1)
/// upper-tail p-value. Needs at least two judges.
CochranResult cochran_q(const JudgmentSet& judgments);

/// Two-judge kappa over the P - 1 gaps with each judge's own mark rate:
/// (Pa - Pe) / (1 - Pe). When Pe = 1 the pair scores 1 if it agrees
/// everywhere and 0 otherwise.
double pairwise_kappa(const GapSet& a, const GapSet& b, std::size_t paragraph_count);

/// Mean pairwise kappa over all judge pairs. Needs at least two judges.
double kappa(const JudgmentSet& judgments);

/// A system's proposed gaps per document.
struct NamedSystem {
  std::string name;
  std::vector<std::pair<std::string, GapSet>> documents;
};

struct SystemReport {
  std::string name;
  std::vector<std::pair<std::string, PrecisionRecall>> documents;
  MeanSd precision;
  MeanSd recall;
};

struct BaselineReport {
  std::vector<std::pair<std::string, BaselineScores>> documents;
  MeanSd precision;
  MeanSd recall;
};

struct AgreementReport {
  std::vector<std::pair<std::string, CochranResult>> cochran;
  std::vector<std::pair<std::string, double>> kappa;
  MeanSd kappa_summary;
  /// Each judge scored against the majority, averaged over judges per document.
  SystemReport judges;
};

struct ScoreOptions {
  bool monte_carlo = false;
  bool hypergeometric = false;
  bool agreement = false;
  MonteCarloOptions mc;
};

struct EvalReport {
  std::vector<SystemReport> systems;
  std::optional<BaselineReport> monte_carlo;
  std::optional<BaselineReport> hypergeometric;
  std::optional<AgreementReport> agreement;

  /// Stable `key`/`value` rows, sorted by key after `report.version`.
  std::vector<std::pair<std::string, std::string>> rows() const;
};

/// Scores every system against the majority gold of its documents, plus the
/// enabled baselines and agreement statistics over the judged documents the
/// systems cover (all judged documents when there are no systems). Documents
/// are processed in parallel. Throws MissingJudgments when a system names an
/// unjudged document and BoundaryMismatch when a gap exceeds P - 1.
EvalReport score_corpus(std::span<const NamedSystem> systems, std::span<const JudgmentSet> judgments,
                        const ScoreOptions& options);

namespace serial {

/// Single-threaded reference for the Monte Carlo kernel; must agree bit for
/// bit with linseg::monte_carlo_baseline.
BaselineScores monte_carlo_baseline(std::size_t paragraph_count, const GapSet& gold, const MonteCarloOptions& options);

}  // namespace serial

}  // namespace linseg

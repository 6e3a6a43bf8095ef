#pragma once

#include <string>
#include <vector>

#include "linseg/errors.hpp"
#include "linseg/trainer.hpp"

namespace linseg::detail {

// Shared driver for the parallel and serial trainers. `Search` evaluates a
// batch of candidate settings for one kind:
//   std::vector<double> search(const std::vector<std::size_t>& docs,
//                              const WeightConfig& base, TermKind kind,
//                              const std::vector<KindWeights>& points)
// returning the mean objective per point. `Score` returns the per-document
// precision/recall of one configuration.
template <typename Search, typename ScoreDocs>
TrainingResult run_training(std::span<const TrainingDocument> corpus, const TrainerGrid& grid,
                            const TrainerOptions& options, Search search, ScoreDocs score_docs) {
  if (options.folds == 0) throw InsufficientCorpus(corpus.size(), options.folds);
  if (corpus.size() < options.folds) throw InsufficientCorpus(corpus.size(), options.folds);

  TrainingResult result;
  for (TermKind k : kAllTermKinds) result.settings_per_kind[k] = grid[k].size();

  auto select = [&](const std::vector<std::size_t>& docs, const std::string& stage, double& best_score) {
    WeightConfig config = options.base;
    best_score = 0.0;
    for (TermKind kind : kAllTermKinds) {
      const auto points = grid[kind].points();
      if (points.empty()) continue;
      const std::vector<double> scores = search(docs, config, kind, points);
      std::size_t best = 0;
      for (std::size_t i = 0; i < points.size(); ++i) {
        result.log.push_back({stage, kind, points[i], scores[i]});
        if (scores[i] > scores[best]) best = i;
      }
      config[kind] = points[best];
      best_score = scores[best];
    }
    return config;
  };

  if (options.folds > 1) {
    for (std::size_t fold = 0; fold < options.folds; ++fold) {
      std::vector<std::size_t> train, test;
      for (std::size_t i = 0; i < corpus.size(); ++i)
        (fold_of(i, corpus.size(), options.folds) == fold ? test : train).push_back(i);
      FoldResult fr;
      fr.fold = fold + 1;
      fr.train_documents = train.size();
      fr.test_documents = test.size();
      fr.config = select(train, "fold" + std::to_string(fold + 1), fr.train_score);
      const std::vector<PrecisionRecall> prs = score_docs(test, fr.config);
      double p = 0.0, r = 0.0, f = 0.0;
      for (const auto& pr : prs) {
        p += pr.precision;
        r += pr.recall;
        f += f1(pr);
      }
      const double n = static_cast<double>(prs.size());
      fr.heldout = {p / n, r / n};
      fr.heldout_f1 = f / n;
      result.folds.push_back(fr);
    }
  }

  std::vector<std::size_t> all(corpus.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  result.best = select(all, "full", result.best_score);
  return result;
}

}  // namespace linseg::detail

#include "linseg/segmenter.hpp"
#include "linseg/trainer.hpp"
#include "../trainer_common.hpp"

namespace linseg::serial {

namespace {

PrecisionRecall evaluate(const TrainingDocument& td, const WeightConfig& config, std::size_t word_limit) {
  const auto seg = segment(td.doc, td.terms, SegmenterOptions{config, word_limit});
  return precision_recall(seg.gaps(), td.gold);
}

}  // namespace

TrainingResult train_weights(std::span<const TrainingDocument> corpus, const TrainerGrid& grid,
                             const TrainerOptions& options) {
  auto search = [&](const std::vector<std::size_t>& docs, const WeightConfig& base, TermKind kind,
                    const std::vector<KindWeights>& points) {
    std::vector<double> scores;
    scores.reserve(points.size());
    for (const KindWeights& point : points) {
      WeightConfig config = base;
      config[kind] = point;
      double sum = 0.0;
      for (std::size_t d : docs)
        sum += objective_value(options.objective, evaluate(corpus[d], config, options.clustering_word_limit));
      scores.push_back(sum / static_cast<double>(docs.size()));
    }
    return scores;
  };
  auto score_docs = [&](const std::vector<std::size_t>& docs, const WeightConfig& config) {
    std::vector<PrecisionRecall> out;
    for (std::size_t d : docs) out.push_back(evaluate(corpus[d], config, options.clustering_word_limit));
    return out;
  };
  return detail::run_training(corpus, grid, options, search, score_docs);
}

}  // namespace linseg::serial

#include <cmath>
#include <stdexcept>

#include "linseg/evaluation.hpp"

namespace linseg::serial {

BaselineScores monte_carlo_baseline(std::size_t paragraph_count, const GapSet& gold, const MonteCarloOptions& options) {
  if (!(options.probability >= 0.0 && options.probability <= 1.0))
    throw std::invalid_argument("Monte Carlo probability must lie in [0, 1]");
  if (options.trials == 0) throw std::invalid_argument("Monte Carlo needs at least one trial");

  // Two passes in trial order, matching mean_sd's summation order exactly.
  double sum_p = 0.0, sum_r = 0.0;
  std::vector<PrecisionRecall> scores;
  scores.reserve(options.trials);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const GapSet proposed = monte_carlo_trial(paragraph_count, options.probability, trial_seed(options.seed, t));
    scores.push_back(precision_recall(proposed, gold));
    sum_p += scores.back().precision;
    sum_r += scores.back().recall;
  }
  const double n = static_cast<double>(options.trials);
  const double mean_p = sum_p / n, mean_r = sum_r / n;
  double sq_p = 0.0, sq_r = 0.0;
  for (const auto& s : scores) {
    sq_p += (s.precision - mean_p) * (s.precision - mean_p);
    sq_r += (s.recall - mean_r) * (s.recall - mean_r);
  }
  return {{mean_p, std::sqrt(sq_p / n)}, {mean_r, std::sqrt(sq_r / n)}};
}

}  // namespace linseg::serial

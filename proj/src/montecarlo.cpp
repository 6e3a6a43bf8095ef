#include "linseg/evaluation.hpp"

#include <random>
#include <stdexcept>

namespace linseg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(splitmix64(seed) ^ trial); }

GapSet monte_carlo_trial(std::size_t paragraph_count, double probability, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  GapSet gaps;
  for (std::size_t g = 1; g < paragraph_count; ++g) {
    // 53-bit uniform in [0, 1): p = 1 always cuts, p = 0 never does.
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u < probability) gaps.push_back(g);
  }
  return gaps;
}

BaselineScores monte_carlo_baseline(std::size_t paragraph_count, const GapSet& gold, const MonteCarloOptions& options) {
  if (!(options.probability >= 0.0 && options.probability <= 1.0))
    throw std::invalid_argument("Monte Carlo probability must lie in [0, 1]");
  if (options.trials == 0) throw std::invalid_argument("Monte Carlo needs at least one trial");

  const long trials = static_cast<long>(options.trials);
  std::vector<double> precision(options.trials);
  std::vector<double> recall(options.trials);
#pragma omp parallel for schedule(static)
  for (long t = 0; t < trials; ++t) {
    const GapSet proposed =
        monte_carlo_trial(paragraph_count, options.probability, trial_seed(options.seed, static_cast<std::uint64_t>(t)));
    const PrecisionRecall pr = precision_recall(proposed, gold);
    precision[t] = pr.precision;
    recall[t] = pr.recall;
  }
  return {mean_sd(precision), mean_sd(recall)};
}

}  // namespace linseg

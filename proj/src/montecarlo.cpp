#include "twophoton/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace twophoton {

namespace {

std::uint32_t low_word(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t high_word(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

std::uint64_t count_block(std::uint64_t seed, std::size_t term,
                          std::uint64_t block, std::uint64_t trials,
                          double p) {
  std::mt19937_64 engine = mc_block_engine(seed, term, block);
  const std::uint64_t begin = block * kMcBlockSize;
  const std::uint64_t end = std::min(trials, begin + kMcBlockSize);
  std::uint64_t hits = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    hits += mc_unit_interval(engine()) < p ? 1u : 0u;
  }
  return hits;
}

}  // namespace

void McConfig::validate() const {
  if (trials_per_setting < 1) {
    throw std::invalid_argument("McConfig: trials_per_setting must be >= 1");
  }
  settings.validate();
}

double McEstimate::sigma_violation() const {
  if (std_error > 0.0) return statistic_hat / std_error;
  if (statistic_hat > 0.0) return std::numeric_limits<double>::infinity();
  if (statistic_hat < 0.0) return -std::numeric_limits<double>::infinity();
  return 0.0;
}

std::mt19937_64 mc_block_engine(std::uint64_t seed, std::size_t term,
                                std::uint64_t block) {
  std::seed_seq seq{low_word(seed), high_word(seed),
                    static_cast<std::uint32_t>(term), low_word(block),
                    high_word(block)};
  return std::mt19937_64(seq);
}

McCounts simulate_counts(const McConfig& cfg) {
  cfg.validate();

  const std::array<double, 4> dphi = cfg.settings.phase_differences();
  std::array<double, 4> p{};
  for (std::size_t t = 0; t < p.size(); ++t) {
    p[t] = joint_probability(dphi[t], cfg.settings.v, cfg.settings.eta);
  }

  const std::uint64_t trials = cfg.trials_per_setting;
  const std::uint64_t blocks = (trials + kMcBlockSize - 1) / kMcBlockSize;
  const std::size_t tasks = static_cast<std::size_t>(blocks) * p.size();
  std::vector<std::uint64_t> partial(tasks, 0);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t task = next++; task < tasks; task = next++) {
      const std::size_t term = task / blocks;
      const std::uint64_t block = task % blocks;
      partial[task] = count_block(cfg.seed, term, block, trials, p[term]);
    }
  };

  unsigned workers = cfg.workers != 0 ? cfg.workers
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  McCounts counts{};
  for (std::size_t task = 0; task < tasks; ++task) {
    counts[task / blocks] += partial[task];
  }
  return counts;
}

McEstimate estimate_ch(const McConfig& cfg) {
  McEstimate est;
  est.counts = simulate_counts(cfg);
  est.trials = cfg.trials_per_setting;

  const double n = static_cast<double>(est.trials);
  const double star = star_probability(cfg.settings.eta);
  double sum = 0.0;
  double variance = 0.0;
  for (std::size_t t = 0; t < est.counts.size(); ++t) {
    const double p_hat = static_cast<double>(est.counts[t]) / n;
    sum += kChSigns[t] * p_hat;
    variance += p_hat * (1.0 - p_hat) / n;
  }
  sum -= 2.0 * star;
  est.statistic_hat = sum / star;
  est.std_error = std::sqrt(variance) / star;
  return est;
}

}  // namespace twophoton

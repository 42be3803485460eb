#include "ap3/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ap3/counting.hpp"
#include "ap3/io.hpp"
#include "ap3/threading.hpp"
#include "dist_table.hpp"

namespace ap3 {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

mpz_class binomial(std::size_t m, std::size_t n) {
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), m, n);
  return result;
}

// Lexicographic n-combinations of [0,m) whose smallest element is fixed.
template <typename Fn>
void for_each_combination_with_head(std::size_t m, std::size_t n, std::size_t head, Fn&& fn) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = head + i;
  if (idx.back() >= m) return;
  while (true) {
    fn(idx);
    std::size_t i = n - 1;
    while (i >= 1 && idx[i] == m - n + i) --i;
    if (i == 0) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void verify_witnesses(const PointSet& ground, const SearchResult& result) {
  for (const auto& witness : result.witnesses) {
    std::vector<Point> pts;
    pts.reserve(witness.size());
    for (std::size_t i : witness) pts.push_back(ground[i]);
    const PointSet sub(ground.space(), std::move(pts));
    if (count_ap3(sub).total != result.best_value) {
      throw std::logic_error("search witness failed to re-count to the reported maximum");
    }
  }
}

}  // namespace

SearchResult exhaustive_max(const PointSet& ground, std::size_t n, std::uint64_t budget,
                            int threads) {
  const std::size_t m = ground.size();
  if (n > m) throw std::invalid_argument("subset size exceeds ground set size");

  const mpz_class subsets = binomial(m, n);
  if (subsets > budget) {
    throw std::runtime_error("exhaustive search needs a budget of " + subsets.get_str() +
                             " subsets, configured budget is " + std::to_string(budget));
  }

  SearchResult result;
  result.exhaustive = true;
  if (n == 0) {
    result.best_value = 0;
    result.witnesses = {{}};
    result.evaluations = 1;
    return result;
  }

  const auto table = detail::intern_table(detail::build_distance_table(ground));

  struct HeadResult {
    std::uint64_t best = 0;
    std::vector<std::vector<std::size_t>> witnesses;
    std::uint64_t evaluations = 0;
    bool any = false;
  };
  const std::size_t heads = m - n + 1;
  std::vector<HeadResult> per_head(heads);

  const int workers = std::min<int>(resolve_thread_count(threads), static_cast<int>(heads));
  fan_out(workers, [&](int w) {
    for (std::size_t head = w; head < heads; head += workers) {
      HeadResult& local = per_head[head];
      for_each_combination_with_head(m, n, head, [&](const std::vector<std::size_t>& idx) {
        const std::uint64_t value = table.count_subset(idx);
        ++local.evaluations;
        if (!local.any || value > local.best) {
          local.any = true;
          local.best = value;
          local.witnesses.clear();
          local.witnesses.push_back(idx);
        } else if (value == local.best) {
          local.witnesses.push_back(idx);
        }
      });
    }
  });

  bool any = false;
  for (const HeadResult& hr : per_head) {
    result.evaluations += hr.evaluations;
    if (!hr.any) continue;
    if (!any || hr.best > result.best_value) {
      any = true;
      result.best_value = hr.best;
      result.witnesses = hr.witnesses;
    } else if (hr.best == result.best_value) {
      result.witnesses.insert(result.witnesses.end(), hr.witnesses.begin(), hr.witnesses.end());
    }
  }
  // Heads were merged in ascending order and each head's list is already
  // lexicographic, so the full list is too.
  verify_witnesses(ground, result);
  return result;
}

SearchResult stochastic_max(const PointSet& ground, std::size_t n, std::uint64_t seed,
                            const AnnealSchedule& schedule, int restarts, int threads) {
  const std::size_t m = ground.size();
  if (n > m) throw std::invalid_argument("subset size exceeds ground set size");
  if (restarts < 1) throw std::invalid_argument("stochastic search needs at least one restart");

  const auto table = detail::intern_table(detail::build_distance_table(ground));
  const double t0 = schedule.initial_temperature > 0
                        ? schedule.initial_temperature
                        : static_cast<double>(std::max<std::size_t>(n, 1));
  const std::uint64_t proposals =
      schedule.proposals > 0 ? schedule.proposals : 200ULL * std::max<std::size_t>(n, 1) * m;

  struct RestartResult {
    std::uint64_t best = 0;
    std::vector<std::size_t> witness;
    std::uint64_t evaluations = 0;
  };
  std::vector<RestartResult> runs(restarts);

  const int workers = std::min<int>(resolve_thread_count(threads), restarts);
  fan_out(workers, [&](int w) {
    for (int r = w; r < restarts; r += workers) {
      std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
      RestartResult& run = runs[r];

      std::vector<std::size_t> pool(m);
      for (std::size_t i = 0; i < m; ++i) pool[i] = i;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<std::size_t> current(pool.begin(), pool.begin() + n);
      std::vector<std::size_t> outside(pool.begin() + n, pool.end());

      std::uint64_t cur_value = table.count_subset(current);
      run.evaluations = 1;
      run.best = cur_value;
      run.witness = current;
      std::sort(run.witness.begin(), run.witness.end());

      if (n == 0 || outside.empty()) continue;

      double temperature = t0;
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (std::uint64_t p = 0; p < proposals; ++p) {
        const std::size_t ci = rng() % n;
        const std::size_t oi = rng() % outside.size();
        std::swap(current[ci], outside[oi]);
        const std::uint64_t value = table.count_subset(current);
        ++run.evaluations;
        const double delta =
            static_cast<double>(value) - static_cast<double>(cur_value);
        const bool accept =
            delta >= 0 || unit(rng) < std::exp(delta / std::max(temperature, 1e-12));
        if (accept) {
          cur_value = value;
          if (value > run.best) {
            run.best = value;
            run.witness = current;
            std::sort(run.witness.begin(), run.witness.end());
          }
        } else {
          std::swap(current[ci], outside[oi]);
        }
        if ((p + 1) % m == 0) temperature *= schedule.cooling;
      }
    }
  });

  SearchResult result;
  result.seed = seed;
  result.exhaustive = false;
  bool any = false;
  for (const RestartResult& run : runs) {
    result.evaluations += run.evaluations;
    if (!any || run.best > result.best_value) {
      any = true;
      result.best_value = run.best;
      result.witnesses = {run.witness};
    }
  }
  verify_witnesses(ground, result);
  return result;
}

AuditReport bound_audit(const PointSetSampler& sampler, const BoundFn& bound,
                        std::uint64_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AuditReport report;
  report.trials = trials;
  bool have_tightest = false;
  mpz_class best_slack;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const PointSet A = sampler(rng);
    const std::uint64_t total = count_ap3_auto(A).total;
    const std::uint64_t cap = bound(A);
    if (total > cap) {
      ++report.violations;
      report.violating_sets.push_back(write_pointset(A));
    }
    const mpz_class slack = mpz_class(static_cast<unsigned long>(cap)) -
                            mpz_class(static_cast<unsigned long>(total));
    if (!have_tightest || slack < best_slack) {
      have_tightest = true;
      best_slack = slack;
      report.tightest_total = total;
      report.tightest_bound = cap;
      report.tightest_set = write_pointset(A);
    }
  }
  return report;
}

}  // namespace ap3

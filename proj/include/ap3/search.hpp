#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ap3/space.hpp"

namespace ap3 {

// Outcome of maximizing the 3-AP count over n-point subsets of a finite
// ground set. Witnesses are sorted index lists in lexicographic order:
// exhaustive mode returns every optimum, stochastic mode the first-found
// best. Every witness re-counts to best_value (checked at construction).
struct SearchResult {
  std::uint64_t best_value = 0;
  std::vector<std::vector<std::size_t>> witnesses;
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

// Exact maximum over all n-subsets of the ground set. Refuses to start when
// the number of subsets exceeds the budget (std::runtime_error stating the
// required budget). threads = 0 resolves AP3LAB_THREADS / hardware; the
// result is identical for every worker count.
SearchResult exhaustive_max(const PointSet& ground, std::size_t n,
                            std::uint64_t budget = 10'000'000, int threads = 0);

// Annealed hill climbing with single-element swaps. Zero-valued fields pick
// the defaults: initial temperature n, geometric cooling applied once per
// sweep of |ground| proposals, budget 200 * n * |ground| proposals.
struct AnnealSchedule {
  double initial_temperature = 0;
  double cooling = 0.995;
  std::uint64_t proposals = 0;
};

// Deterministic for a fixed (seed, restarts, schedule) regardless of thread
// count: restart k draws from its own generator seeded by mix(seed, k), and
// ties between restarts resolve to the lowest restart index.
SearchResult stochastic_max(const PointSet& ground, std::size_t n, std::uint64_t seed,
                            const AnnealSchedule& schedule = {}, int restarts = 1,
                            int threads = 0);

// Property-test driver for the upper bounds: draws `trials` point sets from
// the sampler, counts each, and compares against the bound. Violating sets
// are serialized for replay. tightest_* describe the sampled set with the
// least slack.
struct AuditReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> violating_sets;
  std::uint64_t tightest_total = 0;
  std::uint64_t tightest_bound = 0;
  std::string tightest_set;
};

using PointSetSampler = std::function<PointSet(std::mt19937_64&)>;
using BoundFn = std::function<std::uint64_t(const PointSet&)>;

AuditReport bound_audit(const PointSetSampler& sampler, const BoundFn& bound,
                        std::uint64_t trials, std::uint64_t seed);

}  // namespace ap3

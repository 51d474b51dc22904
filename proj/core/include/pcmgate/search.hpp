#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "pcmgate/consistency.hpp"
#include "pcmgate/pcm.hpp"
#include "pcmgate/weights.hpp"

namespace pcmgate {

enum class Objective : std::uint8_t {
  MaxDeviation,     // maximize the percent deviation of aggregated weights
  MinConsistency,   // minimize the consistency index
};

/// Steady-state GA parameters.
struct GaConfig {
  int population_size = 50;
  /// Per-gene mutation probability; unset means 1 / genome length.
  std::optional<double> mutation_prob;
  /// Consecutive offspring without an incumbent improvement before stopping.
  int stall_limit = 1000;
  /// Hard cap on fitness evaluations, initial population included.
  std::uint64_t max_evaluations = 100000;
  std::uint64_t seed = 1;

  void validate() const;
};

struct SearchResult {
  SignPattern best_pattern;
  double best_score = 0.0;  // deviation in percent, or consistency index
  std::uint64_t evaluations = 0;
  bool exhaustive = false;
};

/// Default cap on exhaustive enumeration: alphabet^length may not exceed it.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Scores one pattern: builds the perfect matrix from w, perturbs it, then
/// returns the deviation of the combinatorial aggregate from the normalized
/// reference weights (MaxDeviation) or the overall consistency index
/// (MinConsistency). Deterministic.
double evaluate_fitness(const Weights& w, const PerturbationConfig& cfg,
                        const SignPattern& pattern, Objective objective,
                        const ConsistencyConfig& ccfg = {});

/// Scores every pattern in lexicographic order (genes ordered -1 < 0 < +1)
/// and returns the global optimum; ties go to the lexicographically smallest
/// pattern. Throws ResourceError when the space exceeds the cap.
SearchResult exhaustive_search(const Weights& w, const PerturbationConfig& cfg,
                               Objective objective, const ConsistencyConfig& ccfg = {},
                               std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Called after each evaluation with the incumbent best score.
using SearchObserver = std::function<void(double incumbent_score, std::uint64_t evaluations)>;

/// Steady-state GA: uniform random initial population; each step crosses two
/// random parents at a single uniform cut point, mutates genes at the
/// configured rate, and the offspring replaces the current least-fit
/// individual only when strictly fitter. Stops on stall or the evaluation
/// cap. Fully deterministic for a fixed seed.
SearchResult ga_search(const Weights& w, const PerturbationConfig& cfg, Objective objective,
                       const ConsistencyConfig& ccfg = {}, const GaConfig& ga = {},
                       const SearchObserver& observer = {});

}  // namespace pcmgate

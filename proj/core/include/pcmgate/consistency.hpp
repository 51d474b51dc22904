#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcmgate/pcm.hpp"
#include "pcmgate/spanning_trees.hpp"

namespace pcmgate {

/// Distance applied to each pairwise gap |x_i - x_j| in a spectrum.
enum class DistanceFn : std::uint8_t {
  Identity,  // the gap itself
  Squared,   // the squared gap; penalizes outliers harder
};

/// How the worst-case normalizer M is derived. PairExtremes uses the exact
/// maximizer of the pairwise-distance sum for T points confined to the unit
/// interval: floor(T/2) * ceil(T/2) points split between the endpoints.
enum class NormalizerRule : std::uint8_t {
  PairExtremes,
};

struct ConsistencyConfig {
  DistanceFn distance_fn = DistanceFn::Identity;
  NormalizerRule normalizer = NormalizerRule::PairExtremes;

  /// Short provenance tag, e.g. "identity/pair-extremes". Threshold tables
  /// remember the tag of the index that calibrated them and gating refuses
  /// a mismatch.
  std::string tags() const;
};

/// One alternative's estimates across all spanning trees, in catalog order.
/// Each estimate is that alternative's component of one tree's normalized
/// priority vector, so all estimates lie in (0, 1).
struct Spectrum {
  std::vector<double> estimates;
};

struct ConsistencyReport {
  double overall = 1.0;                  // min over alternatives
  std::vector<double> per_alternative;   // index of each alternative's spectrum
  int weakest_alternative = 0;           // argmin, 0-based; the feedback target
};

/// Throws ContractError unless 0 <= alt < n.
Spectrum alternative_spectrum(const Pcm& pcm, int alt, int node_cap = kDefaultNodeCap);

/// Dispersion index of a spectrum: 1 - sum over unordered pairs of
/// f(|x_i - x_j|), divided by the worst-case value M. 1 means all estimates
/// agree; 0 means maximal spread. A single-estimate spectrum has no pairs
/// and scores 1 by convention.
double spectrum_consistency(const Spectrum& s, const ConsistencyConfig& cfg = {});

/// Runs spectrum_consistency per alternative and reports the minimum.
ConsistencyReport pcm_consistency(const Pcm& pcm, const ConsistencyConfig& cfg = {},
                                  int node_cap = kDefaultNodeCap);

}  // namespace pcmgate

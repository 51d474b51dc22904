#pragma once

#include <cstddef>
#include <vector>

namespace pcmgate {

/// Positive ratio-scale weights of the alternatives being compared.
/// These act as the ground-truth values the simulated expertise tries to
/// recover; only their ratios matter.
class Weights {
 public:
  /// Throws DomainError unless there are at least two strictly positive,
  /// finite values.
  explicit Weights(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  int count() const noexcept { return static_cast<int>(values_.size()); }

  /// True when max/min exceeds 9, i.e. the weights are no longer of the same
  /// order of magnitude and pairwise estimation loses validity. Advisory
  /// condition, never an error.
  bool exceeds_scale_span() const noexcept;

 private:
  std::vector<double> values_;
};

/// Default calibration weights: 3^(k/2) for k = 0..4, spanning the [1, 9]
/// estimation scale evenly in ratio terms.
Weights default_reference_weights();

}  // namespace pcmgate

#pragma once

#include <vector>

namespace pcmgate {

/// Unit-sum vector of relative alternative weights.
struct PriorityVector {
  std::vector<double> values;

  int count() const noexcept { return static_cast<int>(values.size()); }
};

/// Divides by the sum. Throws DomainError when any value is not strictly
/// positive and finite.
PriorityVector normalize_weights(const std::vector<double>& values);

/// Percent sum of absolute componentwise differences between two unit-sum
/// vectors: 0 for equal vectors, at most 200. Throws ContractError on a
/// length mismatch.
double relative_deviation_pct(const PriorityVector& v, const PriorityVector& reference);

}  // namespace pcmgate

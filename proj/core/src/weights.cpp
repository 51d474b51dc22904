#include "pcmgate/weights.hpp"

#include <algorithm>
#include <cmath>

#include "pcmgate/errors.hpp"

namespace pcmgate {

Weights::Weights(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw DomainError("weights: need at least two alternatives, got " +
                      std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("weights: every value must be a positive finite number");
    }
  }
}

bool Weights::exceeds_scale_span() const noexcept {
  auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  return *hi / *lo > 9.0;
}

Weights default_reference_weights() {
  const double r = std::sqrt(3.0);
  return Weights({1.0, r, 3.0, 3.0 * r, 9.0});
}

}  // namespace pcmgate

#include "pcmgate/priority.hpp"

#include <cmath>

#include "pcmgate/errors.hpp"

namespace pcmgate {

PriorityVector normalize_weights(const std::vector<double>& values) {
  if (values.empty()) {
    throw DomainError("normalize: empty input");
  }
  double sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("normalize: every value must be a positive finite number");
    }
    sum += v;
  }
  PriorityVector out;
  out.values.reserve(values.size());
  for (double v : values) {
    out.values.push_back(v / sum);
  }
  return out;
}

double relative_deviation_pct(const PriorityVector& v, const PriorityVector& reference) {
  if (v.values.size() != reference.values.size()) {
    throw ContractError("deviation: vector lengths differ (" + std::to_string(v.values.size()) +
                        " vs " + std::to_string(reference.values.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    sum += std::fabs(v.values[i] - reference.values[i]);
  }
  return 100.0 * sum;
}

}  // namespace pcmgate

#include "pcmgate/aggregate.hpp"

#include <cmath>
#include <vector>

namespace pcmgate {

PriorityVector combinatorial_aggregate(const Pcm& pcm, int node_cap) {
  const int n = pcm.size();
  const std::vector<double> matrix = detail::tree_component_matrix(pcm, node_cap);
  const std::size_t tree_count = matrix.size() / static_cast<std::size_t>(n);

  std::vector<double> log_sums(n, 0.0);
  for (std::size_t t = 0; t < tree_count; ++t) {
    const double* row = matrix.data() + t * static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i) {
      log_sums[i] += std::log(row[i]);
    }
  }
  std::vector<double> means(n);
  for (int i = 0; i < n; ++i) {
    means[i] = std::exp(log_sums[i] / static_cast<double>(tree_count));
  }
  return normalize_weights(means);
}

PriorityVector row_geometric_mean(const Pcm& pcm) {
  const int n = pcm.size();
  std::vector<double> means(n);
  for (int i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      log_sum += std::log(pcm.at(i, j));
    }
    means[i] = std::exp(log_sum / n);
  }
  return normalize_weights(means);
}

}  // namespace pcmgate

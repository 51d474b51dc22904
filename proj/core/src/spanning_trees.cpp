#include "pcmgate/spanning_trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "pcmgate/errors.hpp"

namespace pcmgate {

namespace {

// BFS from node 0, neighbors in ascending order. Every non-root node appears
// exactly once as a child, after its parent.
std::vector<std::pair<int, int>> propagation_schedule(int n,
                                                      const std::vector<std::pair<int, int>>& edges,
                                                      int root) {
  std::vector<std::vector<int>> adjacency(n);
  for (auto [a, b] : edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  for (auto& nbrs : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  std::vector<std::pair<int, int>> schedule;
  schedule.reserve(static_cast<std::size_t>(n) - 1);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{root};
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        schedule.emplace_back(v, u);
        queue.push_back(v);
      }
    }
  }
  if (schedule.size() != static_cast<std::size_t>(n) - 1) {
    throw ContractError("spanning tree: edges do not connect all nodes");
  }
  return schedule;
}

void check_node_count(int n, int node_cap) {
  if (n < 2) {
    throw DomainError("spanning trees: need at least two nodes");
  }
  if (n > node_cap) {
    throw ResourceError("spanning trees: n = " + std::to_string(n) + " would enumerate n^(n-2) = " +
                        std::to_string(n) + "^" + std::to_string(n - 2) +
                        " trees; the cap is n <= " + std::to_string(node_cap));
  }
}

}  // namespace

SpanningTree decode_prufer(int n, const std::vector<int>& sequence) {
  if (n < 2) {
    throw DomainError("prufer: need at least two nodes");
  }
  if (sequence.size() != static_cast<std::size_t>(n) - 2) {
    throw ContractError("prufer: sequence for n = " + std::to_string(n) + " must have length " +
                        std::to_string(n - 2));
  }
  for (int label : sequence) {
    if (label < 0 || label >= n) {
      throw DomainError("prufer: label " + std::to_string(label) + " out of range 0.." +
                        std::to_string(n - 1));
    }
  }

  std::vector<int> degree(n, 1);
  for (int label : sequence) {
    ++degree[label];
  }

  SpanningTree tree;
  tree.n = n;
  tree.edges.reserve(static_cast<std::size_t>(n) - 1);
  // "ptr" walks to the smallest leaf; "leaf" chases chains that open up when
  // a sequence node's degree drops to one. Linear-time standard decoding.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int label : sequence) {
    tree.edges.emplace_back(leaf, label);
    if (--degree[label] == 1 && label < ptr) {
      leaf = label;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // the last remaining leaf joins the highest node
  tree.edges.emplace_back(leaf, n - 1);

  tree.schedule = propagation_schedule(n, tree.edges, 0);
  return tree;
}

std::uint64_t spanning_tree_count(int n) {
  if (n < 2) {
    throw DomainError("spanning trees: need at least two nodes");
  }
  std::uint64_t count = 1;
  for (int k = 0; k < n - 2; ++k) {
    count *= static_cast<std::uint64_t>(n);
  }
  return count;
}

std::vector<SpanningTree> enumerate_spanning_trees(int n, int node_cap) {
  check_node_count(n, node_cap);
  const std::uint64_t total = spanning_tree_count(n);
  std::vector<SpanningTree> trees;
  trees.reserve(total);

  std::vector<int> sequence(std::max(n - 2, 0), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    trees.push_back(decode_prufer(n, sequence));
    // lexicographic odometer: last position runs fastest
    for (int pos = n - 3; pos >= 0; --pos) {
      if (++sequence[pos] < n) break;
      sequence[pos] = 0;
    }
  }
  return trees;
}

const std::vector<SpanningTree>& spanning_tree_catalog(int n, int node_cap) {
  check_node_count(n, node_cap);
  static std::mutex mutex;
  static std::map<int, std::vector<SpanningTree>> catalogs;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = catalogs.find(n);
  if (it == catalogs.end()) {
    it = catalogs.emplace(n, enumerate_spanning_trees(n, node_cap)).first;
  }
  return it->second;
}

PriorityVector tree_priority_vector(const Pcm& pcm, const SpanningTree& tree, int root) {
  const int n = tree.n;
  if (pcm.size() != n) {
    throw ContractError("tree priority: matrix size " + std::to_string(pcm.size()) +
                        " does not match tree size " + std::to_string(n));
  }
  if (root < 0 || root >= n) {
    throw ContractError("tree priority: root out of range");
  }

  const auto& schedule =
      (root == 0) ? tree.schedule : propagation_schedule(n, tree.edges, root);

  std::vector<double> raw(n, 0.0);
  raw[root] = 1.0;
  for (auto [child, parent] : schedule) {
    raw[child] = pcm.at(child, parent) * raw[parent];
  }
  return normalize_weights(raw);
}

namespace detail {

std::vector<double> tree_component_matrix(const Pcm& pcm, int node_cap) {
  const int n = pcm.size();
  const auto& catalog = spanning_tree_catalog(n, node_cap);
  std::vector<double> matrix(catalog.size() * static_cast<std::size_t>(n));
  std::vector<double> raw(n);

  std::size_t row = 0;
  for (const auto& tree : catalog) {
    raw.assign(n, 0.0);
    raw[0] = 1.0;
    double sum = 1.0;
    for (auto [child, parent] : tree.schedule) {
      raw[child] = pcm.at(child, parent) * raw[parent];
      sum += raw[child];
    }
    for (int i = 0; i < n; ++i) {
      matrix[row + i] = raw[i] / sum;
    }
    row += static_cast<std::size_t>(n);
  }
  return matrix;
}

}  // namespace detail

}  // namespace pcmgate

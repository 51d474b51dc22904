#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcmgate/pcm.hpp"
#include "pcmgate/priority.hpp"

namespace pcmgate {

/// Hard default on the number of alternatives: the catalog for n holds
/// n^(n-2) trees, which is 262144 at n = 8 and grows too fast beyond.
inline constexpr int kDefaultNodeCap = 8;

/// Labeled spanning tree over nodes 0..n-1 together with the propagation
/// order used to push weights from node 0 along its edges.
struct SpanningTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;     // unordered node pairs
  std::vector<std::pair<int, int>> schedule;  // (child, parent), BFS order from node 0
};

/// Standard Prufer decoding, 0-based labels. The sequence length must be
/// n - 2 (empty for n = 2) with every label in 0..n-1.
SpanningTree decode_prufer(int n, const std::vector<int>& sequence);

/// Cayley count n^(n-2).
std::uint64_t spanning_tree_count(int n);

/// All labeled trees on n nodes in lexicographic Prufer order.
/// Throws ResourceError when n exceeds the cap.
std::vector<SpanningTree> enumerate_spanning_trees(int n, int node_cap = kDefaultNodeCap);

/// Cached enumeration. The catalog for a given n is built on first use and
/// read-only afterwards, so repeated evaluations share one copy.
const std::vector<SpanningTree>& spanning_tree_catalog(int n, int node_cap = kDefaultNodeCap);

/// Derives one priority vector from the tree: the root gets provisional
/// weight 1 and each edge from a known node u to an unknown node v sets
/// weight_v = m(v, u) * weight_u; the result is normalized to sum 1.
/// For reciprocal matrices the root choice is irrelevant; elsewhere the
/// convention is root 0.
PriorityVector tree_priority_vector(const Pcm& pcm, const SpanningTree& tree, int root = 0);

namespace detail {

/// Flat T x n matrix: row t holds the normalized priority vector of catalog
/// tree t (root 0). Shared workhorse of aggregation and consistency scoring.
std::vector<double> tree_component_matrix(const Pcm& pcm, int node_cap = kDefaultNodeCap);

}  // namespace detail

}  // namespace pcmgate

#pragma once

#include "pcmgate/pcm.hpp"
#include "pcmgate/priority.hpp"
#include "pcmgate/spanning_trees.hpp"

namespace pcmgate {

/// Combinatorial aggregation: one priority vector per spanning tree of the
/// comparison graph, combined elementwise by geometric mean and normalized
/// to sum 1. Geometric means run in log space so hundreds of factors cannot
/// overflow or underflow.
PriorityVector combinatorial_aggregate(const Pcm& pcm, int node_cap = kDefaultNodeCap);

/// Normalized row geometric means: component i = (prod_j m_ij)^(1/n).
/// On reciprocal matrices this equals the combinatorial aggregate, which
/// makes it the independent cross-check for that code path.
PriorityVector row_geometric_mean(const Pcm& pcm);

}  // namespace pcmgate

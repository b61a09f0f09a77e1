#pragma once

#include <cstdint>

#include "fedgnn/graph.hpp"

namespace fedgnn {

// Balanced k-way edge-cut partitioning by seeded multi-source BFS growing.
// Each part is capped at ceil(n/k) * (1 + balance_slack); nodes left over
// when all reachable frontiers are exhausted go to the currently smallest
// part (the one documented overflow rule). Deterministic for a fixed seed.
PartitionAssignment partition_bfs_grow(const Graph& g, std::uint32_t k,
                                       double balance_slack,
                                       std::uint64_t seed);

// Worst-case baseline: node id mod k.
PartitionAssignment partition_hash(const Graph& g, std::uint32_t k);

// Number of directed edges whose endpoints lie in different parts.
std::uint64_t edge_cut(const Graph& g, const PartitionAssignment& a);

}  // namespace fedgnn

#include "fedgnn/partition.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "fedgnn/errors.hpp"
#include "fedgnn/rng.hpp"

namespace fedgnn {

PartitionAssignment partition_bfs_grow(const Graph& g, std::uint32_t k,
                                       double balance_slack,
                                       std::uint64_t seed) {
    const std::uint64_t n = g.num_nodes;
    if (k < 1 || k > n) {
        throw ConfigError("partition_bfs_grow: k=" + std::to_string(k) +
                          " with n=" + std::to_string(n));
    }
    if (balance_slack < 0.0) {
        throw ConfigError("partition_bfs_grow: negative balance slack");
    }
    const std::uint64_t cap = static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(n) / k) * (1.0 + balance_slack));
    if (cap < 1) throw ConfigError("partition_bfs_grow: impossible balance");

    PartitionAssignment a;
    a.num_parts = k;
    constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
    a.part_of.assign(n, kUnassigned);
    std::vector<std::uint64_t> sizes(k, 0);

    // Distinct seed nodes via a seeded partial shuffle of all node ids.
    Rng rng(derive_seed(seed, {stream::kPartition}));
    std::vector<NodeId> order(n);
    for (std::uint64_t i = 0; i < n; ++i) order[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint64_t j = i + rng.below(n - i);
        std::swap(order[i], order[j]);
    }

    std::vector<std::deque<NodeId>> frontier(k);
    for (std::uint32_t p = 0; p < k; ++p) {
        NodeId s = order[p];
        a.part_of[s] = p;
        sizes[p] = 1;
        frontier[p].push_back(s);
    }

    // Round-robin growth; ties in exploration order are broken by the sorted
    // adjacency lists, so the result is deterministic.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::uint32_t p = 0; p < k; ++p) {
            if (sizes[p] >= cap) continue;
            while (!frontier[p].empty() && sizes[p] < cap) {
                NodeId u = frontier[p].front();
                NodeId grabbed = kUnassigned;
                for (NodeId v : g.out_adj.neighbors(u)) {
                    if (a.part_of[v] == kUnassigned) {
                        grabbed = v;
                        break;
                    }
                }
                if (grabbed == kUnassigned) {
                    for (NodeId v : g.in_adj.neighbors(u)) {
                        if (a.part_of[v] == kUnassigned) {
                            grabbed = v;
                            break;
                        }
                    }
                }
                if (grabbed == kUnassigned) {
                    frontier[p].pop_front();
                    continue;
                }
                a.part_of[grabbed] = p;
                ++sizes[p];
                frontier[p].push_back(grabbed);
                progress = true;
                break;  // one node per part per round-robin turn
            }
        }
    }

    // Leftovers (disconnected or capped out) go to the smallest part.
    for (std::uint64_t u = 0; u < n; ++u) {
        if (a.part_of[u] != kUnassigned) continue;
        std::uint32_t best = 0;
        for (std::uint32_t p = 1; p < k; ++p) {
            if (sizes[p] < sizes[best]) best = p;
        }
        a.part_of[u] = best;
        ++sizes[best];
    }
    a.validate(n);
    return a;
}

PartitionAssignment partition_hash(const Graph& g, std::uint32_t k) {
    if (k < 1 || k > g.num_nodes) {
        throw ConfigError("partition_hash: k=" + std::to_string(k));
    }
    PartitionAssignment a;
    a.num_parts = k;
    a.part_of.resize(g.num_nodes);
    for (std::uint64_t u = 0; u < g.num_nodes; ++u) {
        a.part_of[u] = static_cast<std::uint32_t>(u % k);
    }
    a.validate(g.num_nodes);
    return a;
}

std::uint64_t edge_cut(const Graph& g, const PartitionAssignment& a) {
    a.validate(g.num_nodes);
    std::uint64_t cut = 0;
    for (const Edge& e : g.edges) {
        if (a.part_of[e.src] != a.part_of[e.dst]) ++cut;
    }
    return cut;
}

}  // namespace fedgnn

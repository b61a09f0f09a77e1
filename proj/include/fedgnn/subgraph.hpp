#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fedgnn/graph.hpp"

namespace fedgnn {

// Per-client view of the partitioned graph. Local indexing puts local nodes
// first (in ascending global id order), then retained remote nodes (also
// ascending), so block output prefixes line up with the local range.
struct Subgraph {
    std::uint32_t client_id = 0;

    std::vector<NodeId> local_nodes;   // ascending global ids
    std::vector<NodeId> remote_nodes;  // ascending; retained pull nodes
    std::vector<NodeId> push_nodes;    // ⊆ local_nodes, ascending

    // All pull candidates found at build time, before any pruning.
    std::vector<NodeId> pull_candidates;

    // Cross-client edges incident to this client (global ids), recorded at
    // build time for expansion. in: remote -> local, out: local -> remote.
    std::vector<std::pair<NodeId, NodeId>> cross_in_edges;
    std::vector<std::pair<NodeId, NodeId>> cross_out_edges;

    // Edges in local-index space covering the current topology.
    std::vector<std::pair<LocalIdx, LocalIdx>> edges;

    std::unordered_map<NodeId, LocalIdx> id_map;  // global -> local index

    Matrix features;  // rows = num_total(); remote rows are zero placeholders
    std::vector<std::uint32_t> labels;  // locals only, size num_local()

    std::vector<LocalIdx> train_nodes;  // local indices, ascending
    std::vector<LocalIdx> test_nodes;

    Csr in_adj;  // built by finalize(); neighbors(u) = in-neighbors of u

    std::size_t num_local() const { return local_nodes.size(); }
    std::size_t num_total() const {
        return local_nodes.size() + remote_nodes.size();
    }
    bool is_remote(LocalIdx idx) const { return idx >= num_local(); }
    NodeId global_id(LocalIdx idx) const {
        return idx < num_local() ? local_nodes[idx]
                                 : remote_nodes[idx - num_local()];
    }
    LocalIdx local_index(NodeId id) const;

    // Rebuilds in_adj from edges and checks invariants.
    void finalize();
};

// Splits the graph into per-client subgraphs (pre-expansion: no remote nodes,
// local-local edges only) and records boundary sets and cross-client edges.
std::vector<Subgraph> build_subgraphs(const Graph& g,
                                      const PartitionAssignment& a);

// Adds `retained` pull nodes (must be ⊆ pull_candidates) plus their
// cross-client edges to a pre-expansion subgraph. Remote ids are appended in
// ascending global-id order.
Subgraph expand_subgraph(const Subgraph& base,
                         const std::vector<NodeId>& retained);

}  // namespace fedgnn

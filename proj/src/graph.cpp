#include "fedgnn/graph.hpp"

#include <algorithm>
#include <string>

#include "fedgnn/errors.hpp"

namespace fedgnn {

Csr build_csr(std::uint64_t n, const std::vector<Edge>& edges, bool key_by_dst) {
    Csr csr;
    csr.offsets.assign(n + 1, 0);
    for (const Edge& e : edges) {
        NodeId key = key_by_dst ? e.dst : e.src;
        ++csr.offsets[key + 1];
    }
    for (std::uint64_t i = 0; i < n; ++i) csr.offsets[i + 1] += csr.offsets[i];
    csr.targets.resize(edges.size());
    std::vector<std::uint64_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
    for (const Edge& e : edges) {
        NodeId key = key_by_dst ? e.dst : e.src;
        NodeId other = key_by_dst ? e.src : e.dst;
        csr.targets[cursor[key]++] = other;
    }
    for (std::uint64_t u = 0; u < n; ++u) {
        std::sort(csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[u]),
                  csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[u + 1]));
    }
    return csr;
}

std::uint32_t Graph::num_classes() const {
    std::uint32_t c = 0;
    for (std::uint32_t l : labels) c = std::max(c, l + 1);
    return c;
}

void Graph::build_adjacency() {
    in_adj = build_csr(num_nodes, edges, /*key_by_dst=*/true);
    out_adj = build_csr(num_nodes, edges, /*key_by_dst=*/false);
}

void Graph::validate() const {
    for (const Edge& e : edges) {
        if (e.src >= num_nodes || e.dst >= num_nodes) {
            throw ValidationError("edge endpoint " +
                                  std::to_string(std::max(e.src, e.dst)) +
                                  " out of range (n=" + std::to_string(num_nodes) +
                                  ")");
        }
    }
    if (features.rows != num_nodes) {
        throw ValidationError("feature rows " + std::to_string(features.rows) +
                              " != num_nodes " + std::to_string(num_nodes));
    }
    if (labels.size() != num_nodes) {
        throw ValidationError("label count " + std::to_string(labels.size()) +
                              " != num_nodes " + std::to_string(num_nodes));
    }
    for (NodeId id : train_mask) {
        if (id >= num_nodes) throw ValidationError("train mask id out of range");
    }
    for (NodeId id : test_mask) {
        if (id >= num_nodes) throw ValidationError("test mask id out of range");
    }
    // train and test must be disjoint
    std::vector<NodeId> both;
    std::set_intersection(train_mask.begin(), train_mask.end(),
                          test_mask.begin(), test_mask.end(),
                          std::back_inserter(both));
    if (!both.empty()) {
        throw ValidationError("train/test masks overlap on " +
                              std::to_string(both.size()) + " nodes");
    }
}

void PartitionAssignment::validate(std::uint64_t num_nodes) const {
    if (part_of.size() != num_nodes) {
        throw ValidationError("assignment covers " +
                              std::to_string(part_of.size()) + " of " +
                              std::to_string(num_nodes) + " nodes");
    }
    std::vector<std::uint64_t> sizes(num_parts, 0);
    for (std::uint32_t p : part_of) {
        if (p >= num_parts) throw ValidationError("part id out of range");
        ++sizes[p];
    }
    for (std::uint32_t p = 0; p < num_parts; ++p) {
        if (sizes[p] == 0) {
            throw ValidationError("part " + std::to_string(p) + " is empty");
        }
    }
}

}  // namespace fedgnn

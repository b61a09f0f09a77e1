#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fedgnn/matrix.hpp"

namespace fedgnn {

using NodeId = std::uint64_t;
using LocalIdx = std::uint32_t;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    bool operator==(const Edge&) const = default;
};

// Compressed adjacency: neighbors(u) lists are sorted ascending.
struct Csr {
    std::vector<std::uint64_t> offsets;  // size num_nodes + 1
    std::vector<NodeId> targets;

    std::span<const NodeId> neighbors(NodeId u) const {
        return {targets.data() + offsets[u],
                targets.data() + offsets[u + 1]};
    }
    std::uint64_t degree(NodeId u) const {
        return offsets[u + 1] - offsets[u];
    }
};

// Builds a CSR over `n` nodes keyed by `key` (src for out-adjacency, dst for
// in-adjacency), storing the opposite endpoint.
Csr build_csr(std::uint64_t n, const std::vector<Edge>& edges, bool key_by_dst);

struct Graph {
    std::uint64_t num_nodes = 0;
    std::vector<Edge> edges;  // directed (src, dst)
    Csr in_adj;               // in_adj.neighbors(u): sources of edges into u
    Csr out_adj;
    Matrix features;                     // rows = num_nodes (h^0)
    std::vector<std::uint32_t> labels;   // per-node class id
    std::vector<NodeId> train_mask;      // sorted node ids
    std::vector<NodeId> test_mask;       // sorted node ids

    std::uint32_t num_classes() const;
    void build_adjacency();
    void validate() const;
};

struct PartitionAssignment {
    std::vector<std::uint32_t> part_of;  // node id -> client id
    std::uint32_t num_parts = 0;

    void validate(std::uint64_t num_nodes) const;
};

// --- dataset file I/O ------------------------------------------------------
// Edge file: UTF-8 text, one "src dst" per line, decimal ids.
// Feature file: magic "FGNF", u64 num_nodes, u64 dim, f32 row-major, LE.
// Label file:   magic "FGNL", u64 n, u32 per node, LE.
// Mask file:    magic "FGNM", u64 count, u64 node ids, LE.

std::vector<Edge> read_edge_file(const std::string& path);
void write_edge_file(const std::string& path, const std::vector<Edge>& edges);

Matrix read_feature_file(const std::string& path);
void write_feature_file(const std::string& path, const Matrix& features);

std::vector<std::uint32_t> read_label_file(const std::string& path);
void write_label_file(const std::string& path,
                      const std::vector<std::uint32_t>& labels);

std::vector<NodeId> read_mask_file(const std::string& path);
void write_mask_file(const std::string& path, const std::vector<NodeId>& ids);

Graph load_graph(const std::string& edge_path, const std::string& feature_path,
                 const std::string& label_path,
                 const std::string& train_mask_path,
                 const std::string& test_mask_path, bool symmetrize = false);

// Directory convention: edges.txt, features.bin, labels.bin, train_mask.bin,
// test_mask.bin.
Graph load_dataset(const std::string& dir, bool symmetrize = false);
void write_dataset(const Graph& g, const std::string& dir);

PartitionAssignment read_assignment(const std::string& path,
                                    std::uint64_t num_nodes);
void write_assignment(const std::string& path, const PartitionAssignment& a);

}  // namespace fedgnn

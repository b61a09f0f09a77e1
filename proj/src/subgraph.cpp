#include "fedgnn/subgraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "fedgnn/errors.hpp"

namespace fedgnn {

LocalIdx Subgraph::local_index(NodeId id) const {
    auto it = id_map.find(id);
    if (it == id_map.end()) {
        throw ValidationError("node " + std::to_string(id) +
                              " not in subgraph of client " +
                              std::to_string(client_id));
    }
    return it->second;
}

void Subgraph::finalize() {
    const std::uint64_t n = num_total();
    std::vector<Edge> as_edges;
    as_edges.reserve(edges.size());
    for (auto [s, d] : edges) {
        if (s >= n || d >= n) throw ValidationError("subgraph edge out of range");
        as_edges.push_back({s, d});
    }
    in_adj = build_csr(n, as_edges, /*key_by_dst=*/true);

    if (features.rows != n) {
        throw ValidationError("subgraph feature rows != node count");
    }
    if (labels.size() != num_local()) {
        throw ValidationError("subgraph labels != local count");
    }
    // every remote node must touch at least one local node
    std::vector<bool> touches(remote_nodes.size(), false);
    for (auto [s, d] : edges) {
        if (is_remote(s) && !is_remote(d)) touches[s - num_local()] = true;
        if (is_remote(d) && !is_remote(s)) touches[d - num_local()] = true;
    }
    for (std::size_t r = 0; r < remote_nodes.size(); ++r) {
        if (!touches[r]) {
            throw ValidationError("remote node " +
                                  std::to_string(remote_nodes[r]) +
                                  " has no edge to a local node");
        }
    }
}

std::vector<Subgraph> build_subgraphs(const Graph& g,
                                      const PartitionAssignment& a) {
    a.validate(g.num_nodes);
    const std::uint32_t k = a.num_parts;

    std::vector<Subgraph> subs(k);
    for (std::uint32_t c = 0; c < k; ++c) subs[c].client_id = c;
    for (NodeId u = 0; u < g.num_nodes; ++u) {
        subs[a.part_of[u]].local_nodes.push_back(u);
    }
    for (std::uint32_t c = 0; c < k; ++c) {
        Subgraph& sg = subs[c];
        sg.id_map.reserve(sg.local_nodes.size());
        for (LocalIdx i = 0; i < sg.local_nodes.size(); ++i) {
            sg.id_map.emplace(sg.local_nodes[i], i);
        }
    }

    std::vector<std::unordered_set<NodeId>> push_sets(k), pull_sets(k);
    for (const Edge& e : g.edges) {
        std::uint32_t ps = a.part_of[e.src];
        std::uint32_t pd = a.part_of[e.dst];
        if (ps == pd) {
            Subgraph& sg = subs[ps];
            sg.edges.emplace_back(sg.id_map.at(e.src), sg.id_map.at(e.dst));
        } else {
            // e.src is a push node of its owner and a pull candidate of pd
            push_sets[ps].insert(e.src);
            pull_sets[pd].insert(e.src);
            subs[pd].cross_in_edges.emplace_back(e.src, e.dst);
            subs[ps].cross_out_edges.emplace_back(e.src, e.dst);
        }
    }

    for (std::uint32_t c = 0; c < k; ++c) {
        Subgraph& sg = subs[c];
        sg.push_nodes.assign(push_sets[c].begin(), push_sets[c].end());
        std::sort(sg.push_nodes.begin(), sg.push_nodes.end());
        sg.pull_candidates.assign(pull_sets[c].begin(), pull_sets[c].end());
        std::sort(sg.pull_candidates.begin(), sg.pull_candidates.end());
        std::sort(sg.cross_in_edges.begin(), sg.cross_in_edges.end());
        std::sort(sg.cross_out_edges.begin(), sg.cross_out_edges.end());

        sg.features = Matrix(sg.local_nodes.size(), g.features.cols);
        sg.labels.resize(sg.local_nodes.size());
        for (LocalIdx i = 0; i < sg.local_nodes.size(); ++i) {
            NodeId u = sg.local_nodes[i];
            for (std::size_t j = 0; j < g.features.cols; ++j) {
                sg.features.at(i, j) = g.features.at(u, j);
            }
            sg.labels[i] = g.labels[u];
        }
        for (NodeId u : g.train_mask) {
            auto it = sg.id_map.find(u);
            if (it != sg.id_map.end()) sg.train_nodes.push_back(it->second);
        }
        for (NodeId u : g.test_mask) {
            auto it = sg.id_map.find(u);
            if (it != sg.id_map.end()) sg.test_nodes.push_back(it->second);
        }
        sg.finalize();
    }
    return subs;
}

Subgraph expand_subgraph(const Subgraph& base,
                         const std::vector<NodeId>& retained) {
    if (!base.remote_nodes.empty()) {
        throw ValidationError("expand_subgraph: subgraph already expanded");
    }
    std::unordered_set<NodeId> candidates(base.pull_candidates.begin(),
                                          base.pull_candidates.end());
    for (NodeId r : retained) {
        if (!candidates.count(r)) {
            throw ValidationError("retained node " + std::to_string(r) +
                                  " has no edge into client " +
                                  std::to_string(base.client_id));
        }
    }

    Subgraph sg = base;
    sg.remote_nodes.assign(retained.begin(), retained.end());
    std::sort(sg.remote_nodes.begin(), sg.remote_nodes.end());
    sg.remote_nodes.erase(
        std::unique(sg.remote_nodes.begin(), sg.remote_nodes.end()),
        sg.remote_nodes.end());

    const std::size_t n_local = sg.num_local();
    for (std::size_t r = 0; r < sg.remote_nodes.size(); ++r) {
        sg.id_map.emplace(sg.remote_nodes[r], static_cast<LocalIdx>(n_local + r));
    }
    std::unordered_set<NodeId> kept(sg.remote_nodes.begin(),
                                    sg.remote_nodes.end());
    for (auto [rs, ld] : base.cross_in_edges) {
        if (kept.count(rs)) {
            sg.edges.emplace_back(sg.id_map.at(rs), sg.id_map.at(ld));
        }
    }
    for (auto [ls, rd] : base.cross_out_edges) {
        if (kept.count(rd)) {
            sg.edges.emplace_back(sg.id_map.at(ls), sg.id_map.at(rd));
        }
    }

    // zero placeholder feature rows for remote nodes; never read at hop L
    Matrix feats(sg.num_total(), base.features.cols);
    for (std::size_t i = 0; i < n_local; ++i) {
        for (std::size_t j = 0; j < base.features.cols; ++j) {
            feats.at(i, j) = base.features.at(i, j);
        }
    }
    sg.features = std::move(feats);
    sg.finalize();
    return sg;
}

}  // namespace fedgnn

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fedgnn/rng.hpp"
#include "fedgnn/subgraph.hpp"

namespace fedgnn {

// One layer of a minibatch computation graph. Edges run from an input
// position to an output position (the aggregating node). The output node
// list is a prefix of the input node list: the inputs are laid out as
// [outputs of the previous block][remote nodes aggregated at this layer].
struct SampledBlock {
    int layer_index = 1;                  // 1..L, 1 consumes h^0
    std::vector<LocalIdx> input_nodes;    // subgraph-local indices
    std::uint32_t num_outputs = 0;        // prefix length
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (in, out)

    std::uint32_t num_inputs() const {
        return static_cast<std::uint32_t>(input_nodes.size());
    }
};

struct ComputationGraph {
    std::vector<SampledBlock> blocks;  // deepest first: blocks[0] is layer 1
    std::vector<LocalIdx> seed_nodes;

    // Per block, (input position, global node id) of remote inputs. The block
    // with layer_index l consumes injected h^{l-1} rows at these positions.
    std::vector<std::vector<std::pair<std::uint32_t, NodeId>>> remote_inputs;

    // remote_at_hop[d] for d in 1..L-1: remote ids first reached at hop d
    // (they need the h^{L-d} embedding). Index 0 is unused.
    std::vector<std::vector<NodeId>> remote_at_hop;

    int num_layers() const { return static_cast<int>(blocks.size()); }
};

// Builds the layered minibatch computation graph. Per hop, local frontier
// nodes sample min(fanout, deg) in-neighbors without replacement; remote
// nodes are never expanded, and at hop L remote candidates are excluded from
// the pool before sampling. Seeds must be local training vertices unless
// `require_train_seeds` is false (used by the sampled push path).
ComputationGraph sample_computation_graph(const Subgraph& sg,
                                          const std::vector<LocalIdx>& seeds,
                                          std::uint32_t fanout, int num_layers,
                                          Rng& rng,
                                          bool require_train_seeds = true);

// Random permutation of the training nodes, chunked into batches. The last
// batch may be short; every node appears exactly once.
std::vector<std::vector<LocalIdx>> minibatches(std::vector<LocalIdx> nodes,
                                               std::size_t batch_size,
                                               Rng& rng);

}  // namespace fedgnn

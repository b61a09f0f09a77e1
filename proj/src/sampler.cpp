#include "fedgnn/sampler.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "fedgnn/errors.hpp"

namespace fedgnn {

namespace {

// Partial Fisher-Yates: picks `take` entries of `pool` without replacement.
void sample_without_replacement(std::vector<LocalIdx>& pool, std::size_t take,
                                Rng& rng) {
    if (take >= pool.size()) return;  // keep everything
    for (std::size_t i = 0; i < take; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(take);
}

}  // namespace

ComputationGraph sample_computation_graph(const Subgraph& sg,
                                          const std::vector<LocalIdx>& seeds,
                                          std::uint32_t fanout, int num_layers,
                                          Rng& rng, bool require_train_seeds) {
    if (fanout < 1) throw ValidationError("sampler: fanout must be >= 1");
    if (num_layers < 1) throw ValidationError("sampler: need at least 1 layer");
    for (LocalIdx s : seeds) {
        if (s >= sg.num_total()) throw ValidationError("sampler: bad seed index");
        if (sg.is_remote(s)) {
            throw ValidationError("sampler: seed " +
                                  std::to_string(sg.global_id(s)) +
                                  " is remote; only local nodes are seeds");
        }
        if (require_train_seeds &&
            !std::binary_search(sg.train_nodes.begin(), sg.train_nodes.end(), s)) {
            throw ValidationError("sampler: seed " +
                                  std::to_string(sg.global_id(s)) +
                                  " is not a training vertex");
        }
    }

    const int L = num_layers;
    ComputationGraph cg;
    cg.seed_nodes = seeds;
    cg.blocks.resize(L);
    cg.remote_inputs.resize(L);
    cg.remote_at_hop.assign(static_cast<std::size_t>(L), {});

    // frontier holds the local nodes whose h^l the block at layer l computes
    std::vector<LocalIdx> frontier = seeds;
    std::vector<LocalIdx> scratch;

    for (int l = L; l >= 1; --l) {
        SampledBlock& block = cg.blocks[static_cast<std::size_t>(l - 1)];
        block.layer_index = l;
        block.num_outputs = static_cast<std::uint32_t>(frontier.size());

        std::vector<LocalIdx> next = frontier;  // outputs form the prefix
        std::unordered_map<LocalIdx, std::uint32_t> local_pos;
        local_pos.reserve(next.size() * 2);
        for (std::uint32_t i = 0; i < next.size(); ++i) local_pos.emplace(next[i], i);

        std::vector<LocalIdx> remote_list;  // positions assigned after locals
        std::unordered_map<LocalIdx, std::uint32_t> remote_pos;
        // edges recorded as (local input pos | remote marker, output pos)
        constexpr std::uint32_t kRemoteBit = 0x80000000u;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

        const bool deepest = (l == 1);  // expanding toward hop L
        for (std::uint32_t out = 0; out < block.num_outputs; ++out) {
            LocalIdx u = frontier[out];
            scratch.clear();
            for (NodeId v64 : sg.in_adj.neighbors(u)) {
                LocalIdx v = static_cast<LocalIdx>(v64);
                if (deepest && sg.is_remote(v)) continue;  // no remote at hop L
                scratch.push_back(v);
            }
            sample_without_replacement(scratch, fanout, rng);
            for (LocalIdx v : scratch) {
                if (sg.is_remote(v)) {
                    auto [it, inserted] =
                        remote_pos.emplace(v, static_cast<std::uint32_t>(remote_list.size()));
                    if (inserted) remote_list.push_back(v);
                    edges.emplace_back(kRemoteBit | it->second, out);
                } else {
                    auto [it, inserted] =
                        local_pos.emplace(v, static_cast<std::uint32_t>(next.size()));
                    if (inserted) next.push_back(v);
                    edges.emplace_back(it->second, out);
                }
            }
        }

        const std::uint32_t n_local_inputs = static_cast<std::uint32_t>(next.size());
        block.input_nodes = next;
        for (std::uint32_t r = 0; r < remote_list.size(); ++r) {
            block.input_nodes.push_back(remote_list[r]);
            cg.remote_inputs[static_cast<std::size_t>(l - 1)].emplace_back(
                n_local_inputs + r, sg.global_id(remote_list[r]));
        }
        block.edges.reserve(edges.size());
        for (auto [in, out] : edges) {
            std::uint32_t pos = (in & kRemoteBit)
                                    ? n_local_inputs + (in & ~kRemoteBit)
                                    : in;
            block.edges.emplace_back(pos, out);
        }

        // remotes aggregated by layer l sit at hop L-l+1
        if (!remote_list.empty()) {
            int hop = L - l + 1;
            auto& at_hop = cg.remote_at_hop[static_cast<std::size_t>(hop)];
            for (LocalIdx r : remote_list) at_hop.push_back(sg.global_id(r));
            std::sort(at_hop.begin(), at_hop.end());
        }

        frontier = std::move(next);  // locals only; remotes never expand
    }
    return cg;
}

std::vector<std::vector<LocalIdx>> minibatches(std::vector<LocalIdx> nodes,
                                               std::size_t batch_size,
                                               Rng& rng) {
    if (batch_size < 1) throw ValidationError("minibatches: batch_size >= 1");
    rng.shuffle(nodes);
    std::vector<std::vector<LocalIdx>> out;
    for (std::size_t i = 0; i < nodes.size(); i += batch_size) {
        std::size_t end = std::min(nodes.size(), i + batch_size);
        out.emplace_back(nodes.begin() + static_cast<std::ptrdiff_t>(i),
                         nodes.begin() + static_cast<std::ptrdiff_t>(end));
    }
    return out;
}

}  // namespace fedgnn

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fedgnn/matrix.hpp"
#include "fedgnn/rng.hpp"
#include "fedgnn/sampler.hpp"

namespace fedgnn {

enum class LayerKind { GraphConv, SageConv };

LayerKind parse_layer_kind(const std::string& s);
std::string to_string(LayerKind k);

// GraphConv layers use `w`; SageConv layers use `w_self` and `w_neigh`.
struct LayerWeights {
    Matrix w;
    Matrix w_self;
    Matrix w_neigh;
};

struct GNNModel {
    LayerKind kind = LayerKind::GraphConv;
    int num_layers = 0;  // L
    std::size_t input_dim = 0;
    std::size_t hidden_dim = 0;
    std::size_t num_classes = 0;
    std::vector<LayerWeights> layers;  // size L

    std::size_t layer_in_dim(int layer) const {  // layer is 1-based
        return layer == 1 ? input_dim : hidden_dim;
    }
    std::size_t layer_out_dim(int layer) const {
        return layer == num_layers ? num_classes : hidden_dim;
    }
    void validate() const;
};

// Glorot-uniform init with a seeded RNG so runs are reproducible.
GNNModel init_model(LayerKind kind, int num_layers, std::size_t input_dim,
                    std::size_t hidden_dim, std::size_t num_classes,
                    std::uint64_t seed);

struct LayerActivation {
    Matrix aggregated;  // x^l, post-AGGREGATE
    Matrix combined;    // h^l, post-COMBINE (and activation)
};

// aggregated[u] = sum over in-edges and the implicit self-loop of
// h_in[v] / sqrt((d_u + 1)(d_v + 1)), degrees counted within the block.
// combined = ReLU(aggregated * w) when apply_relu, else aggregated * w.
LayerActivation graphconv_forward(const SampledBlock& block, const Matrix& h_in,
                                  const Matrix& w, bool apply_relu);

// aggregated[u] = mean of in-neighbor rows (zero when none);
// combined = act(h_in[u] * w_self + aggregated * w_neigh).
LayerActivation sageconv_forward(const SampledBlock& block, const Matrix& h_in,
                                 const Matrix& w_self, const Matrix& w_neigh,
                                 bool apply_relu);

// Lookup for cached remote embeddings: fills `out` (dim doubles) with the
// h^layer row of `id`, returning false when absent.
using RemoteLookup =
    std::function<bool(int layer, NodeId id, double* out, std::size_t dim)>;

struct ForwardTrace {
    std::vector<Matrix> inputs;           // per block, post-injection h^{l-1}
    std::vector<LayerActivation> layers;  // per block
};

// Chains the block forwards. `inputs` holds h^0 rows for blocks[0]'s input
// nodes. Before layer l runs, remote input rows are overwritten with cached
// h^{l-1} embeddings; a missing (layer, node) raises CacheMissError with the
// full missing set. Returns logits rows for the seed nodes.
Matrix model_forward(const GNNModel& model, const ComputationGraph& cg,
                     const Matrix& inputs, const RemoteLookup& remote,
                     ForwardTrace* trace = nullptr);

// Mean softmax cross-entropy over rows.
double softmax_cross_entropy(const Matrix& logits,
                             const std::vector<std::uint32_t>& labels);

struct Gradients {
    double loss = 0.0;
    std::vector<LayerWeights> layers;  // same shapes as the model
};

// Analytic gradients of the mean cross-entropy over seeds w.r.t. every
// weight matrix. Injected remote embeddings are constants for the round:
// no gradient flows into them.
Gradients cross_entropy_backward(const GNNModel& model,
                                 const ComputationGraph& cg,
                                 const Matrix& inputs,
                                 const RemoteLookup& remote,
                                 const std::vector<std::uint32_t>& seed_labels);

struct OptimizerState {
    std::uint64_t step = 0;
    double lr = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::vector<LayerWeights> first_moment;
    std::vector<LayerWeights> second_moment;

    static OptimizerState for_model(const GNNModel& model, double lr);
};

// Standard Adam update with bias correction; increments state.step.
void adam_step(GNNModel& model, const Gradients& grads, OptimizerState& state);

}  // namespace fedgnn

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "courtcast/preprocess.hpp"
#include "courtcast/tracking.hpp"

namespace courtcast {

struct ArchConfig {
    std::size_t input_dim = kMomentDim;
    std::size_t layers = 3;
    std::size_t cells = 32;
    std::size_t embed_dim = 8;
    std::size_t roster = 64;
    std::size_t dense_units = 128;
    std::size_t classes = kNumActions;
    std::size_t window_T = 128;
    double dense_dropout = 0.3;      // on the dense layer's output
    double recurrent_dropout = 0.2;  // variational, on input and recurrent transforms
    bool standardize = true;

    std::size_t layer_input(std::size_t layer) const {
        return layer == 0 ? input_dim : cells;
    }
    std::size_t concat_dim() const { return cells + kPlayersOnCourt * embed_dim; }
    void validate() const;

    bool operator==(const ArchConfig&) const = default;
};

// Dense row-major matrix. Small enough here that hand-rolled kernels beat
// pulling in a linear-algebra dependency.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    std::span<double> row(std::size_t i) { return {a.data() + i * cols, cols}; }
    std::span<const double> row(std::size_t i) const { return {a.data() + i * cols, cols}; }

    bool operator==(const Mat&) const = default;
};

using Vec = std::vector<double>;

// Gate order used throughout: input, forget, candidate, output.
enum Gate { kGateInput = 0, kGateForget = 1, kGateCandidate = 2, kGateOutput = 3 };

struct LstmLayerParams {
    std::array<Mat, 4> U;  // cells x layer_input
    std::array<Mat, 4> W;  // cells x cells
    std::array<Vec, 4> b;  // cells

    bool operator==(const LstmLayerParams&) const = default;
};

struct ModelParams {
    Mat embedding;  // roster x embed_dim
    std::vector<LstmLayerParams> lstm;
    Mat dense_w;  // dense_units x concat_dim
    Vec dense_b;
    Mat out_w;  // classes x dense_units
    Vec out_b;

    bool operator==(const ModelParams&) const = default;
};

// Visits every parameter tensor in a fixed order (used by the optimizer,
// checkpointing and finite-difference checks).
template <typename Params, typename Fn>
void for_each_tensor(Params&& p, Fn&& fn) {
    fn("embedding", p.embedding.a);
    for (std::size_t l = 0; l < p.lstm.size(); ++l) {
        static const char* gate_names[4] = {"i", "f", "c", "o"};
        for (int g = 0; g < 4; ++g) {
            std::string prefix = "lstm" + std::to_string(l) + "." + gate_names[g];
            fn(prefix + ".U", p.lstm[l].U[g].a);
            fn(prefix + ".W", p.lstm[l].W[g].a);
            fn(prefix + ".b", p.lstm[l].b[g]);
        }
    }
    fn("dense.W", p.dense_w.a);
    fn("dense.b", p.dense_b);
    fn("out.W", p.out_w.a);
    fn("out.b", p.out_b);
}

ModelParams zeros_like(const ArchConfig& arch);
std::size_t param_count(const ModelParams& p);
void accumulate(ModelParams& into, const ModelParams& grads);
void scale(ModelParams& p, double factor);

// Uniform(-0.05, 0.05) embeddings, Glorot fan-based uniform matrices, zero
// biases except the forget gate's, which starts at 1.
ModelParams init_params(const ArchConfig& arch, std::uint64_t seed);

// Variational dropout masks: one input mask and one recurrent mask per layer
// plus the dense-output mask, each sampled once per sequence and reused at
// every timestep. Entries are Bernoulli(keep)/keep.
struct DropoutMasks {
    std::vector<Vec> input;
    std::vector<Vec> recurrent;
    Vec dense;
};

DropoutMasks inference_masks(const ArchConfig& arch);
DropoutMasks sample_dropout_masks(const ArchConfig& arch, std::uint64_t seed);

struct LstmStep {
    Vec h;
    Vec c;
};

// One cell step:
//   i = sigmoid(b_i + U_i x + W_i h_prev)        f = sigmoid(b_f + U_f x + W_f h_prev)
//   c = f*c_prev + i*tanh(b_c + U_c x + W_c h_prev)
//   o = sigmoid(b_o + U_o x + W_o h_prev)        h = o*tanh(c)
// Empty masks mean no dropout.
LstmStep lstm_cell_step(const LstmLayerParams& layer, std::span<const double> x,
                        std::span<const double> h_prev, std::span<const double> c_prev,
                        std::span<const double> input_mask = {},
                        std::span<const double> recurrent_mask = {});

// Concatenation of the embedding rows for the 10 slots in lineup order.
Vec embed_lineup(const Lineup& lineup, const Mat& embedding);
Vec embed_slots(std::span<const PlayerId> slots, const Mat& embedding);

// Max-subtracted softmax; valid for any finite logits.
OutcomeDistribution softmax_logits(std::span<const double> logits);

struct Model {
    ArchConfig arch;
    ChannelStats stats = ChannelStats::identity();
    ModelParams params;
};

Model make_model(const ArchConfig& arch, std::uint64_t init_seed);

// Everything backward() needs, captured by forward().
struct ForwardCache {
    struct Step {
        Vec xm;  // masked (and standardized, for layer 0) input
        Vec hm;  // masked previous hidden state
        Vec i, f, g, o;
        Vec c;
        Vec h;
    };
    std::vector<std::vector<Step>> steps;  // [layer][t]
    Vec concat;
    Vec dense_pre;
    Vec dense_masked;
    Vec logits;
    OutcomeDistribution probs;
    std::array<PlayerId, kPlayersOnCourt> slots{};
    DropoutMasks masks;
    std::size_t T = 0;
    bool valid = false;
};

// Runs the stacked LSTM over the window, concatenates the lineup embedding,
// applies the rectified dense layer, dropout mask and the softmax output.
// Pass inference_masks() (or sample_dropout_masks()) explicitly; cache may be
// null when no backward pass will follow.
OutcomeDistribution net_forward(const Model& model, const Window& window,
                                const DropoutMasks& masks, ForwardCache* cache = nullptr);

// Per-sample negative log-likelihood, computed from the cached logits via
// log-sum-exp.
double nll(const ForwardCache& cache, TerminalAction label);

// Exact analytic gradient of the per-sample NLL, accumulated into grads.
void net_backward(const Model& model, const ForwardCache& cache, TerminalAction label,
                  ModelParams& grads);

// Trained artifact: the model plus the windowing it was trained with and the
// root seed, so downstream commands can default to the same configuration.
struct Checkpoint {
    Model model;
    WindowConfig window;
    std::uint64_t seed = 0;
};

// Versioned textual tensor dump; numeric fields round-trip exactly.
void save_checkpoint(const std::string& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace courtcast

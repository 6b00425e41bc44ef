#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "regft/types.hpp"

namespace regft {

// Flattened context-window model: embed the last W tokens, concatenate,
// affine -> tanh -> affine over the vocabulary. Small enough for exact
// hand-written gradients and finite-difference checks.
struct Architecture {
    int vocab_size = 0;
    int context_window = 0;
    int embed_dim = 0;
    int hidden_dim = 0;

    std::size_t param_count() const {
        const auto v = static_cast<std::size_t>(vocab_size);
        const auto w = static_cast<std::size_t>(context_window);
        const auto d = static_cast<std::size_t>(embed_dim);
        const auto h = static_cast<std::size_t>(hidden_dim);
        return v * d + (w * d) * h + h + h * v + v;
    }

    // Offsets into the flat parameter vector.
    std::size_t embed_offset() const { return 0; }
    std::size_t w1_offset() const {
        return static_cast<std::size_t>(vocab_size) * embed_dim;
    }
    std::size_t b1_offset() const {
        return w1_offset() + static_cast<std::size_t>(context_window) * embed_dim * hidden_dim;
    }
    std::size_t w2_offset() const { return b1_offset() + hidden_dim; }
    std::size_t b2_offset() const {
        return w2_offset() + static_cast<std::size_t>(hidden_dim) * vocab_size;
    }

    friend bool operator==(const Architecture&, const Architecture&) = default;
};

void validate_architecture(const Architecture& arch);

struct PolicyParams {
    Architecture arch;
    std::vector<double> values;
    std::uint64_t version = 0;
};

// Uniform init in [-0.05, 0.05], deterministic in the seed.
PolicyParams init_params(const Architecture& arch, std::uint64_t seed);

PolicyParams snapshot(const PolicyParams& params);
// Replaces the live values with the snapshot and bumps the version.
void restore(PolicyParams& live, const PolicyParams& snap);

struct DecodeConfig {
    double temperature = 0.7;
    double top_p = 0.9;
    int max_tokens = 16384;
};

void validate_decode_config(const DecodeConfig& decode);

// Scratch buffers reused across forward/backward calls.
class PolicyWorkspace {
public:
    std::vector<int> context;
    std::vector<double> x, z, act, logits, probs;
    std::vector<double> d_logits, d_act, d_z, d_x;

    void prepare(const Architecture& arch);
};

// Logits for one context of exactly `context_window` token ids (callers
// left-pad with the pad token). Deterministic in (params, context).
void compute_logits(const PolicyParams& params, std::span<const int> context,
                    std::span<double> out);
std::vector<double> compute_logits(const PolicyParams& params, std::span<const int> context);

struct SequenceLogprob {
    double total = 0.0;
    std::vector<double> per_token;
};

// Sum of conditional log-probabilities of completion tokens given the
// rolling window over prompt ++ completion. Raw model distribution,
// temperature 1, no truncation.
SequenceLogprob sequence_logprob(const PolicyParams& params, std::span<const int> prompt,
                                 std::span<const int> completion);

// Accumulates sum_t weight[t] * d logprob_t / d params into grad
// (grad must have param_count entries; it is not zeroed here).
void accumulate_weighted_logprob_grad(const PolicyParams& params, std::span<const int> prompt,
                                      std::span<const int> completion,
                                      std::span<const double> token_weights,
                                      std::span<double> grad, PolicyWorkspace& ws);

// Gradient of sequence_logprob(...).total with respect to params.
std::vector<double> grad_sequence_logprob(const PolicyParams& params, std::span<const int> prompt,
                                          std::span<const int> completion);

struct SampleResult {
    std::vector<int> tokens;           // includes the EOS token when sampled
    std::vector<double> token_logprobs;  // raw temperature-1 logprobs
    bool hit_eos = false;
};

// Autoregressive sampling: logits / temperature, softmax, nucleus
// truncation (smallest probability-sorted prefix with cumulative mass
// >= top_p, ties broken by ascending token id), renormalize, draw.
// Stops at EOS or max_tokens. Recorded logprobs come from the raw
// untruncated temperature-1 distribution.
SampleResult sample(const PolicyParams& params, std::span<const int> prompt,
                    const DecodeConfig& decode, std::uint64_t seed);

}  // namespace regft

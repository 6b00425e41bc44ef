#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regft/policy.hpp"
#include "regft/types.hpp"

namespace regft {

// A source of completions for a prompt. The toy backend fills tokens and
// per-token logprobs; remote backends fill text only.
class CompletionBackend {
public:
    virtual ~CompletionBackend() = default;

    // One trajectory per seed. Implementations must be deterministic in
    // (prompt, decode, seed) and independent of call interleaving.
    virtual std::vector<Trajectory> complete_batch(const std::string& prompt,
                                                   const DecodeConfig& decode,
                                                   std::span<const std::uint64_t> seeds) = 0;
};

class ToyBackend final : public CompletionBackend {
public:
    explicit ToyBackend(const PolicyParams& params, int workers = 1)
        : params_(&params), workers_(workers) {}

    std::vector<Trajectory> complete_batch(const std::string& prompt, const DecodeConfig& decode,
                                           std::span<const std::uint64_t> seeds) override;

private:
    const PolicyParams* params_;
    int workers_;
};

}  // namespace regft

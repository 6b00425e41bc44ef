#pragma once

#include <string>
#include <vector>

#include "regft/backend.hpp"
#include "regft/policy.hpp"

namespace regft {

// JSON-over-HTTP completion client. Request:
//   {"prompt": string, "n": int, "temperature": float, "top_p": float,
//    "max_tokens": int}
// Response: {"choices": [{"text": string}, ...]}.
struct RemoteConfig {
    std::string endpoint;        // e.g. "http://127.0.0.1:8801/v1/completions"
    int timeout_seconds = 30;
    int max_retries = 3;         // total attempts
};

// n completion texts, in response order. Sends nothing when n == 0.
// Network/protocol failures retry up to max_retries attempts, then throw
// RemoteError carrying the attempt count and the last received count.
std::vector<std::string> remote_complete(const RemoteConfig& config, const std::string& prompt,
                                         const DecodeConfig& decode, int n);

class RemoteBackend final : public CompletionBackend {
public:
    explicit RemoteBackend(RemoteConfig config) : config_(std::move(config)) {}

    // Seeds are ignored (the remote service owns its randomness); the
    // batch size is seeds.size(). Trajectories carry text only.
    std::vector<Trajectory> complete_batch(const std::string& prompt, const DecodeConfig& decode,
                                           std::span<const std::uint64_t> seeds) override;

private:
    RemoteConfig config_;
};

}  // namespace regft

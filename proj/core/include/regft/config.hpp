#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "regft/dapo.hpp"
#include "regft/policy.hpp"
#include "regft/remote.hpp"
#include "regft/rollout.hpp"
#include "regft/sft.hpp"

namespace regft {

// Full experiment configuration. Flat key = value files; flags override
// file values; unknown keys are rejected by name.
struct RunConfig {
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    std::string backend = "toy";  // "toy" | "remote"
    int workers = 1;

    std::string train_corpus;
    std::string eval_corpus;    // optional held-out set
    std::string warmup_corpus;  // optional base-policy stage

    Architecture arch{/*vocab_size*/ 0, /*context_window*/ 112, /*embed_dim*/ 4,
                      /*hidden_dim*/ 40};  // vocab_size 0 = use the toy vocabulary

    DecodeConfig decode{0.7, 0.9, 256};
    HintSpec hint{0.8, 1};
    RemoteConfig remote{"", 30, 3};

    int classify_samples = 16;
    double classify_threshold = 0.25;
    int explore_samples = 64;

    int sft_cap = 4;
    SftTrainConfig sft{3, 1e-3, 32, 0.01, 0};
    SftTrainConfig warmup{4, 1e-3, 32, 0.01, 0};

    RlConfig rl;
    int rl_steps = 10;
    int rl_eval_every = 0;
    int rl_eval_samples = 16;

    std::vector<int> report_ks{1, 4, 16, 64};
    int report_samples = 64;

    // Applies every replica constant for the given group size:
    // temperature 0.7, top_p 0.9, max_tokens 16384, lr 1e-6, warmup 20,
    // eps 0.2/0.28, minibatch 2048, prompt batch 512 (G=16) / 128 (G=64),
    // 4 updates per rollout, hard threshold 0.25 at 16 samples, hint 0.8.
    static RunConfig paper_replica(int group_size);

    void set_key(const std::string& key, const std::string& value);
    std::string dump() const;  // sorted "key = value" lines
    void validate() const;
};

RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(const std::string& text);

// Default output root from the environment, "out" otherwise.
std::string default_output_root();

}  // namespace regft

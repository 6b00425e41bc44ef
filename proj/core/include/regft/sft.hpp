#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "regft/policy.hpp"
#include "regft/analytics.hpp"
#include "regft/types.hpp"

namespace regft {

enum class SftSource { ReferenceDirect, SelfGenerated, GuidedGenerated };

const char* to_string(SftSource source);
SftSource sft_source_from_string(const std::string& s);

struct SftExample {
    std::string problem_id;
    std::vector<int> prompt_tokens;
    std::vector<int> target_tokens;
    SftSource source = SftSource::SelfGenerated;
};

// Up to `cap_per_problem` distinct verified-correct standard trajectories
// per hard problem, shortest first; prompt is the standard prompt.
std::vector<SftExample> build_reft_dataset(std::span<const Problem> problems,
                                           std::span<const TrajectoryGroup> standard_groups,
                                           std::span<const DifficultyLabel> labels,
                                           int cap_per_problem);

// Union of the ReFT selection and guided-correct trajectories, hard
// problems only. Guided targets are re-prompted: the stored prompt is the
// standard prompt, never the hinted one. The ReFT selection is kept in
// full so the ReGFT dataset is a superset; guided examples fill the
// remaining cap slots.
std::vector<SftExample> build_regft_dataset(std::span<const Problem> problems,
                                            std::span<const TrajectoryGroup> standard_groups,
                                            std::span<const TrajectoryGroup> guided_groups,
                                            std::span<const DifficultyLabel> labels,
                                            int cap_per_problem);

// One example per hard problem with the reference solution as target.
// References that do not tokenize losslessly are skipped and counted.
std::vector<SftExample> build_direct_reference_dataset(std::span<const Problem> problems,
                                                       std::span<const DifficultyLabel> labels,
                                                       int* skipped = nullptr);

void write_sft_dataset(const std::filesystem::path& path, std::span<const SftExample> examples);
std::vector<SftExample> load_sft_dataset(const std::filesystem::path& path);

struct SftTrainConfig {
    int epochs = 3;
    double learning_rate = 1e-3;
    int batch_size = 32;
    double weight_decay = 0.01;
    std::uint64_t seed = 0;
};

struct SftTrainResult {
    PolicyParams params;
    std::vector<double> epoch_loss;  // mean per-token NLL per epoch
};

// Minimizes mean per-token negative log-likelihood of targets given
// prompts with AdamW; deterministic in the seed.
SftTrainResult train_sft(const PolicyParams& init, std::span<const SftExample> dataset,
                         const SftTrainConfig& config, int workers = 1);

}  // namespace regft

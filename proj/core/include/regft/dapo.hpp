#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "regft/adamw.hpp"
#include "regft/analytics.hpp"
#include "regft/policy.hpp"
#include "regft/types.hpp"

namespace regft {

struct RlConfig {
    double eps_low = 0.2;
    double eps_high = 0.28;
    double learning_rate = 1e-3;   // replica profile uses 1e-6
    int warmup_rollout_steps = 20;
    int group_size = 16;
    int prompt_batch = 512;
    int minibatch_trajectories = 2048;
    int updates_per_rollout = 4;
    double advantage_epsilon = 1e-8;
    int resample_budget = 2048;    // total groups sampled per step, initial batch included
};

void validate_rl_config(const RlConfig& config);

struct AdvantagedGroup {
    TrajectoryGroup group;
    std::vector<double> advantages;  // one scalar per trajectory
};

// A_i = (r_i - mean(r)) / (popstd(r) + eps). Rejects uniform-reward groups.
AdvantagedGroup group_advantages(const TrajectoryGroup& group, double eps = 1e-8);

struct FilterResult {
    std::vector<TrajectoryGroup> kept;
    int discarded_all_correct = 0;
    int discarded_all_wrong = 0;
};

// Drops every group whose rewards are all 0 or all 1.
FilterResult dynamic_sampling_filter(std::vector<TrajectoryGroup> groups);

// min(ratio * A, clip(ratio, 1-eps_low, 1+eps_high) * A). The training
// loss is the negative token mean of this.
double clipped_objective(double ratio, double advantage, double eps_low, double eps_high);

double warmup_lr(double base_lr, int rollout_step, int warmup_rollout_steps);

struct StepReport {
    int step = 0;
    int kept_groups = 0;
    int discarded_all_correct = 0;
    int discarded_all_wrong = 0;
    double mean_reward = 0.0;   // over every trajectory sampled this step
    double clip_fraction = 0.0;
    double lr = 0.0;
    double mean_ratio = 0.0;
    bool skipped = false;
    // Diagnostics for the identity-ratio invariant on the first minibatch.
    double first_minibatch_max_ratio_dev = 0.0;
};

std::string step_report_to_json(const StepReport& report);
void write_step_reports(const std::filesystem::path& path, std::span<const StepReport> reports);

// One rollout step: snapshot, sample prompt_batch groups (standard mode),
// dynamic-sampling filter with bounded resampling, group advantages, then
// up to updates_per_rollout clipped-loss updates on minibatches of
// minibatch_trajectories with ratios against the snapshot.
StepReport rl_step(PolicyParams& params, AdamW& optimizer, std::span<const Problem> pool,
                   const RlConfig& config, const DecodeConfig& decode, int rollout_step,
                   std::uint64_t run_seed, int workers = 1);

struct RlRunOptions {
    int total_steps = 0;
    DecodeConfig decode;
    int eval_every = 0;          // 0 disables periodic evaluation
    int eval_samples = 16;
    std::vector<Problem> eval_problems;
    int workers = 1;
};

struct RlRunResult {
    PolicyParams params;
    std::vector<StepReport> reports;
    std::vector<MetricRow> metrics;
};

// Iterates rl_step; per-step reports become metrics, held-out pass rate is
// evaluated at the configured cadence. Deterministic in the seed.
RlRunResult run_rl(const PolicyParams& init, std::span<const Problem> corpus,
                   const RlConfig& config, const RlRunOptions& options, std::uint64_t seed);

// Mean per-problem pass@1 (fraction correct of eval_samples) on a problem
// set; shared by run_rl and the pipeline report stage.
double evaluate_pass_rate(const PolicyParams& params, std::span<const Problem> problems,
                          const DecodeConfig& decode, int samples_per_problem,
                          std::uint64_t seed, int workers = 1);

}  // namespace regft

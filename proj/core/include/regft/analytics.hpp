#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "regft/types.hpp"

namespace regft {

struct ProblemStats {
    std::string problem_id;
    int samples = 0;
    int correct = 0;
    SampleMode mode = SampleMode::Standard;
};

// Per-problem (N, c) from a flat trajectory list, grouped by problem id in
// first-appearance order.
std::vector<ProblemStats> collect_stats(std::span<const Trajectory> trajectories);

enum class Difficulty { Hard, NotHard };

struct DifficultyLabel {
    std::string problem_id;
    Difficulty label = Difficulty::NotHard;
    int basis_samples = 16;
    double threshold = 0.25;
};

// Unbiased estimator 1 - C(N-c,k)/C(N,k), evaluated in product form so
// intermediates stay in [0,1] for N up to 1e6.
double pass_at_k(int samples, int correct, int k);

// Hard iff c/N < threshold, strict inequality. expected_samples guards the
// replica protocol (pass 0 to disable the check).
DifficultyLabel classify_difficulty(const ProblemStats& stats, double threshold = 0.25,
                                    int expected_samples = 16);

struct OverlapReport {
    double solved_standard = 0.0;
    double solved_guided = 0.0;
    double only_guided = 0.0;
    double only_standard = 0.0;
    double both = 0.0;
    double neither = 0.0;
    int total_problems = 0;
};

// "Solved" means at least one correct sample. Both stat sets must cover
// identical problem ids.
OverlapReport solve_set_overlap(std::span<const ProblemStats> standard_stats,
                                std::span<const ProblemStats> guided_stats);

struct MetricRow {
    int step = 0;
    std::string split;
    std::string metric;
    double value = 0.0;
};

struct PassAtKRow {
    std::string checkpoint;
    int k = 0;
    double estimate = 0.0;
    int samples = 0;
    int c_total = 0;
};

// CSV schema: step,split,metric,value
void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricRow> rows);
std::vector<MetricRow> load_metrics_csv(const std::filesystem::path& path);

// CSV schema: checkpoint,k,estimate,N,c_total
void write_passk_csv(const std::filesystem::path& path, std::span<const PassAtKRow> rows);

// Mean over problems of pass_at_k(N, c_i, k), one row per k.
std::vector<PassAtKRow> passk_table(const std::string& checkpoint,
                                    std::span<const ProblemStats> stats,
                                    std::span<const int> ks);

}  // namespace regft

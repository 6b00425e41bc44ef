#pragma once

#include <optional>
#include <string>
#include <vector>

namespace regft {

struct Problem {
    std::string id;
    std::string question;
    std::string reference_solution;
    std::string gold_answer;
};

enum class SampleMode { Standard, Guided };

const char* to_string(SampleMode mode);
SampleMode sample_mode_from_string(const std::string& s);

// One sampled completion. `tokens`/`token_logprobs` are authoritative for
// the toy backend; remote-backend trajectories carry text only and leave
// both arrays empty.
struct Trajectory {
    std::string problem_id;
    std::vector<int> tokens;
    std::string text;
    std::vector<double> token_logprobs;
    SampleMode mode = SampleMode::Standard;
    int reward = 0;
    std::optional<std::string> extracted_answer;
};

// The G rollouts for one prompt in one rollout step: the unit of advantage
// normalization and dynamic-sampling filtering.
struct TrajectoryGroup {
    std::string problem_id;
    std::vector<Trajectory> trajectories;
    int rollout_step = 0;
};

// Throws ValidationError when a trajectory violates its invariants
// (logprob length mismatch, positive logprob, reward without answer).
void validate_trajectory(const Trajectory& t);

}  // namespace regft

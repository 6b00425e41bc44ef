#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regft/backend.hpp"
#include "regft/types.hpp"

namespace regft {

struct HintSpec {
    double fraction = 0.8;
    int minimum_sentences = 1;
};

void validate_hint_spec(const HintSpec& spec);

// Sentence segmentation aware of math delimiters: sentence-final
// punctuation inside $...$, \(...\), \[...\] or a balanced \boxed{...}
// does not split; newlines end the current sentence.
std::vector<std::string> split_sentences(std::string_view text);

// First max(minimum_sentences, floor(fraction * n)) sentences of the
// reference solution, with the original whitespace between them.
std::string build_hint(std::string_view reference_solution, const HintSpec& spec);

std::string build_prompt(const Problem& problem, SampleMode mode,
                         std::optional<std::string_view> hint = std::nullopt);

std::uint64_t trajectory_seed(std::uint64_t run_seed, std::string_view problem_id,
                              int sample_index);

struct GroupSampleStats {
    // Correct guided trajectories whose hint already contained the gold
    // answer text; diagnostic only, nothing is filtered.
    int answer_in_hint_copies = 0;
};

// G independently seeded trajectories for one problem, each verified.
TrajectoryGroup sample_group(CompletionBackend& backend, const Problem& problem, SampleMode mode,
                             int group_size, const DecodeConfig& decode, std::uint64_t run_seed,
                             int rollout_step = 0, const HintSpec& hint_spec = {},
                             GroupSampleStats* stats = nullptr);

}  // namespace regft

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "regft/config.hpp"
#include "regft/policy.hpp"

namespace regft {

// Stage sequence for the full experiment:
//   warmup -> classify-sample (16x standard) -> classify ->
//   explore-sample (64x standard on all, guided on hard) ->
//   datasets (reft / regft / direct) -> sft (3 checkpoints) ->
//   rl (raw + 3 SFT inits) -> report.
// Each stage writes a manifest with input hashes; with resume enabled,
// stages whose manifests match are skipped.
struct PipelineResult {
    std::vector<std::string> executed_stages;
    std::vector<std::string> skipped_stages;
};

PipelineResult run_pipeline(const RunConfig& config, bool resume);

// Stage names in execution order.
const std::vector<std::string>& pipeline_stage_names();

// Params (de)serialization shared by pipeline stages and the CLI.
void save_params(const std::filesystem::path& path, const PolicyParams& params);
PolicyParams load_params(const std::filesystem::path& path);

std::uint64_t hash_file(const std::filesystem::path& path);

}  // namespace regft

#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "regft/types.hpp"

namespace regft {

// JSONL readers/writers. Loading preserves file order and never reorders
// records; writers emit UTF-8, one record per line, no BOM.

std::vector<Problem> load_corpus(const std::filesystem::path& path);
void write_corpus(const std::filesystem::path& path, std::span<const Problem> problems);

std::vector<Trajectory> load_trajectories(const std::filesystem::path& path);
void write_trajectories(const std::filesystem::path& path, std::span<const Trajectory> trajectories);

}  // namespace regft

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "regft/types.hpp"

namespace regft {

enum class ChainOp { Add, Multiply };

struct ChainStep {
    ChainOp op;
    int operand;
};

// Difficulty knob is the chain length; the modulus keeps every value in a
// two-digit range so the toy vocabulary stays small.
struct ChainSpec {
    int modulus = 97;
    int chain_length = 1;
    std::uint64_t seed = 0;
};

void validate_chain_spec(const ChainSpec& spec);

// Deterministic assembly of a problem from explicit chain data.
Problem make_chain_problem(int modulus, int start_value, std::span<const ChainStep> steps,
                           std::string_view id);

// Draws start value and ops from the spec seed; deterministic in the spec.
Problem generate_problem(const ChainSpec& spec, std::string_view id = "syn-0");

// n problems with chain lengths drawn from the weighted distribution,
// ids "syn-<index>".
std::vector<Problem> generate_corpus(int n,
                                     std::span<const std::pair<int, double>> length_weights,
                                     std::uint64_t seed, int modulus = 97);

}  // namespace regft

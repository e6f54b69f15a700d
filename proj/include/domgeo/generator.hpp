#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "domgeo/geometry.hpp"

namespace domgeo {

enum class Distribution {
    Uniform,     // P and Q independent, uniform in [0, 1)^d
    Correlated,  // q_k = (p_{k mod d_real} + u) / 2 with u uniform
    AntiChain,   // q_1 a permutation of (i + 1/2) / n, q_2 = 1 - q_1: nothing dominates
};

std::string_view distribution_name(Distribution d);
/// Throws UsageError for unknown names.
Distribution parse_distribution(std::string_view name);

/// Deterministic in all arguments (std::mt19937_64, 53-bit uniform doubles).
/// Throws UsageError if n, d_real or d_feat is zero.
Dataset gen_dataset(std::size_t n, std::size_t d_real, std::size_t d_feat, std::uint64_t seed,
                    Distribution dist = Distribution::Uniform);

} // namespace domgeo

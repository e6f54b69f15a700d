#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "domgeo/engine.hpp"
#include "domgeo/generator.hpp"

namespace domgeo {

struct BenchRecord {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t d_real = 0;
    std::size_t d_feat = 0;
    std::uint64_t seed = 0;
    std::uint64_t wall_ns = 0;
    WorkCounters work;
};

struct BenchConfig {
    std::vector<Algorithm> algorithms;
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds;
    /// Defaults: d_real = 1, d_feat = 2 if sweep is requested, else 2 and 2.
    std::optional<std::size_t> d_real;
    std::optional<std::size_t> d_feat;
    Distribution distribution = Distribution::Uniform;
    /// Runs per (algorithm, n, seed); the fastest wall time is kept.
    unsigned repeats = 1;
};

/// Checks every algorithm against the dimensions before running anything.
/// One record per (size, seed, algorithm), in that nesting order.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

} // namespace domgeo

#include "domgeo/generator.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace domgeo {

namespace {

// Uniform in [0, 1) from the top 53 bits, independent of library distributions.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

std::string_view distribution_name(Distribution d) {
    switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::Correlated: return "correlated";
    case Distribution::AntiChain: return "antichain";
    }
    return "?";
}

Distribution parse_distribution(std::string_view name) {
    for (Distribution d : {Distribution::Uniform, Distribution::Correlated, Distribution::AntiChain}) {
        if (distribution_name(d) == name) return d;
    }
    throw UsageError("unknown distribution '" + std::string(name) +
                     "' (expected uniform, correlated or antichain)");
}

Dataset gen_dataset(std::size_t n, std::size_t d_real, std::size_t d_feat, std::uint64_t seed,
                    Distribution dist) {
    if (n == 0 || d_real == 0 || d_feat == 0) {
        throw UsageError("gen_dataset: n, d_real and d_feat must be positive");
    }
    std::mt19937_64 rng(seed);
    Dataset ds(d_real, d_feat);
    std::vector<double> p(d_real), q(d_feat);

    std::vector<std::size_t> perm;
    if (dist == Distribution::AntiChain) {
        perm.resize(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        // Fisher-Yates with the same generator, so the stream is fully pinned.
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (double& v : p) v = unit(rng);
        switch (dist) {
        case Distribution::Uniform:
            for (double& v : q) v = unit(rng);
            break;
        case Distribution::Correlated:
            for (std::size_t k = 0; k < d_feat; ++k) q[k] = 0.5 * p[k % d_real] + 0.5 * unit(rng);
            break;
        case Distribution::AntiChain:
            if (d_feat == 1) {
                q[0] = 0.5;
            } else {
                q[0] = (static_cast<double>(perm[i]) + 0.5) / static_cast<double>(n);
                q[1] = 1.0 - q[0];
                for (std::size_t k = 2; k < d_feat; ++k) q[k] = unit(rng);
            }
            break;
        }
        ds.add(p, q);
    }
    return ds;
}

} // namespace domgeo

#include "domgeo/bench.hpp"

#include <algorithm>
#include <chrono>

namespace domgeo {

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    if (config.algorithms.empty() || config.sizes.empty() || config.seeds.empty()) {
        throw UsageError("bench: algorithms, sizes and seeds must be non-empty");
    }
    if (config.repeats == 0) throw UsageError("bench: repeats must be positive");
    const bool has_sweep = std::find(config.algorithms.begin(), config.algorithms.end(),
                                     Algorithm::Sweep) != config.algorithms.end();
    const std::size_t d_real = config.d_real.value_or(has_sweep ? 1 : 2);
    const std::size_t d_feat = config.d_feat.value_or(2);
    for (Algorithm a : config.algorithms) check_algorithm_dims(a, d_real, d_feat);
    for (std::size_t n : config.sizes) {
        if (n == 0) throw UsageError("bench: sizes must be positive");
    }

    std::vector<BenchRecord> records;
    for (std::size_t n : config.sizes) {
        for (std::uint64_t seed : config.seeds) {
            const Dataset ds = gen_dataset(n, d_real, d_feat, seed, config.distribution);
            for (Algorithm a : config.algorithms) {
                BenchRecord rec{std::string(algorithm_name(a)), n, d_real, d_feat, seed, 0, {}};
                for (unsigned r = 0; r < config.repeats; ++r) {
                    WorkCounters work;
                    const auto start = std::chrono::steady_clock::now();
                    const DominatorResult result = run_algorithm(a, ds, &work);
                    const auto stop = std::chrono::steady_clock::now();
                    const auto ns = static_cast<std::uint64_t>(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
                    if (r == 0 || ns < rec.wall_ns) rec.wall_ns = ns;
                    rec.work = work;
                }
                records.push_back(rec);
            }
        }
    }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "algorithm,n,d_real,d_feat,seed,wall_ns,node_visits,indexes_built,indexed_points\n";
    for (const BenchRecord& r : records) {
        out << r.algorithm << ',' << r.n << ',' << r.d_real << ',' << r.d_feat << ',' << r.seed << ','
            << r.wall_ns << ',' << r.work.node_visits << ',' << r.work.indexes_built << ','
            << r.work.indexed_points << '\n';
    }
}

} // namespace domgeo

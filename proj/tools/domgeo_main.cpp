// domgeo: nearest-dominating-point solver, generator and benchmark driver.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "domgeo/bench.hpp"
#include "domgeo/dataset_io.hpp"
#include "domgeo/engine.hpp"
#include "domgeo/generator.hpp"
#include "domgeo/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct SolveArgs {
    std::string algo;
    std::string input;
    std::string output;
    bool verify = false;
};

struct BenchArgs {
    std::vector<std::string> algos;
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds;
    std::string csv;
    std::size_t d_real = 0;
    std::size_t d_feat = 0;
    std::string distribution = "uniform";
    unsigned repeats = 1;
};

struct GenArgs {
    std::size_t n = 0;
    std::size_t d_real = 2;
    std::size_t d_feat = 2;
    std::uint64_t seed = 1;
    std::string distribution = "uniform";
    std::string output;
};

int run_solve(const SolveArgs& args) {
    const domgeo::Algorithm algo = domgeo::parse_algorithm(args.algo);
    const domgeo::Dataset ds = domgeo::read_dataset_file(args.input);
    domgeo::check_algorithm_dims(algo, ds.d_real(), ds.d_feat());

    const domgeo::DominatorResult result = domgeo::run_algorithm(algo, ds);
    const std::string text = domgeo::format_result(result);
    if (args.output.empty()) {
        std::cout << text;
    } else {
        domgeo::write_text_file(args.output, text);
    }

    if (args.verify) {
        const domgeo::DominatorResult expected = domgeo::brute_nearest_dominator(ds);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (result[i] != expected[i]) {
                std::cerr << "verify: mismatch at point " << i << "\n";
                return kMismatch;
            }
        }
        std::cerr << "verify: " << ds.size() << " points match the brute-force oracle\n";
    }
    return kOk;
}

int run_bench(const BenchArgs& args) {
    domgeo::BenchConfig config;
    for (const std::string& a : args.algos) config.algorithms.push_back(domgeo::parse_algorithm(a));
    config.sizes = args.sizes;
    config.seeds = args.seeds;
    if (args.d_real) config.d_real = args.d_real;
    if (args.d_feat) config.d_feat = args.d_feat;
    config.distribution = domgeo::parse_distribution(args.distribution);
    config.repeats = args.repeats;

    const auto records = domgeo::run_bench(config);
    std::ostringstream csv;
    domgeo::write_bench_csv(csv, records);
    domgeo::write_text_file(args.csv, csv.str());
    return kOk;
}

int run_gen(const GenArgs& args) {
    const domgeo::Dataset ds = domgeo::gen_dataset(args.n, args.d_real, args.d_feat, args.seed,
                                                   domgeo::parse_distribution(args.distribution));
    const std::string text = domgeo::format_dataset(ds);
    if (args.output.empty()) {
        std::cout << text;
    } else {
        domgeo::write_text_file(args.output, text);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nearest dominating point queries over paired real/feature spaces"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Nearest dominator of every point in a dataset");
    solve_cmd->add_option("--algo", solve.algo, "brute | sweep | rangetree | offline")->required();
    solve_cmd->add_option("--input", solve.input, "Dataset file")->required();
    solve_cmd->add_option("--output", solve.output, "Result file (default: stdout)");
    solve_cmd->add_flag("--verify", solve.verify, "Compare with the brute-force oracle");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time algorithms on generated datasets");
    bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms")
        ->required()->delimiter(',');
    bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated point counts")
        ->required()->delimiter(',');
    bench_cmd->add_option("--seeds", bench.seeds, "Comma-separated generator seeds")
        ->required()->delimiter(',');
    bench_cmd->add_option("--csv", bench.csv, "Output CSV file")->required();
    bench_cmd->add_option("--d-real", bench.d_real, "Real dimension (default 1 with sweep, else 2)");
    bench_cmd->add_option("--d-feat", bench.d_feat, "Feature dimension (default 2)");
    bench_cmd->add_option("--distribution", bench.distribution, "uniform | correlated | antichain");
    bench_cmd->add_option("--repeats", bench.repeats, "Runs per cell; the fastest is reported");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated dataset");
    gen_cmd->add_option("--n", gen.n, "Point count")->required();
    gen_cmd->add_option("--d-real", gen.d_real, "Real dimension");
    gen_cmd->add_option("--d-feat", gen.d_feat, "Feature dimension");
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("--distribution", gen.distribution, "uniform | correlated | antichain");
    gen_cmd->add_option("--output", gen.output, "Dataset file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (const char* threads = std::getenv("DOMGEO_THREADS"); threads && std::string(threads) != "1") {
        std::cerr << "error: DOMGEO_THREADS must be 1 (only single-threaded runs are supported)\n";
        return kUsage;
    }

    try {
        if (*solve_cmd) return run_solve(solve);
        if (*bench_cmd) return run_bench(bench);
        return run_gen(gen);
    } catch (const domgeo::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const domgeo::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const domgeo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
}

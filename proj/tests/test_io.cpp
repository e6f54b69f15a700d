#include <doctest.h>

#include <sstream>

#include "domgeo/bench.hpp"
#include "domgeo/dataset_io.hpp"
#include "domgeo/generator.hpp"
#include "domgeo/oracle.hpp"
#include "domgeo/range_tree.hpp"

using namespace domgeo;

namespace {

std::size_t error_line(std::string_view text) {
    try {
        parse_dataset(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("parse_dataset") {
    const Dataset ds = parse_dataset("1 1 2\n0 0 0");
    CHECK(ds.size() == 1);
    CHECK(ds.d_real() == 1);
    CHECK(ds.d_feat() == 2);

    const Dataset c = parse_dataset("# comment\n\n2 2 1\n# row comment\n 1.5\t-2  +3 \r\n1e-3 4 5\n\n");
    CHECK(c.size() == 2);
    CHECK(c.real(0)[1] == -2.0);
    CHECK(c.feature(0, 0) == 3.0);
    CHECK(c.real(1)[0] == 1e-3);

    CHECK(parse_dataset("0 2 2\n").size() == 0);
}

TEST_CASE("parse errors name the line") {
    CHECK(error_line("2 1 2\n0 0 0") == 2);
    CHECK(error_line("2 1 2\n0 0 0\n") == 2);
    CHECK(error_line("") == 1);
    CHECK(error_line("1 1\n0 0") == 1);
    CHECK(error_line("x 1 2\n0 0 0") == 1);
    CHECK(error_line("1 0 2\n0 0") == 1);
    CHECK(error_line("1 1 2\n0 0") == 2);
    CHECK(error_line("1 1 2\n0 0 0 0") == 2);
    CHECK(error_line("2 1 2\n0 0 0\n# c\n1 nan 0") == 4);
    CHECK(error_line("1 1 2\ninf 0 0") == 2);
    CHECK(error_line("1 1 2\n0 0 0x1") == 2);
    CHECK(error_line("1 1 2\n0 0 0\n1 1 1") == 3);
    CHECK(error_line("1 1 2\n0 0 1e999") == 2);
}

TEST_CASE("six-point dataset round-trips") {
    const double six[6][2] = {{1, 3}, {3, 8}, {4, 2}, {6.5, 1}, {7, 4}, {9, 6}};
    Dataset ds(2, 2);
    for (const auto& q : six) ds.add(q, q);
    const std::string text = format_dataset(ds);
    CHECK(parse_dataset(text) == ds);
    CHECK(format_dataset(parse_dataset(text)) == text);

    const Dataset g = gen_dataset(200, 2, 3, 99);
    CHECK(parse_dataset(format_dataset(g)) == g);
}

TEST_CASE("format_result") {
    const DominatorResult r{Neighbor{1, 1.0}, std::nullopt, Neighbor{1, 16.0}, Neighbor{0, 0.1}};
    CHECK(format_result(r) == "0 1 1\n1 - -\n2 1 16\n3 0 0.10000000000000001\n");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("file errors") {
    CHECK_THROWS_AS(read_dataset_file("/nonexistent/dir/x.txt"), IoError);
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/x.txt", "x"), IoError);
}

TEST_CASE("gen_dataset") {
    CHECK(gen_dataset(5, 1, 2, 7) == gen_dataset(5, 1, 2, 7));
    CHECK_FALSE(gen_dataset(5, 1, 2, 7) == gen_dataset(5, 1, 2, 8));
    CHECK_THROWS_AS(gen_dataset(0, 1, 2, 7), UsageError);
    CHECK_THROWS_AS(gen_dataset(5, 0, 2, 7), UsageError);
    CHECK_THROWS_AS(gen_dataset(5, 1, 0, 7), UsageError);
    CHECK(parse_distribution("antichain") == Distribution::AntiChain);
    CHECK_THROWS_AS(parse_distribution("normal"), UsageError);

    const Dataset u = gen_dataset(10000, 2, 3, 1);
    bool inside = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (auto part : {u.real(i), u.feature(i)}) {
            for (double v : part) inside &= v >= 0.0 && v <= 1.0;
        }
    }
    CHECK(inside);

    for (std::size_t d_feat : {1u, 2u, 3u}) {
        const Dataset a = gen_dataset(300, 2, d_feat, 3, Distribution::AntiChain);
        CHECK(brute_nearest_dominator(a) == DominatorResult(300));
    }

    const Dataset c = gen_dataset(2000, 1, 2, 4, Distribution::Correlated);
    double cov = 0;
    for (std::size_t i = 0; i < c.size(); ++i) cov += (c.real(i)[0] - 0.5) * (c.feature(i, 0) - 0.5);
    CHECK(cov / 2000 > 0.02);  // independent draws would give about 0
}

TEST_CASE("run_bench") {
    BenchConfig cfg;
    cfg.algorithms = {Algorithm::Brute, Algorithm::Sweep};
    cfg.sizes = {64};
    cfg.seeds = {1, 2, 3};
    const auto recs = run_bench(cfg);
    REQUIRE(recs.size() == 6);
    CHECK(recs[0].d_real == 1);
    CHECK(recs[0].d_feat == 2);
    CHECK(recs[1].algorithm == "sweep");
    CHECK(recs[5].seed == 3);

    std::ostringstream csv;
    write_bench_csv(csv, recs);
    const std::string text = csv.str();
    CHECK(text.rfind("algorithm,n,d_real,d_feat,seed,wall_ns,node_visits,indexes_built,indexed_points\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);

    // Counters repeat exactly.
    const auto again = run_bench(cfg);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(again[i].work.node_visits == recs[i].work.node_visits);
    }

    cfg.algorithms = {Algorithm::RangeTree};
    cfg.sizes = {100, 200};
    cfg.seeds = {5};
    for (const BenchRecord& r : run_bench(cfg)) {
        CHECK(r.d_real == 2);
        CHECK(r.work.indexed_points <= RangeTree::indexed_points_bound(r.n, r.d_feat));
    }

    cfg.algorithms = {Algorithm::Sweep, Algorithm::Offline};
    CHECK_THROWS_AS(run_bench(cfg), UsageError);
    cfg.algorithms = {Algorithm::Offline};
    cfg.sizes = {0};
    CHECK_THROWS_AS(run_bench(cfg), UsageError);
}

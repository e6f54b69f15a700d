#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "domgeo/engine.hpp"
#include "domgeo/oracle.hpp"
#include "test_support.hpp"

using namespace domgeo;

namespace {

Dataset three_points() {
    Dataset ds(1, 2);
    const double p[3] = {0, 1, 5};
    const double q[3][2] = {{0, 0}, {2, 2}, {1, 1}};
    for (int i = 0; i < 3; ++i) ds.add(std::span<const double>(&p[i], 1), q[i]);
    return ds;
}

void add(Dataset& ds, std::vector<double> p, std::vector<double> q) { ds.add(p, q); }

// Every reported pair is a real dominator at the recomputed distance.
void validate(const Dataset& ds, const DominatorResult& r) {
    REQUIRE(r.size() == ds.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r[i]) continue;
        REQUIRE(dominates(ds.feature(r[i]->id), ds.feature(i)));
        REQUIRE(r[i]->sqdist == squared_distance(ds.real(i), ds.real(r[i]->id)));
    }
}

void require_equal(const DominatorResult& got, const DominatorResult& want, const char* what) {
    const long bad = testing::first_mismatch(got, want);
    if (bad >= 0) {
        FAIL(what << ": point " << bad << " got " << testing::describe(got[bad]) << " want "
                  << testing::describe(want[bad]));
    }
}

} // namespace

TEST_CASE("three-point instance") {
    const Dataset ds = three_points();
    const DominatorResult want{Neighbor{1, 1.0}, std::nullopt, Neighbor{1, 16.0}};
    CHECK(brute_nearest_dominator(ds) == want);
    CHECK(nearest_dominator_sweep(ds) == want);
    CHECK(nearest_dominator_rangetree(ds) == want);
}

TEST_CASE("trivial instances") {
    Dataset one(1, 2);
    add(one, {3}, {1, 1});
    CHECK(nearest_dominator_sweep(one) == DominatorResult{std::nullopt});
    CHECK(nearest_dominator_rangetree(one) == DominatorResult{std::nullopt});
    Dataset one2(2, 2);
    add(one2, {3, 4}, {1, 1});
    CHECK(nearest_dominator_offline(one2) == DominatorResult{std::nullopt});

    Dataset same(1, 2);
    for (int i = 0; i < 20; ++i) add(same, {double(i % 3)}, {0.5, 0.5});
    CHECK(nearest_dominator_sweep(same) == DominatorResult(20));
    CHECK(nearest_dominator_rangetree(same) == DominatorResult(20));

    CHECK(nearest_dominator_sweep(Dataset(1, 2)).empty());
    CHECK(nearest_dominator_rangetree(Dataset(1, 2)).empty());
    CHECK(nearest_dominator_offline(Dataset(2, 2)).empty());
}

TEST_CASE("dimension checks") {
    CHECK_THROWS_AS(nearest_dominator_sweep(Dataset(2, 2)), UsageError);
    CHECK_THROWS_AS(nearest_dominator_sweep(Dataset(1, 3)), UsageError);
    CHECK_THROWS_AS(nearest_dominator_rangetree(Dataset(3, 2)), UsageError);
    CHECK_THROWS_AS(nearest_dominator_rangetree(Dataset(1, 1)), UsageError);
    CHECK_THROWS_AS(nearest_dominator_offline(Dataset(1, 2)), UsageError);
    CHECK_THROWS_AS(nearest_dominator_offline(Dataset(2, 3)), UsageError);
    CHECK_NOTHROW(check_algorithm_dims(Algorithm::Brute, 5, 4));
    CHECK(parse_algorithm("offline") == Algorithm::Offline);
    CHECK(algorithm_name(Algorithm::RangeTree) == "rangetree");
    CHECK_THROWS_AS(parse_algorithm("kdtree"), UsageError);
}

TEST_CASE("distinct locations whose squared distances round equal") {
    // 2^53 + 0.5 rounds to 2^53: both dominators sit at the same key, so the
    // farther one wins on its smaller id.
    const double far = -std::ldexp(1.0, 53);
    Dataset right(1, 2);
    add(right, {0.5}, {2, 2});
    add(right, {0.0}, {2, 2});
    add(right, {far}, {1, 1});
    const DominatorResult want = brute_nearest_dominator(right);
    REQUIRE(want[2] == Neighbor{0, std::ldexp(1.0, 106)});
    CHECK(nearest_dominator_sweep(right) == want);
    CHECK(nearest_dominator_rangetree(right) == want);

    Dataset left(1, 2);
    add(left, {-0.5}, {2, 2});
    add(left, {0.0}, {2, 2});
    add(left, {-far}, {1, 1});
    CHECK(nearest_dominator_sweep(left) == brute_nearest_dominator(left));
    CHECK(nearest_dominator_sweep(left)[2]->id == 0);

    Dataset planar(2, 2);
    add(planar, {0.5, 0}, {2, 2});
    add(planar, {0.0, 0}, {2, 2});
    add(planar, {far, 0}, {1, 1});
    CHECK(nearest_dominator_offline(planar) == brute_nearest_dominator(planar));
    CHECK(nearest_dominator_rangetree(planar) == brute_nearest_dominator(planar));
}

TEST_CASE("sweep equals the oracle on random instances") {
    testing::Rng rng(71);
    for (int t = 0; t < 300; ++t) {
        const Dataset ds = testing::random_dataset(rng, 1 + testing::below(rng, 256), 1, 2);
        const DominatorResult got = nearest_dominator_sweep(ds);
        validate(ds, got);
        require_equal(got, brute_nearest_dominator(ds), "sweep");
    }
}

TEST_CASE("rangetree equals the oracle and the sweep") {
    testing::Rng rng(72);
    for (int t = 0; t < 200; ++t) {
        const Dataset ds = testing::random_dataset(rng, 1 + testing::below(rng, 256), 1, 2);
        require_equal(nearest_dominator_rangetree(ds), nearest_dominator_sweep(ds), "rangetree vs sweep");
    }
    for (std::size_t d_real : {1u, 2u}) {
        for (std::size_t d_feat : {2u, 3u, 4u}) {
            for (int t = 0; t < 20; ++t) {
                const Dataset ds = testing::random_dataset(rng, 1 + testing::below(rng, 160), d_real, d_feat);
                const DominatorResult got = nearest_dominator_rangetree(ds);
                validate(ds, got);
                require_equal(got, brute_nearest_dominator(ds), "rangetree");
            }
        }
    }
}

TEST_CASE("rangetree on d_feat = 3, n = 128") {
    testing::Rng rng(73);
    Dataset ds(2, 3);
    for (int i = 0; i < 128; ++i) {
        add(ds, {testing::unit(rng), testing::unit(rng)},
            {testing::unit(rng), testing::unit(rng), testing::unit(rng)});
    }
    CHECK(nearest_dominator_rangetree(ds) == brute_nearest_dominator(ds));
}

TEST_CASE("offline equals the oracle and the rangetree") {
    testing::Rng rng(74);
    for (int t = 0; t < 200; ++t) {
        const Dataset ds = testing::random_dataset(rng, 1 + testing::below(rng, 256), 2, 2);
        const DominatorResult got = nearest_dominator_offline(ds);
        validate(ds, got);
        require_equal(got, brute_nearest_dominator(ds), "offline");
        require_equal(got, nearest_dominator_rangetree(ds), "offline vs rangetree");
    }
}

TEST_CASE("offline on chains") {
    testing::Rng rng(75);
    Dataset anti(2, 2), chain(2, 2);
    for (int i = 0; i < 100; ++i) {
        add(anti, {testing::unit(rng), testing::unit(rng)}, {double(i), double(-i)});
        add(chain, {testing::unit(rng), testing::unit(rng)}, {double(i), double(i)});
    }
    CHECK(nearest_dominator_offline(anti) == DominatorResult(100));
    const DominatorResult got = nearest_dominator_offline(chain);
    CHECK(got == brute_nearest_dominator(chain));
    CHECK_FALSE(got[99]);
    for (int i = 0; i < 99; ++i) CHECK(got[i]->id > PointId(i));
}

TEST_CASE("offline sweep invariant: root holds exactly the points above") {
    testing::Rng rng(76);
    for (int t = 0; t < 30; ++t) {
        const Dataset ds = testing::random_dataset(rng, 1 + testing::below(rng, 300), 2, 2);
        std::size_t probes = 0;
        nearest_dominator_offline(ds, nullptr, [&](PointId i, const DynamicNNIndex& root) {
            ++probes;
            REQUIRE(root.check_invariants() == "");
            std::set<PointId> have;
            for (const Site& s : root.sites()) have.insert(s.id);
            std::set<PointId> want;
            for (PointId j = 0; j < ds.size(); ++j) {
                if (ds.feature(j, 1) > ds.feature(i, 1)) want.insert(j);
            }
            REQUIRE(have == want);
        });
        CHECK(probes == ds.size());
    }
}

TEST_CASE("work counters are deterministic") {
    testing::Rng rng(77);
    const Dataset ds1 = testing::random_dataset(rng, 500, 1, 2);
    const Dataset ds2 = testing::random_dataset(rng, 500, 2, 2);
    for (Algorithm a : {Algorithm::Brute, Algorithm::Sweep, Algorithm::RangeTree, Algorithm::Offline}) {
        const Dataset& ds = a == Algorithm::Sweep ? ds1 : ds2;
        WorkCounters w1, w2;
        const DominatorResult r1 = run_algorithm(a, ds, &w1);
        const DominatorResult r2 = run_algorithm(a, ds, &w2);
        CHECK(r1 == r2);
        CHECK(w1.node_visits == w2.node_visits);
        CHECK(w1.indexes_built == w2.indexes_built);
        CHECK(w1.indexed_points == w2.indexed_points);
        CHECK(w1.node_visits > 0);
    }
}

TEST_CASE("sort_via_dominators") {
    CHECK(sort_via_dominators(std::vector<double>{3, 1, 2}) == std::vector<double>{1, 2, 3});
    CHECK(sort_via_dominators(std::vector<double>{42}) == std::vector<double>{42});
    CHECK(sort_via_dominators(std::vector<double>{}).empty());
    CHECK_THROWS_AS(sort_via_dominators(std::vector<double>{1, 2, 1}), UsageError);
    CHECK_THROWS_AS(sort_via_dominators(std::vector<double>{0.0, -0.0}), UsageError);

    testing::Rng rng(78);
    std::vector<double> xs;
    std::set<double> seen;
    while (xs.size() < 10000) {
        const double x = testing::unit(rng) * 2e3 - 1e3;
        if (seen.insert(x).second) xs.push_back(x);
    }
    std::vector<double> want = xs;
    std::sort(want.begin(), want.end());
    CHECK(sort_via_dominators(xs) == want);
}

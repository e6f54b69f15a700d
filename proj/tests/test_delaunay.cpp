#include <doctest.h>

#include <cmath>

#include "delaunay_check.hpp"
#include "domgeo/delaunay.hpp"
#include "test_support.hpp"

using namespace domgeo;

namespace {

std::vector<Vec2> uniform_points(testing::Rng& rng, std::size_t n) {
    std::vector<Vec2> pts(n);
    for (Vec2& p : pts) p = {testing::unit(rng), testing::unit(rng)};
    return pts;
}

} // namespace

TEST_CASE("unit square: two legal triangles") {
    const std::vector<Vec2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const DelaunayTriangulation dt(pts);
    CHECK(dt.finite_triangles().size() == 2);
    CHECK(dt.hull_edges() == 4);
    CHECK(testing::check_delaunay(dt) == "");
}

TEST_CASE("single triangle") {
    const std::vector<Vec2> pts{{0, 0}, {0, 1}, {1, 0}};
    const DelaunayTriangulation dt(pts);
    REQUIRE(dt.finite_triangles().size() == 1);
    const auto t = dt.finite_triangles()[0];
    CHECK(orientation(pts[t[0]], pts[t[1]], pts[t[2]]) == 1);
    CHECK(testing::check_delaunay(dt) == "");
}

TEST_CASE("rejects degenerate input") {
    CHECK_THROWS_AS(DelaunayTriangulation(std::vector<Vec2>{{0, 0}, {1, 1}}), UsageError);
    CHECK_THROWS_AS(DelaunayTriangulation(std::vector<Vec2>{{0, 0}, {1, 1}, {2, 2}, {3, 3}}),
                    UsageError);
    CHECK_THROWS_AS(DelaunayTriangulation(std::vector<Vec2>{{0, 0}, {1, 0}, {0, 1}, {1, 0}}),
                    UsageError);
    CHECK(DelaunayTriangulation::collinear(std::vector<Vec2>{{0, 0}, {0, 0}, {2, 2}, {5, 5}}));
    CHECK_FALSE(DelaunayTriangulation::collinear(std::vector<Vec2>{{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("random uniform sites") {
    testing::Rng rng(31);
    for (std::size_t n : {3u, 4u, 10u, 100u, 1000u}) {
        const DelaunayTriangulation dt(uniform_points(rng, n));
        CHECK(testing::check_delaunay(dt) == "");
    }
}

TEST_CASE("grid and cocircular stress sets") {
    for (std::size_t side : {2u, 3u, 7u, 30u}) {
        const DelaunayTriangulation dt(testing::grid_points(side));
        CHECK(testing::check_delaunay(dt) == "");
        CHECK(dt.hull_edges() == 4 * (side - 1));
    }
    const auto ring = testing::cocircular_lattice();
    REQUIRE(ring.size() == 972);
    const DelaunayTriangulation dt(ring);
    CHECK(testing::check_delaunay(dt) == "");
    CHECK(dt.hull_edges() == 972);
    CHECK(dt.finite_triangles().size() == 970);

    // The circle with its centre and a second, concentric copy scaled by 1/2.
    auto mixed = ring;
    mixed.push_back({0, 0});
    for (const Vec2& p : ring) mixed.push_back({p.x / 2, p.y / 2});
    CHECK(testing::check_delaunay(DelaunayTriangulation(mixed)) == "");
}

TEST_CASE("near-collinear and clustered sites") {
    testing::Rng rng(32);
    std::vector<Vec2> pts;
    for (int i = 0; i < 300; ++i) {
        const double x = testing::unit(rng);
        pts.push_back({x, std::nextafter(x, testing::below(rng, 2) ? 2.0 : -1.0)});
    }
    pts.push_back({0.5, 0.75});
    CHECK(testing::check_delaunay(DelaunayTriangulation(pts)) == "");

    std::vector<Vec2> cluster;
    for (int i = 0; i < 500; ++i) {
        cluster.push_back({1e6 + testing::unit(rng) * 1e-6, -1e6 + testing::unit(rng) * 1e-6});
    }
    CHECK(testing::check_delaunay(DelaunayTriangulation(cluster)) == "");
}

TEST_CASE("deterministic construction") {
    testing::Rng rng(33);
    const auto pts = uniform_points(rng, 500);
    const DelaunayTriangulation a(pts), b(pts);
    CHECK(a.finite_triangles() == b.finite_triangles());
}

TEST_CASE("adjacency lists the Delaunay edges") {
    const std::vector<Vec2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.4}};
    const DelaunayTriangulation dt(pts);
    std::vector<std::uint32_t> offsets, targets;
    dt.adjacency(offsets, targets);
    REQUIRE(offsets.size() == pts.size() + 1);
    // Centre point connects to all four corners; each corner has 3 neighbours.
    CHECK(offsets[5] - offsets[4] == 4);
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(offsets[v + 1] - offsets[v] == 3);
    // Edges are symmetric.
    for (std::uint32_t v = 0; v < pts.size(); ++v) {
        for (std::uint32_t k = offsets[v]; k < offsets[v + 1]; ++k) {
            const std::uint32_t w = targets[k];
            bool back = false;
            for (std::uint32_t m = offsets[w]; m < offsets[w + 1]; ++m) back |= targets[m] == v;
            CHECK(back);
        }
    }
}

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "domgeo/geometry.hpp"

namespace domgeo {

/// Delaunay triangulation of distinct, not-all-collinear planar points.
///
/// Built by incremental Bowyer-Watson insertion in Hilbert-curve order. The
/// convex hull is closed off by ghost triangles that share one virtual vertex
/// (`kGhost`); a ghost triangle conflicts with a new point lying strictly
/// outside its hull edge or in the open edge itself. Conflicts require a
/// strictly positive in-circle sign, so cocircular configurations keep the
/// triangles that were built first. The result depends only on the input
/// sequence.
class DelaunayTriangulation {
public:
    static constexpr std::uint32_t kGhost = 0xffffffffu;

    struct Triangle {
        std::array<std::uint32_t, 3> v;    // counter-clockwise
        std::array<std::uint32_t, 3> nbr;  // nbr[i] is across the edge opposite v[i]
    };

    /// Throws UsageError on fewer than 3 points, duplicates, or an all-collinear set.
    explicit DelaunayTriangulation(std::span<const Vec2> points);

    std::span<const Vec2> points() const noexcept { return points_; }
    std::size_t num_vertices() const noexcept { return points_.size(); }

    /// Every live triangle, ghosts included.
    const std::vector<Triangle>& triangles() const noexcept { return tris_; }
    static bool is_ghost(const Triangle& t) noexcept {
        return t.v[0] == kGhost || t.v[1] == kGhost || t.v[2] == kGhost;
    }
    std::vector<std::array<std::uint32_t, 3>> finite_triangles() const;
    /// Number of hull edges (equivalently, ghost triangles).
    std::size_t hull_edges() const;

    /// Delaunay graph as CSR: neighbours of vertex v are
    /// `targets[offsets[v] .. offsets[v+1])`.
    void adjacency(std::vector<std::uint32_t>& offsets, std::vector<std::uint32_t>& targets) const;

    /// True if every point lies on one line.
    static bool collinear(std::span<const Vec2> points);

private:
    void insert(std::uint32_t p);
    std::uint32_t locate(Vec2 p, std::uint32_t start);
    bool conflicts(const Triangle& t, Vec2 p) const;
    std::uint32_t new_triangle();
    void compact();

    std::vector<Vec2> points_;
    std::vector<Triangle> tris_;
    std::vector<std::uint32_t> free_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::uint32_t hint_ = 0;
    std::uint64_t rng_ = 0x9e3779b97f4a7c15ull;

    // Scratch for cavity retriangulation, indexed by vertex (ghost maps to n).
    std::vector<std::uint32_t> by_start_;
    std::vector<std::uint32_t> by_end_;
};

/// Hilbert-curve order of the points (ties by position), used as an insertion order.
std::vector<std::uint32_t> hilbert_order(std::span<const Vec2> points);

} // namespace domgeo

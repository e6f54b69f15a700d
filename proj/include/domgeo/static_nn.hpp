#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "domgeo/geometry.hpp"

namespace domgeo {

/// A real-space site in planar embedding, tagged with its dataset index.
struct Site {
    Vec2 pos;
    PointId id = 0;
};

/// Immutable exact nearest-site index.
///
/// Planar: a Delaunay hierarchy. Level 0 triangulates every distinct site;
/// each higher level triangulates a random 1/16 sample of the level below
/// (sampled deterministically, so identical inputs give identical indexes).
/// A query walks greedily down the levels, then greedily over the level-0
/// Delaunay graph, which stops at a nearest site. Distance keys are rounded
/// doubles, so the final step also searches the small disk of sites whose key
/// is within 1e-12 relative of the best one; sites inside any disk around the
/// query are connected in the Delaunay graph, so this makes the answer the
/// exact (sqdist, id) minimum.
///
/// Line (d_real = 1) and Degenerate (at most two distinct sites, or all
/// collinear) store the sites sorted along their line and run the same search
/// over the path graph.
///
/// Sites at equal coordinates collapse to the smallest id.
class StaticNNIndex {
public:
    enum class Kind { Degenerate, Line, Planar };

    static constexpr std::uint32_t kSampleRatio = 16;
    static constexpr std::size_t kMinLevelSites = 16;

    /// Throws UsageError on an empty site set, duplicate ids, or d_real not in {1, 2}.
    static StaticNNIndex build(std::span<const Site> sites, std::size_t d_real);

    Neighbor nearest(Vec2 query) const;
    Neighbor nearest(const RealPoint& query) const;

    Kind kind() const noexcept { return kind_; }
    std::size_t d_real() const noexcept { return d_real_; }
    /// Sites given at build time, duplicates included.
    std::size_t size() const noexcept { return size_; }
    /// Distinct site positions.
    std::size_t distinct_size() const noexcept { return distinct_; }
    std::size_t levels() const noexcept { return levels_; }
    /// Id kept for each distinct position.
    std::span<const PointId> representatives() const noexcept { return {ints_.data(), distinct_}; }
    /// Heap bytes owned by this index.
    std::size_t memory_bytes() const noexcept {
        return reals_.capacity() * sizeof(double) + ints_.capacity() * sizeof(std::uint32_t);
    }

private:
    StaticNNIndex() = default;

    template <class Neighbors>
    Neighbor exact_search(std::uint32_t start, Vec2 q, Neighbors&& neighbors) const;
    std::uint32_t greedy_level(std::size_t level, std::uint32_t v, Vec2 q) const;
    std::span<const std::uint32_t> adjacent(std::size_t level, std::uint32_t v) const;
    Vec2 site(std::uint32_t v) const { return {reals_[v], reals_[distinct_ + v]}; }
    Neighbor key(std::uint32_t v, Vec2 q) const {
        return {ints_[v], squared_distance(site(v), q)};
    }

    // reals_: xs | ys, then for Line/Degenerate: params | origin | direction.
    // ints_:  ids, then for Planar: level sizes | offset bases | target bases |
    //         per-level CSR offsets | per-level CSR targets.
    Kind kind_ = Kind::Degenerate;
    std::uint8_t d_real_ = 2;
    std::uint32_t size_ = 0;
    std::uint32_t distinct_ = 0;
    std::uint32_t levels_ = 0;
    std::vector<double> reals_;
    std::vector<std::uint32_t> ints_;
};

/// Convenience form over (RealPoint, id) pairs.
StaticNNIndex build_static_nn(std::span<const std::pair<RealPoint, PointId>> sites);

} // namespace domgeo

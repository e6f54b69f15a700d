#include "domgeo/dynamic_nn.hpp"

#include <bit>

namespace domgeo {

DynamicNNIndex::DynamicNNIndex(std::size_t d_real) : d_real_(d_real) {
    if (d_real != 1 && d_real != 2) {
        throw UsageError("DynamicNNIndex: real space must be one- or two-dimensional");
    }
}

void DynamicNNIndex::insert(const Site& site) {
    if (!ids_.insert(site.id).second) {
        throw UsageError("DynamicNNIndex: id " + std::to_string(site.id) + " already inserted");
    }
    std::vector<Site> merged{site};
    while (!buckets_.empty() && buckets_.back().sites.size() == merged.size()) {
        std::vector<Site>& tail = buckets_.back().sites;
        merged.insert(merged.end(), tail.begin(), tail.end());
        buckets_.pop_back();
    }
    StaticNNIndex index = StaticNNIndex::build(merged, d_real_);
    ++indexes_built_;
    indexed_points_ += merged.size();
    buckets_.push_back(Bucket{std::move(merged), std::move(index)});
}

void DynamicNNIndex::insert(const RealPoint& p, PointId id) {
    if (p.dim() != d_real_) throw UsageError("DynamicNNIndex: real dimension mismatch");
    insert(Site{to_planar(p), id});
}

std::optional<Neighbor> DynamicNNIndex::nearest(Vec2 query) const {
    std::optional<Neighbor> best;
    for (const Bucket& b : buckets_) {
        const Neighbor cand = b.index.nearest(query);
        if (!best || closer(cand, *best)) best = cand;
    }
    return best;
}

std::optional<Neighbor> DynamicNNIndex::nearest(const RealPoint& query) const {
    if (query.dim() != d_real_) throw UsageError("DynamicNNIndex: real dimension mismatch");
    return nearest(to_planar(query));
}

std::vector<std::size_t> DynamicNNIndex::bucket_sizes() const {
    std::vector<std::size_t> out;
    for (const Bucket& b : buckets_) out.push_back(b.sites.size());
    return out;
}

std::vector<Site> DynamicNNIndex::sites() const {
    std::vector<Site> out;
    out.reserve(size());
    for (const Bucket& b : buckets_) out.insert(out.end(), b.sites.begin(), b.sites.end());
    return out;
}

std::string DynamicNNIndex::check_invariants() const {
    std::size_t total = 0;
    std::unordered_set<PointId> seen;
    for (std::size_t i = 0; i < buckets_.size(); ++i) {
        const Bucket& b = buckets_[i];
        const std::size_t k = b.sites.size();
        if (!std::has_single_bit(k)) return "bucket size " + std::to_string(k) + " not a power of two";
        if (i > 0 && k >= buckets_[i - 1].sites.size()) return "bucket sizes not strictly decreasing";
        if (b.index.size() != k) return "bucket index size differs from its site list";
        for (const Site& s : b.sites) {
            if (!seen.insert(s.id).second) return "id " + std::to_string(s.id) + " stored twice";
            if (!ids_.count(s.id)) return "id " + std::to_string(s.id) + " stored but not registered";
        }
        total += k;
    }
    if (total != ids_.size()) return "bucket sites do not cover every inserted id";
    const std::size_t limit = std::bit_width(total) + 1;  // ceil(log2(total + 1)) + 1
    if (buckets_.size() > limit) return "too many buckets";
    return {};
}

} // namespace domgeo

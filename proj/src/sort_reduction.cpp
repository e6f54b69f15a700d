#include <stdexcept>
#include <unordered_set>

#include "domgeo/engine.hpp"

namespace domgeo {

std::vector<double> sort_via_dominators(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) return {};
    if (std::unordered_set<double>(xs.begin(), xs.end()).size() != n) {
        throw UsageError("sort_via_dominators: values must be pairwise distinct");
    }
    Dataset ds(1, 2);
    for (double x : xs) {
        const double real[1] = {x};
        const double feat[2] = {x, x};
        ds.add(real, feat);
    }

    std::size_t head = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (xs[i] < xs[head]) head = i;
    }
    const DominatorResult next = nearest_dominator_sweep(ds);

    std::vector<double> out;
    out.reserve(n);
    std::vector<char> seen(n, 0);
    for (std::optional<std::size_t> cur = head; cur; ) {
        if (seen[*cur]) throw UsageError("sort_via_dominators: dominator links form a cycle");
        seen[*cur] = 1;
        out.push_back(xs[*cur]);
        cur = next[*cur] ? std::optional<std::size_t>(next[*cur]->id) : std::nullopt;
    }
    if (out.size() != n) {
        // Only possible when two successors round to the same squared distance.
        throw std::runtime_error("sort_via_dominators: dominator chain skips a value");
    }
    return out;
}

} // namespace domgeo

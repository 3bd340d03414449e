#include "atlaslearn/atomic_cycles.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "atlaslearn/error.hpp"
#include "atlaslearn/kernels.hpp"

namespace atlaslearn {

namespace {

int cycle_gap(std::size_t i, std::size_t j, std::size_t len) {
    const std::size_t gap = i > j ? i - j : j - i;
    return static_cast<int>(std::min(gap, len - gap));
}

int shortcut_bound(int along, std::size_t chord_length) {
    return std::min<long long>(along, static_cast<long long>(chord_length) + 1);
}

// Depth-first search over atomic paths anchored at their smallest vertex.
class ExhaustiveSearch {
public:
    ExhaustiveSearch(const CompactGraph& g, std::size_t lambda, std::size_t chord_length)
        : g_(g), lambda_(lambda), chord_(chord_length), n_(g.size()), hops_(n_ * n_), in_path_(n_, 0) {
        for (std::uint32_t s = 0; s < n_; ++s) {
            const auto d = hop_distances(g_, s);
            for (std::size_t t = 0; t < n_; ++t) {
                hops_[s * n_ + t] = d[t] < 0 ? std::numeric_limits<int>::max() : d[t];
            }
        }
    }

    std::optional<std::vector<std::uint32_t>> run() {
        for (std::uint32_t anchor = 0; anchor < n_; ++anchor) {
            anchor_ = anchor;
            path_.assign(1, anchor);
            in_path_[anchor] = 1;
            const bool found = extend();
            in_path_[anchor] = 0;
            if (found) return path_;
        }
        return std::nullopt;
    }

private:
    int hops(std::uint32_t a, std::uint32_t b) const { return hops_[a * n_ + b]; }

    bool extend() {
        const std::size_t t = path_.size() - 1;
        for (std::uint32_t w : g_.neighbors(path_.back())) {
            if (w <= anchor_ || in_path_[w]) continue;
            if (!compatible(w)) continue;
            path_.push_back(w);
            in_path_[w] = 1;
            bool found = false;
            if (t + 1 >= 2 && g_.adjacent(w, anchor_)) {
                // w must close the cycle: any further vertex would make
                // (w, anchor) a chord.
                found = path_.size() > lambda_ && closed_cycle_atomic();
            } else {
                found = extend();
            }
            if (found) return true;
            in_path_[w] = 0;
            path_.pop_back();
        }
        return false;
    }

    // Reject w when some earlier path vertex is certainly too close to it,
    // whatever the final cycle length turns out to be.
    bool compatible(std::uint32_t w) const {
        const std::size_t next = path_.size();
        for (std::size_t i = 1; i + 1 < next; ++i) {
            const int along_path = static_cast<int>(next - i);
            const int around = static_cast<int>(i + 1);
            if (hops(path_[i], w) < shortcut_bound(std::min(along_path, around), chord_)) return false;
        }
        return true;
    }

    bool closed_cycle_atomic() const {
        const std::size_t len = path_.size();
        for (std::size_t i = 0; i < len; ++i) {
            for (std::size_t j = i + 1; j < len; ++j) {
                if (hops(path_[i], path_[j]) < shortcut_bound(cycle_gap(i, j, len), chord_)) return false;
            }
        }
        return true;
    }

    const CompactGraph& g_;
    std::size_t lambda_;
    std::size_t chord_;
    std::size_t n_;
    std::vector<int> hops_;
    std::vector<char> in_path_;
    std::vector<std::uint32_t> path_;
    std::uint32_t anchor_ = 0;
};

}  // namespace

bool is_atomic_cycle(const CompactGraph& graph, std::span<const std::uint32_t> cycle,
                     std::size_t chord_length) {
    const std::size_t len = cycle.size();
    if (len < 3) return false;
    std::vector<std::uint32_t> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        if (cycle[i] >= graph.size() || !graph.adjacent(cycle[i], cycle[(i + 1) % len])) return false;
    }
    for (std::size_t i = 0; i < len; ++i) {
        const auto d = hop_distances(graph, cycle[i]);
        for (std::size_t j = 0; j < len; ++j) {
            if (j == i) continue;
            if (d[cycle[j]] < shortcut_bound(cycle_gap(i, j, len), chord_length)) return false;
        }
    }
    return true;
}

std::optional<std::vector<VertexId>> find_atomic_cycle_longer_than(const NeighborhoodGraph& graph,
                                                                   const Subgraph& sub,
                                                                   std::size_t lambda,
                                                                   const AtomicCycleOptions& options,
                                                                   AtomicSearch search) {
    if (lambda < 3) throw ParameterError("lambda must be at least 3, got " + std::to_string(lambda));
    if (options.chord_length < 1) throw ParameterError("chord length must be at least 1");
    const CompactGraph g(graph, sub);
    if (search == AtomicSearch::automatic) {
        search = g.size() <= options.exhaustive_limit ? AtomicSearch::exhaustive : AtomicSearch::breadth_first;
    }
    std::optional<std::vector<std::uint32_t>> local;
    if (search == AtomicSearch::exhaustive) {
        local = ExhaustiveSearch(g, lambda, options.chord_length).run();
    } else {
        local = kernels::atomic_cycle_scan_parallel(g, lambda, options.chord_length);
    }
    if (!local) return std::nullopt;
    std::vector<VertexId> cycle;
    cycle.reserve(local->size());
    for (std::uint32_t v : *local) cycle.push_back(g.global(v));
    return cycle;
}

bool has_atomic_cycle_longer_than(const NeighborhoodGraph& graph, const Subgraph& sub, std::size_t lambda,
                                  const AtomicCycleOptions& options, AtomicSearch search) {
    return find_atomic_cycle_longer_than(graph, sub, lambda, options, search).has_value();
}

}  // namespace atlaslearn

#include "atlaslearn/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include <omp.h>

namespace atlaslearn::kernels {

namespace {

std::vector<VertexId> nearest_of(const PointCloud& cloud, std::size_t i, std::size_t k,
                                 std::vector<std::pair<double, VertexId>>& scratch) {
    scratch.clear();
    for (std::size_t j = 0; j < cloud.size(); ++j) {
        if (j != i) scratch.emplace_back(squared_distance(cloud[i], cloud[j]), static_cast<VertexId>(j));
    }
    auto kth = scratch.begin() + static_cast<std::ptrdiff_t>(k);
    std::nth_element(scratch.begin(), kth - 1, scratch.end());
    std::sort(scratch.begin(), kth);
    std::vector<VertexId> out;
    out.reserve(k);
    for (auto it = scratch.begin(); it != kth; ++it) out.push_back(it->second);
    return out;
}

std::vector<VertexId> within_of(const PointCloud& cloud, std::size_t i, double eps2) {
    std::vector<VertexId> out;
    for (std::size_t j = i + 1; j < cloud.size(); ++j) {
        if (squared_distance(cloud[i], cloud[j]) <= eps2) out.push_back(static_cast<VertexId>(j));
    }
    return out;
}

void dijkstra_row(const CompactGraph& g, std::uint32_t source, std::vector<double>& row) {
    using Item = std::pair<double, std::uint32_t>;
    row.assign(g.size(), std::numeric_limits<double>::infinity());
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[source] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > row[v]) continue;
        auto nbrs = g.neighbors(v);
        auto wts = g.weights(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const double nd = d + wts[i];
            if (nd < row[nbrs[i]]) {
                row[nbrs[i]] = nd;
                heap.emplace(nd, nbrs[i]);
            }
        }
    }
}

struct RankScratch {
    std::vector<std::pair<double, std::uint32_t>> order;
    std::vector<std::uint32_t> rank;
};

std::int64_t penalty_row(const Eigen::MatrixXd& original, const Eigen::MatrixXd& embedded,
                         std::size_t k, Eigen::Index i, RankScratch& s) {
    const Eigen::Index n = original.rows();
    s.order.clear();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (j != i) s.order.emplace_back((original.row(j) - original.row(i)).squaredNorm(), j);
    }
    std::sort(s.order.begin(), s.order.end());
    s.rank.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < s.order.size(); ++r) s.rank[s.order[r].second] = static_cast<std::uint32_t>(r + 1);

    s.order.clear();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (j != i) s.order.emplace_back((embedded.row(j) - embedded.row(i)).squaredNorm(), j);
    }
    auto kth = s.order.begin() + static_cast<std::ptrdiff_t>(k);
    std::nth_element(s.order.begin(), kth - 1, s.order.end());
    std::int64_t sum = 0;
    for (auto it = s.order.begin(); it != kth; ++it) {
        const std::int64_t r = s.rank[it->second];
        if (r > static_cast<std::int64_t>(k)) sum += r - static_cast<std::int64_t>(k);
    }
    return sum;
}

// Scratch buffers for one breadth-first atomic-cycle scan. Stamps avoid
// clearing per-vertex arrays between candidates.
class CycleScanner {
public:
    CycleScanner(const CompactGraph& g, std::size_t lambda, std::size_t chord_length)
        : g_(g), lambda_(lambda), chord_(chord_length), depth_(g.size()), parent_(g.size()),
          branch_(g.size()), pos_(g.size(), -1), seen_(g.size(), 0), hop_(g.size(), 0) {}

    std::optional<std::vector<std::uint32_t>> scan(std::uint32_t source) {
        bfs(source);
        for (std::uint32_t u : order_) {
            for (std::uint32_t v : g_.neighbors(u)) {
                if (v <= u || parent_[v] == u || parent_[u] == v) continue;
                if (branch_[u] == branch_[v]) continue;
                if (static_cast<std::size_t>(depth_[u] + depth_[v] + 1) <= lambda_) continue;
                build_cycle(u, v);
                if (atomic()) return cycle_;
            }
        }
        return std::nullopt;
    }

private:
    void bfs(std::uint32_t source) {
        std::fill(depth_.begin(), depth_.end(), -1);
        order_.clear();
        depth_[source] = 0;
        parent_[source] = source;
        branch_[source] = source;
        order_.push_back(source);
        for (std::size_t head = 0; head < order_.size(); ++head) {
            const std::uint32_t v = order_[head];
            for (std::uint32_t w : g_.neighbors(v)) {
                if (depth_[w] >= 0) continue;
                depth_[w] = depth_[v] + 1;
                parent_[w] = v;
                branch_[w] = v == source ? w : branch_[v];
                order_.push_back(w);
            }
        }
    }

    // cycle = source, ..., u, v, ..., (child of source on v's side)
    void build_cycle(std::uint32_t u, std::uint32_t v) {
        cycle_.clear();
        for (std::uint32_t x = u; depth_[x] > 0; x = parent_[x]) cycle_.push_back(x);
        cycle_.push_back(parent_[cycle_.back()]);
        std::reverse(cycle_.begin(), cycle_.end());
        for (std::uint32_t x = v; depth_[x] > 0; x = parent_[x]) cycle_.push_back(x);
    }

    bool atomic() {
        const int len = static_cast<int>(cycle_.size());
        for (int i = 0; i < len; ++i) pos_[cycle_[i]] = i;
        bool ok = true;
        // Walk outward from the apex: two branches that have not yet separated
        // produce their shortcut within the first few positions.
        for (int step = 1; ok && step <= len / 2; ++step) {
            if (!ball_clear(step, len)) ok = false;
            else if (len - step != step && !ball_clear(len - step, len)) ok = false;
        }
        for (std::uint32_t x : cycle_) pos_[x] = -1;
        return ok;
    }

    // No cycle vertex within `chord_` hops of cycle_[i] is closer in the graph
    // than along the cycle.
    bool ball_clear(int i, int len) {
        ++stamp_;
        frontier_.assign(1, cycle_[i]);
        seen_[cycle_[i]] = stamp_;
        hop_[cycle_[i]] = 0;
        for (std::size_t head = 0; head < frontier_.size(); ++head) {
            const std::uint32_t x = frontier_[head];
            const int h = hop_[x];
            if (pos_[x] >= 0 && x != cycle_[i]) {
                const int gap = std::abs(pos_[x] - i);
                const int along = std::min(gap, len - gap);
                if (h < std::min(along, static_cast<int>(chord_) + 1)) return false;
            }
            if (h == static_cast<int>(chord_)) continue;
            for (std::uint32_t w : g_.neighbors(x)) {
                if (seen_[w] == stamp_) continue;
                seen_[w] = stamp_;
                hop_[w] = h + 1;
                frontier_.push_back(w);
            }
        }
        return true;
    }

    const CompactGraph& g_;
    std::size_t lambda_;
    std::size_t chord_;
    std::vector<int> depth_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> branch_;
    std::vector<int> pos_;
    std::vector<std::uint32_t> seen_;
    std::vector<int> hop_;
    std::uint32_t stamp_ = 0;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> cycle_;
    std::vector<std::uint32_t> frontier_;
};

}  // namespace

std::vector<std::vector<VertexId>> nearest_neighbors_serial(const PointCloud& cloud, std::size_t k) {
    std::vector<std::vector<VertexId>> out(cloud.size());
    std::vector<std::pair<double, VertexId>> scratch;
    for (std::size_t i = 0; i < cloud.size(); ++i) out[i] = nearest_of(cloud, i, k, scratch);
    return out;
}

std::vector<std::vector<VertexId>> nearest_neighbors_parallel(const PointCloud& cloud, std::size_t k) {
    std::vector<std::vector<VertexId>> out(cloud.size());
    const auto m = static_cast<std::ptrdiff_t>(cloud.size());
#pragma omp parallel
    {
        std::vector<std::pair<double, VertexId>> scratch;
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < m; ++i) {
            out[static_cast<std::size_t>(i)] = nearest_of(cloud, static_cast<std::size_t>(i), k, scratch);
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> epsilon_neighbors_serial(const PointCloud& cloud, double epsilon) {
    std::vector<std::vector<VertexId>> out(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) out[i] = within_of(cloud, i, epsilon * epsilon);
    return out;
}

std::vector<std::vector<VertexId>> epsilon_neighbors_parallel(const PointCloud& cloud, double epsilon) {
    std::vector<std::vector<VertexId>> out(cloud.size());
    const auto m = static_cast<std::ptrdiff_t>(cloud.size());
    const double eps2 = epsilon * epsilon;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < m; ++i) {
        out[static_cast<std::size_t>(i)] = within_of(cloud, static_cast<std::size_t>(i), eps2);
    }
    return out;
}

Eigen::MatrixXd shortest_paths_serial(const CompactGraph& graph, std::span<const std::uint32_t> sources) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(sources.size()), static_cast<Eigen::Index>(graph.size()));
    std::vector<double> row;
    for (std::size_t r = 0; r < sources.size(); ++r) {
        dijkstra_row(graph, sources[r], row);
        out.row(static_cast<Eigen::Index>(r)) = Eigen::Map<const Eigen::RowVectorXd>(row.data(), out.cols());
    }
    return out;
}

Eigen::MatrixXd shortest_paths_parallel(const CompactGraph& graph, std::span<const std::uint32_t> sources) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(sources.size()), static_cast<Eigen::Index>(graph.size()));
    const auto count = static_cast<std::ptrdiff_t>(sources.size());
#pragma omp parallel
    {
        std::vector<double> row;
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t r = 0; r < count; ++r) {
            dijkstra_row(graph, sources[static_cast<std::size_t>(r)], row);
            out.row(r) = Eigen::Map<const Eigen::RowVectorXd>(row.data(), out.cols());
        }
    }
    return out;
}

std::int64_t trustworthiness_penalty_serial(const Eigen::MatrixXd& original,
                                            const Eigen::MatrixXd& embedded, std::size_t k) {
    RankScratch scratch;
    std::int64_t sum = 0;
    for (Eigen::Index i = 0; i < original.rows(); ++i) sum += penalty_row(original, embedded, k, i, scratch);
    return sum;
}

std::int64_t trustworthiness_penalty_parallel(const Eigen::MatrixXd& original,
                                              const Eigen::MatrixXd& embedded, std::size_t k) {
    std::int64_t sum = 0;
    const Eigen::Index n = original.rows();
#pragma omp parallel reduction(+ : sum)
    {
        RankScratch scratch;
#pragma omp for schedule(static)
        for (Eigen::Index i = 0; i < n; ++i) sum += penalty_row(original, embedded, k, i, scratch);
    }
    return sum;
}

std::optional<std::vector<std::uint32_t>> atomic_cycle_scan_serial(const CompactGraph& graph,
                                                                   std::size_t lambda,
                                                                   std::size_t chord_length) {
    CycleScanner scanner(graph, lambda, chord_length);
    for (std::uint32_t s = 0; s < graph.size(); ++s) {
        if (auto found = scanner.scan(s)) return found;
    }
    return std::nullopt;
}

std::optional<std::vector<std::uint32_t>> atomic_cycle_scan_parallel(const CompactGraph& graph,
                                                                     std::size_t lambda,
                                                                     std::size_t chord_length) {
    const auto n = static_cast<std::ptrdiff_t>(graph.size());
    std::atomic<std::ptrdiff_t> best{n};
    std::optional<std::vector<std::uint32_t>> result;
#pragma omp parallel
    {
        CycleScanner scanner(graph, lambda, chord_length);
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t s = 0; s < n; ++s) {
            if (s >= best.load(std::memory_order_relaxed)) continue;
            auto found = scanner.scan(static_cast<std::uint32_t>(s));
            if (!found) continue;
#pragma omp critical(atlaslearn_atomic_scan)
            {
                if (s < best.load(std::memory_order_relaxed)) {
                    best.store(s, std::memory_order_relaxed);
                    result = std::move(found);
                }
            }
        }
    }
    return result;
}

}  // namespace atlaslearn::kernels

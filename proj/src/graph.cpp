#include "atlaslearn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "atlaslearn/error.hpp"
#include "atlaslearn/kernels.hpp"

namespace atlaslearn {

NeighborhoodGraph::NeighborhoodGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
    if (vertex_count > std::numeric_limits<VertexId>::max()) {
        throw ParameterError("too many vertices");
    }
    for (Edge& e : edges_) {
        if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw ParameterError("edge endpoint out of range");
        }
        if (!(e.weight >= 0.0)) throw ParameterError("edge weight must be nonnegative");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw ParameterError("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                 std::to_string(edges_[i].v) + ")");
        }
    }

    offsets_.assign(vertex_count + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adjacency_[fill[e.u]++] = {e.v, id};
        adjacency_[fill[e.v]++] = {e.u, id};
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
                  [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
}

std::optional<EdgeId> NeighborhoodGraph::find_edge(VertexId a, VertexId b) const {
    if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
    auto nbrs = neighbors(a);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b,
                               [](const Neighbor& n, VertexId x) { return n.vertex < x; });
    if (it != nbrs.end() && it->vertex == b) return it->edge;
    return std::nullopt;
}

bool Subgraph::contains(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

Subgraph whole_graph(const NeighborhoodGraph& graph) {
    Subgraph sub;
    sub.vertices.resize(graph.vertex_count());
    std::iota(sub.vertices.begin(), sub.vertices.end(), VertexId{0});
    sub.edges.resize(graph.edge_count());
    std::iota(sub.edges.begin(), sub.edges.end(), EdgeId{0});
    return sub;
}

Subgraph induced_subgraph(const NeighborhoodGraph& graph, std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<char> member(graph.vertex_count(), 0);
    for (VertexId v : vertices) {
        if (v >= graph.vertex_count()) throw ParameterError("vertex out of range");
        member[v] = 1;
    }
    Subgraph sub;
    for (VertexId v : vertices) {
        for (const Neighbor& n : graph.neighbors(v)) {
            if (n.vertex > v && member[n.vertex]) sub.edges.push_back(n.edge);
        }
    }
    std::sort(sub.edges.begin(), sub.edges.end());
    sub.vertices = std::move(vertices);
    return sub;
}

void validate_subgraph(const NeighborhoodGraph& graph, const Subgraph& sub) {
    if (!std::is_sorted(sub.vertices.begin(), sub.vertices.end()) ||
        std::adjacent_find(sub.vertices.begin(), sub.vertices.end()) != sub.vertices.end()) {
        throw ParameterError("subgraph vertices must be sorted and unique");
    }
    if (!sub.vertices.empty() && sub.vertices.back() >= graph.vertex_count()) {
        throw ParameterError("subgraph vertex out of range");
    }
    for (EdgeId e : sub.edges) {
        if (e >= graph.edge_count()) throw ParameterError("subgraph edge id out of range");
        const Edge& edge = graph.edge(e);
        if (!sub.contains(edge.u) || !sub.contains(edge.v)) {
            throw ParameterError("subgraph edge (" + std::to_string(edge.u) + "," +
                                 std::to_string(edge.v) + ") leaves the vertex set");
        }
    }
}

NeighborhoodGraph build_knn_graph(const PointCloud& cloud, std::size_t k) {
    const std::size_t m = cloud.size();
    if (k < 1 || k >= m) {
        throw ParameterError("k must satisfy 1 <= k < m (k=" + std::to_string(k) +
                             ", m=" + std::to_string(m) + ")");
    }
    const auto lists = kernels::nearest_neighbors_parallel(cloud, k);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(m * k);
    for (VertexId i = 0; i < m; ++i) {
        for (VertexId j : lists[i]) pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, distance(cloud[u], cloud[v])});
    return NeighborhoodGraph(m, std::move(edges));
}

NeighborhoodGraph build_epsilon_graph(const PointCloud& cloud, double epsilon) {
    if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
    const auto lists = kernels::epsilon_neighbors_parallel(cloud, epsilon);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < cloud.size(); ++i) {
        for (VertexId j : lists[i]) edges.push_back({i, j, distance(cloud[i], cloud[j])});
    }
    return NeighborhoodGraph(cloud.size(), std::move(edges));
}

CompactGraph::CompactGraph(const NeighborhoodGraph& graph, const Subgraph& sub)
    : global_(sub.vertices) {
    const std::size_t n = global_.size();
    offsets_.assign(n + 1, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
    ends.reserve(sub.edges.size());
    for (EdgeId e : sub.edges) {
        const Edge& edge = graph.edge(e);
        auto a = local(edge.u);
        auto b = local(edge.v);
        if (!a || !b) throw ParameterError("subgraph edge leaves the vertex set");
        ends.emplace_back(*a, *b);
        ++offsets_[*a + 1];
        ++offsets_[*b + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    targets_.resize(2 * ends.size());
    weights_.resize(2 * ends.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const double w = graph.edge(sub.edges[i]).weight;
        auto [a, b] = ends[i];
        targets_[fill[a]] = b;
        weights_[fill[a]++] = w;
        targets_[fill[b]] = a;
        weights_[fill[b]++] = w;
    }
    // sort each adjacency list by target so traversal order is canonical
    std::vector<std::pair<std::uint32_t, double>> scratch;
    for (std::size_t v = 0; v < n; ++v) {
        scratch.clear();
        for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) scratch.emplace_back(targets_[i], weights_[i]);
        std::sort(scratch.begin(), scratch.end());
        for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
            targets_[i] = scratch[i - offsets_[v]].first;
            weights_[i] = scratch[i - offsets_[v]].second;
        }
    }
}

std::optional<std::uint32_t> CompactGraph::local(VertexId global) const {
    auto it = std::lower_bound(global_.begin(), global_.end(), global);
    if (it == global_.end() || *it != global) return std::nullopt;
    return static_cast<std::uint32_t>(it - global_.begin());
}

bool CompactGraph::adjacent(std::uint32_t a, std::uint32_t b) const {
    auto nbrs = neighbors(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<std::vector<VertexId>> connected_components(const NeighborhoodGraph& graph,
                                                        const Subgraph& sub) {
    const CompactGraph g(graph, sub);
    std::vector<int> label(g.size(), -1);
    std::vector<std::vector<VertexId>> components;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t start = 0; start < g.size(); ++start) {
        if (label[start] >= 0) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            components.back().push_back(g.global(v));
            for (std::uint32_t w : g.neighbors(v)) {
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(components.back().begin(), components.back().end());
    }
    return components;
}

PathDistances shortest_path_distances(const NeighborhoodGraph& graph, const Subgraph& sub,
                                      std::span<const VertexId> sources) {
    const CompactGraph g(graph, sub);
    std::vector<std::uint32_t> local_sources;
    local_sources.reserve(sources.size());
    for (VertexId s : sources) {
        auto l = g.local(s);
        if (!l) throw ParameterError("source " + std::to_string(s) + " is not in the subgraph");
        local_sources.push_back(*l);
    }
    PathDistances result;
    result.distances = kernels::shortest_paths_parallel(g, local_sources);
    result.unreachable = static_cast<std::size_t>(
        (result.distances.array() == std::numeric_limits<double>::infinity()).count());
    return result;
}

std::vector<int> hop_distances(const CompactGraph& graph, std::uint32_t source) {
    std::vector<int> depth(graph.size(), -1);
    std::vector<std::uint32_t> queue;
    queue.reserve(graph.size());
    depth[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (std::uint32_t w : graph.neighbors(v)) {
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return depth;
}

}  // namespace atlaslearn

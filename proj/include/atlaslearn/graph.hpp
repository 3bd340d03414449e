#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected weighted edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double weight = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    VertexId vertex;
    EdgeId edge;
};

/// Weighted undirected graph over point indices 0..m-1. Edges are sorted by
/// (u, v) and adjacency lists by neighbor index; both are immutable.
class NeighborhoodGraph {
public:
    NeighborhoodGraph() = default;

    /// Edges may be given in either orientation and any order. Self-loops,
    /// duplicate pairs, out-of-range endpoints and negative weights throw
    /// ParameterError.
    NeighborhoodGraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    std::span<const Neighbor> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
};

/// Vertex set plus a subset of parent-graph edges between those vertices.
/// Both lists are kept sorted and duplicate-free.
struct Subgraph {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    bool empty() const noexcept { return vertices.empty(); }
    bool contains(VertexId v) const;

    friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

/// Every vertex and edge of `graph`.
Subgraph whole_graph(const NeighborhoodGraph& graph);

/// `vertices` (any order, duplicates allowed) with every parent edge that has
/// both endpoints among them.
Subgraph induced_subgraph(const NeighborhoodGraph& graph, std::vector<VertexId> vertices);

/// Throws ParameterError if a subgraph edge has an endpoint outside the
/// vertex set or an id/vertex is out of range.
void validate_subgraph(const NeighborhoodGraph& graph, const Subgraph& sub);

/// Symmetrized k-nearest-neighbor graph: (u,v) is an edge when either point
/// is among the other's k nearest. Ties go to the lower index. Requires
/// 1 <= k < m.
NeighborhoodGraph build_knn_graph(const PointCloud& cloud, std::size_t k);

/// All pairs within `epsilon` (inclusive). Requires epsilon > 0.
NeighborhoodGraph build_epsilon_graph(const PointCloud& cloud, double epsilon);

/// Local-index view of a subgraph with contiguous adjacency, used by the
/// traversal kernels. Local index i corresponds to `sub.vertices[i]`.
class CompactGraph {
public:
    CompactGraph() = default;
    CompactGraph(const NeighborhoodGraph& graph, const Subgraph& sub);

    std::size_t size() const noexcept { return global_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    VertexId global(std::uint32_t local) const { return global_[local]; }
    const std::vector<VertexId>& globals() const noexcept { return global_; }
    /// Local index of a global vertex, or nullopt if it is not in the subgraph.
    std::optional<std::uint32_t> local(VertexId global) const;

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::span<const double> weights(std::uint32_t v) const {
        return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
    }
    bool adjacent(std::uint32_t a, std::uint32_t b) const;

private:
    std::vector<VertexId> global_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> targets_;
    std::vector<double> weights_;
};

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const NeighborhoodGraph& graph,
                                                        const Subgraph& sub);

struct PathDistances {
    /// rows follow `sources`, columns follow `sub.vertices`
    Eigen::MatrixXd distances;
    /// number of (source, vertex) pairs with no connecting path
    std::size_t unreachable = 0;
};

/// Minimum-weight path lengths inside `sub` from each source to every
/// subgraph vertex. Unreachable entries are +infinity and counted in
/// `unreachable`; sources outside the subgraph throw ParameterError.
PathDistances shortest_path_distances(const NeighborhoodGraph& graph, const Subgraph& sub,
                                      std::span<const VertexId> sources);

/// Hop-count BFS distances from `source` within a compact graph; unreached
/// vertices get -1.
std::vector<int> hop_distances(const CompactGraph& graph, std::uint32_t source);

}  // namespace atlaslearn

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "atlaslearn/atomic_cycles.hpp"
#include "atlaslearn/graph.hpp"

namespace atlaslearn {

/// One chart's domain: a nonempty subgraph of the neighborhood graph.
struct ChartDomain {
    std::uint32_t id = 0;
    Subgraph domain;

    friend bool operator==(const ChartDomain&, const ChartDomain&) = default;
};

/// Chart domains covering every vertex of the neighborhood graph, ordered by id.
struct Atlas {
    std::vector<ChartDomain> charts;

    friend bool operator==(const Atlas&, const Atlas&) = default;
};

/// Settings for the combining phase.
struct CombineOptions {
    std::size_t lambda = 8;
    AtomicCycleOptions atomic;
};

/// Counters describing one combining run.
struct CombineStats {
    std::size_t pairs_checked = 0;
    std::size_t merges = 0;
    std::size_t rejected_disconnected = 0;
    std::size_t rejected_cycle = 0;

    friend bool operator==(const CombineStats&, const CombineStats&) = default;
};

/// Greedy farthest-point sampling in the graph metric. The first vertex is
/// drawn from a generator seeded with `seed`; each later one maximizes the
/// minimum path distance to those already chosen, ties to the lowest index.
/// Requires 1 <= count <= vertex count and a connected graph
/// (StructuralError otherwise).
std::vector<VertexId> farthest_point_sample(const NeighborhoodGraph& graph, std::size_t count,
                                            std::uint64_t seed);

/// Same, with an explicit first vertex.
std::vector<VertexId> farthest_point_sample_from(const NeighborhoodGraph& graph, std::size_t count,
                                                 VertexId first);

/// One chart per seed, grown by synchronized one-hop rounds until every vertex
/// is covered, then for one more round so neighbors overlap. Chart i is grown
/// from seeds[i] and gets id i; its edges are all graph edges among its
/// vertices.
Atlas initialize_charts(const NeighborhoodGraph& graph, const std::vector<VertexId>& seeds);

/// Shared vertices of two charts together with every graph edge among them.
Subgraph intersect(const NeighborhoodGraph& graph, const ChartDomain& a, const ChartDomain& b);

/// Two charts may merge when their intersection is a single connected
/// component with no atomic cycle longer than lambda. Empty -> false.
bool can_combine(const NeighborhoodGraph& graph, const Subgraph& intersection,
                 const CombineOptions& options);

/// Repeatedly draws a pending chart pair at random (seeded), merges it when
/// can_combine passes, and stops once every overlapping pair of the current
/// charts has been rejected. The merged chart keeps the lower id and takes the
/// union of both vertex and edge sets.
Atlas combine_until_fixpoint(const NeighborhoodGraph& graph, Atlas atlas, const CombineOptions& options,
                             std::uint64_t seed, CombineStats* stats = nullptr);

/// Union of all chart vertex sets equals the graph's vertex set.
bool covers(const NeighborhoodGraph& graph, const Atlas& atlas);

}  // namespace atlaslearn

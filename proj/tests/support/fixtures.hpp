#pragma once

// Hand-built graphs and chart pairs shared by the unit tests and the
// acceptance binary.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "atlaslearn/atlas.hpp"
#include "atlaslearn/graph.hpp"
#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn::testing {

/// Two chart domains on one graph.
struct ChartPair {
    PointCloud cloud;
    NeighborhoodGraph graph;
    ChartDomain a;
    ChartDomain b;
};

/// Unit triangular lattice clipped to a disk of radius 13, edges between
/// lattice neighbors. Charts are the disks of radius 6 centred at (-3, 0) and
/// (3, 0); their overlap is a lens.
ChartPair planar_disk_pair();

/// Triangular lattice wrapped around the unit cylinder (24 columns, 9 rows).
/// Charts cover theta in [-pi/4, 5pi/4] and [3pi/4, 9pi/4]; they meet in two
/// separate strips.
ChartPair half_cylinder_pair();

/// 800 Fibonacci points on the unit sphere, 8-NN graph. Charts are the caps
/// z >= -0.25 and z <= 0.25; they meet in an annular band.
ChartPair hemisphere_pair();

/// n-cycle with unit weights.
NeighborhoodGraph cycle_graph(std::size_t n);

/// side x side grid, every unit cell split by one diagonal. `alternating`
/// flips the diagonal direction on a checkerboard; otherwise all diagonals run
/// from (i, j) to (i + 1, j + 1). Vertex (i, j) has index i * side + j.
NeighborhoodGraph triangulated_grid(std::size_t side, bool alternating);

/// Uniform samples of the planar annulus inner <= |x| <= outer.
PointCloud annulus(std::size_t n, double inner, double outer, std::uint64_t seed);

/// Sorted vertices of the induced subgraph on the points selected by `keep`.
template <class Pred>
Subgraph select(const NeighborhoodGraph& graph, const PointCloud& cloud, Pred keep) {
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < cloud.size(); ++v)
        if (keep(cloud[v])) vs.push_back(v);
    return induced_subgraph(graph, std::move(vs));
}

/// Graph with an edge between every pair of points closer than `radius`.
NeighborhoodGraph radius_graph(const PointCloud& cloud, double radius);

}  // namespace atlaslearn::testing

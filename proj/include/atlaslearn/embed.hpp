#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "atlaslearn/atlas.hpp"
#include "atlaslearn/graph.hpp"

namespace atlaslearn {

/// d-dimensional coordinates for every vertex of one chart.
struct ChartEmbedding {
    std::uint32_t chart_id = 0;
    std::size_t dim = 0;
    /// sorted chart vertices; row r of `coords` belongs to vertices[r]
    std::vector<VertexId> vertices;
    Eigen::MatrixXd coords;
    /// share of spectral mass in negative eigenvalues (clamped to zero)
    double residual = 0.0;

    friend bool operator==(const ChartEmbedding&, const ChartEmbedding&) = default;
};

struct MdsResult {
    Eigen::MatrixXd coords;       ///< N x d, column means zero
    Eigen::VectorXd eigenvalues;  ///< top d eigenvalues of the centered Gram matrix, descending
    double residual = 0.0;
};

/// All-pairs path lengths within the chart's own edge set, in the order of
/// `chart.domain.vertices`. Throws StructuralError if the chart is disconnected.
Eigen::MatrixXd geodesic_matrix(const NeighborhoodGraph& graph, const ChartDomain& chart);

/// Classical (Torgerson) scaling: B = -1/2 J D^2 J, coordinates from the top d
/// eigenpairs scaled by sqrt(max(eigenvalue, 0)). Each axis is signed so its
/// largest-magnitude entry is positive.
///
/// Requires a square, symmetric, nonnegative D with zero diagonal and
/// 1 <= d < order (ParameterError); all top-d eigenvalues <= 0 raises
/// DegeneracyError.
MdsResult classical_mds(const Eigen::MatrixXd& distances, std::size_t d);

/// geodesic_matrix + classical_mds for every chart. Errors name the chart id.
std::vector<ChartEmbedding> embed_atlas(const NeighborhoodGraph& graph, const Atlas& atlas, std::size_t d);

}  // namespace atlaslearn

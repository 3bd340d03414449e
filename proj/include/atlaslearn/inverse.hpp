#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "atlaslearn/delaunay.hpp"
#include "atlaslearn/embed.hpp"
#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn {

/// Affine weights of `p` with respect to the d + 1 rows of `simplex_coords`:
/// sum_k l_k y_k = p and sum_k l_k = 1. Throws DegeneracyError when the
/// simplex is flat.
Eigen::VectorXd barycentric(const Eigen::VectorXd& p, const Eigen::MatrixXd& simplex_coords);

/// Index of the lowest-numbered simplex whose barycentric weights of p are
/// all >= -1e-9, or nullopt when p lies outside the hull.
std::optional<std::size_t> locate(const Triangulation& tri, const Eigen::VectorXd& p);

/// Simplex whose centroid is closest to p; the diagnostic carried by
/// OutOfDomainError.
std::size_t nearest_simplex(const Triangulation& tri, const Eigen::VectorXd& p);

/// Maps chart coordinates back to ambient space: the located simplex's
/// barycentric weights applied to the ambient points of its vertices.
/// Precomputes one inverse affine frame per simplex, so queries are a scan
/// of small matrix-vector products.
class InverseMap {
public:
    InverseMap(const ChartEmbedding& embedding, const PointCloud& cloud);

    const Triangulation& triangulation() const noexcept { return tri_; }
    const ChartEmbedding& embedding() const noexcept { return embedding_; }

    std::optional<std::size_t> locate(const Eigen::VectorXd& p) const;

    /// Throws OutOfDomainError outside the hull, ParameterError on a
    /// dimension mismatch.
    Eigen::VectorXd lift(const Eigen::VectorXd& p) const;

private:
    ChartEmbedding embedding_;
    Triangulation tri_;
    Eigen::MatrixXd ambient_;  ///< ambient point of each embedding row
    std::vector<Eigen::MatrixXd> frames_;
};

}  // namespace atlaslearn

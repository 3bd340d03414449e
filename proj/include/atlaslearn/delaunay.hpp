#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace atlaslearn {

/// Delaunay triangulation of a point set in R^d. Simplices index rows of
/// `vertex_coords`; each simplex lists its d + 1 vertices in ascending order
/// and the list itself is sorted, so equal inputs give equal triangulations.
struct Triangulation {
    std::size_t dim = 0;
    std::vector<std::vector<std::uint32_t>> simplices;
    Eigen::MatrixXd vertex_coords;  ///< one point per row

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// Triangulates the convex hull of the rows of `coords` (N x d).
///
/// d = 1 sorts the points and joins neighbours. For d >= 2 points are inserted
/// incrementally (Bowyer-Watson over a triangulation closed by a vertex at
/// infinity), which builds the lower hull of the points lifted to the
/// paraboloid. Cospherical ties are broken by perturbing the lifted coordinate
/// of point i by eps^(i+1), so lower indices dominate. Exact duplicates of an
/// earlier point are left out of every simplex.
///
/// Throws ParameterError for d = 0 or a column count other than d, and
/// DegeneracyError when the points span fewer than d dimensions.
Triangulation delaunay(const Eigen::MatrixXd& coords, std::size_t d);

/// Signed volume scaled by d!: det[y_1 - y_0, ..., y_d - y_0] with the
/// differences as rows.
double orientation(const Eigen::MatrixXd& coords, const std::vector<std::uint32_t>& simplex);

/// True when no vertex lies strictly inside the circumsphere of any simplex,
/// up to `tolerance` relative to the squared circumradius.
bool satisfies_empty_circumsphere(const Triangulation& tri, double tolerance = 1e-9);

}  // namespace atlaslearn

#include "atlaslearn/inverse.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "atlaslearn/error.hpp"
#include "atlaslearn/metrics.hpp"

namespace atlaslearn {

namespace {

constexpr double kInsideTolerance = 1e-9;

// [y_0 ... y_d; 1 ... 1], whose inverse maps (p, 1) to barycentric weights.
Eigen::MatrixXd affine_frame(const Eigen::MatrixXd& simplex_coords) {
    const Eigen::Index d = simplex_coords.cols();
    if (simplex_coords.rows() != d + 1) throw ParameterError("simplex needs d + 1 points");
    Eigen::MatrixXd m(d + 1, d + 1);
    m.topRows(d) = simplex_coords.transpose();
    m.row(d).setOnes();
    return m;
}

Eigen::MatrixXd inverse_frame(const Eigen::MatrixXd& simplex_coords) {
    const Eigen::MatrixXd m = affine_frame(simplex_coords);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    // scale-free flatness test on the edge vectors
    const Eigen::Index d = simplex_coords.cols();
    Eigen::MatrixXd edges(d, d);
    double bound = 1.0;
    for (Eigen::Index k = 1; k <= d; ++k) {
        edges.row(k - 1) = simplex_coords.row(k) - simplex_coords.row(0);
        bound *= edges.row(k - 1).norm();
    }
    if (bound == 0.0 || std::abs(edges.determinant()) <= 1e-12 * bound) {
        throw DegeneracyError("simplex is degenerate");
    }
    return lu.inverse();
}

Eigen::MatrixXd simplex_coords(const Triangulation& tri, std::size_t s) {
    const auto& simplex = tri.simplices[s];
    Eigen::MatrixXd out(static_cast<Eigen::Index>(simplex.size()), tri.vertex_coords.cols());
    for (std::size_t k = 0; k < simplex.size(); ++k) out.row(static_cast<Eigen::Index>(k)) = tri.vertex_coords.row(simplex[k]);
    return out;
}

Eigen::VectorXd homogeneous(const Eigen::VectorXd& p) {
    Eigen::VectorXd h(p.size() + 1);
    h << p, 1.0;
    return h;
}

void check_query(const Eigen::VectorXd& p, std::size_t dim) {
    if (static_cast<std::size_t>(p.size()) != dim) {
        throw ParameterError("query has " + std::to_string(p.size()) + " coordinates, chart has " +
                             std::to_string(dim));
    }
    if (!p.allFinite()) throw ParameterError("query must be finite");
}

}  // namespace

Eigen::VectorXd barycentric(const Eigen::VectorXd& p, const Eigen::MatrixXd& simplex) {
    check_query(p, static_cast<std::size_t>(simplex.cols()));
    return inverse_frame(simplex) * homogeneous(p);
}

std::optional<std::size_t> locate(const Triangulation& tri, const Eigen::VectorXd& p) {
    check_query(p, tri.dim);
    const Eigen::VectorXd h = homogeneous(p);
    for (std::size_t s = 0; s < tri.simplices.size(); ++s) {
        const Eigen::VectorXd l = inverse_frame(simplex_coords(tri, s)) * h;
        if (l.minCoeff() >= -kInsideTolerance) return s;
    }
    return std::nullopt;
}

std::size_t nearest_simplex(const Triangulation& tri, const Eigen::VectorXd& p) {
    check_query(p, tri.dim);
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < tri.simplices.size(); ++s) {
        const Eigen::VectorXd centroid = simplex_coords(tri, s).colwise().mean().transpose();
        const double dist = (centroid - p).squaredNorm();
        if (dist < best_dist) {
            best_dist = dist;
            best = s;
        }
    }
    return best;
}

InverseMap::InverseMap(const ChartEmbedding& embedding, const PointCloud& cloud)
    : embedding_(embedding),
      tri_(delaunay(embedding.coords, embedding.dim)),
      ambient_(gather_rows(cloud, embedding.vertices)) {
    frames_.reserve(tri_.simplices.size());
    for (std::size_t s = 0; s < tri_.simplices.size(); ++s) frames_.push_back(inverse_frame(simplex_coords(tri_, s)));
}

std::optional<std::size_t> InverseMap::locate(const Eigen::VectorXd& p) const {
    check_query(p, tri_.dim);
    const Eigen::VectorXd h = homogeneous(p);
    for (std::size_t s = 0; s < frames_.size(); ++s) {
        if ((frames_[s] * h).minCoeff() >= -kInsideTolerance) return s;
    }
    return std::nullopt;
}

Eigen::VectorXd InverseMap::lift(const Eigen::VectorXd& p) const {
    const auto s = locate(p);
    if (!s) {
        const std::size_t near = nearest_simplex(tri_, p);
        throw OutOfDomainError("point lies outside the convex hull of chart " + std::to_string(embedding_.chart_id) +
                                   " (nearest simplex " + std::to_string(near) + ")",
                               near);
    }
    const Eigen::VectorXd l = frames_[*s] * homogeneous(p);
    const auto& simplex = tri_.simplices[*s];
    // Weights at a vertex are exact unit vectors only up to roundoff; snap
    // queries that coincide with a vertex so the round trip is exact.
    for (const auto v : simplex) {
        if (tri_.vertex_coords.row(v).transpose() == p) return ambient_.row(v).transpose();
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(ambient_.cols());
    for (std::size_t k = 0; k < simplex.size(); ++k) out += l(static_cast<Eigen::Index>(k)) * ambient_.row(simplex[k]).transpose();
    return out;
}

}  // namespace atlaslearn

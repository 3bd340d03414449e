#include "atlaslearn/embed.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "atlaslearn/error.hpp"
#include "atlaslearn/kernels.hpp"

namespace atlaslearn {

Eigen::MatrixXd geodesic_matrix(const NeighborhoodGraph& graph, const ChartDomain& chart) {
    const CompactGraph g(graph, chart.domain);
    std::vector<std::uint32_t> sources(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) sources[i] = i;
    Eigen::MatrixXd d = kernels::shortest_paths_parallel(g, sources);
    if (!d.allFinite()) {
        throw StructuralError("chart " + std::to_string(chart.id) + " is not connected");
    }
    // Dijkstra runs from each end may round differently; average to make the
    // matrix exactly symmetric.
    d = 0.5 * (d + d.transpose()).eval();
    return d;
}

MdsResult classical_mds(const Eigen::MatrixXd& distances, std::size_t d) {
    const Eigen::Index n = distances.rows();
    if (distances.cols() != n) throw ParameterError("distance matrix must be square");
    if (d < 1 || static_cast<Eigen::Index>(d) >= n) {
        throw ParameterError("target dimension " + std::to_string(d) + " must be in [1, " +
                             std::to_string(n - 1) + "]");
    }
    if (!distances.allFinite() || (distances.array() < 0.0).any()) {
        throw ParameterError("distances must be finite and nonnegative");
    }
    const double scale = distances.cwiseAbs().maxCoeff();
    if ((distances - distances.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0) ||
        distances.diagonal().cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0)) {
        throw ParameterError("distance matrix must be symmetric with zero diagonal");
    }

    // Double centering of the squared distances.
    Eigen::MatrixXd b = distances.array().square().matrix();
    const Eigen::VectorXd row_mean = b.rowwise().mean();
    const double grand_mean = row_mean.mean();
    b.colwise() -= row_mean;
    b.rowwise() -= row_mean.transpose();
    b.array() += grand_mean;
    b *= -0.5;
    b = 0.5 * (b + b.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success) throw DegeneracyError("eigendecomposition failed");
    const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
    const Eigen::MatrixXd& vectors = solver.eigenvectors();

    MdsResult out;
    out.coords.resize(n, static_cast<Eigen::Index>(d));
    out.eigenvalues.resize(static_cast<Eigen::Index>(d));
    bool any_positive = false;
    for (std::size_t c = 0; c < d; ++c) {
        const Eigen::Index src = n - 1 - static_cast<Eigen::Index>(c);
        const double lambda = values[src];
        out.eigenvalues[static_cast<Eigen::Index>(c)] = lambda;
        Eigen::VectorXd v = vectors.col(src);
        Eigen::Index arg = 0;
        v.cwiseAbs().maxCoeff(&arg);
        if (v[arg] < 0.0) v = -v;
        if (lambda > 0.0) any_positive = true;
        out.coords.col(static_cast<Eigen::Index>(c)) = v * std::sqrt(std::max(lambda, 0.0));
    }
    if (!any_positive) throw DegeneracyError("no positive eigenvalue among the top " + std::to_string(d));

    const double total = values.cwiseAbs().sum();
    const double negative = (-values.array()).max(0.0).sum();
    out.residual = total > 0.0 ? negative / total : 0.0;
    // Eigenvectors of a centered matrix are centered up to rounding.
    out.coords.rowwise() -= out.coords.colwise().mean();
    return out;
}

std::vector<ChartEmbedding> embed_atlas(const NeighborhoodGraph& graph, const Atlas& atlas, std::size_t d) {
    std::vector<ChartEmbedding> out;
    out.reserve(atlas.charts.size());
    for (const ChartDomain& chart : atlas.charts) {
        try {
            MdsResult mds = classical_mds(geodesic_matrix(graph, chart), d);
            out.push_back({chart.id, d, chart.domain.vertices, std::move(mds.coords), mds.residual});
        } catch (const StructuralError& e) {
            throw StructuralError("chart " + std::to_string(chart.id) + ": " + e.what());
        } catch (const DegeneracyError& e) {
            throw DegeneracyError("chart " + std::to_string(chart.id) + ": " + e.what());
        } catch (const ParameterError& e) {
            throw DegeneracyError("chart " + std::to_string(chart.id) + " (" +
                                  std::to_string(chart.domain.vertices.size()) + " vertices): " + e.what());
        }
    }
    return out;
}

}  // namespace atlaslearn

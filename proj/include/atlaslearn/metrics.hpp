#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "atlaslearn/embed.hpp"
#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn {

/// Trustworthiness of an embedding (Venna and Kaski):
///
///   T(k) = 1 - 2 / (N k (2N - 3k - 1)) * sum_i sum_{j in U_k(i)} (r(i, j) - k)
///
/// where U_k(i) holds the embedded k nearest neighbors of i that are not among
/// its original k nearest, and r(i, j) is j's 1-based rank by original
/// distance from i. Distance ties rank the lower index first. Rows are points.
/// Requires k >= 1 and N >= 2k + 2 (ParameterError).
double trustworthiness(const Eigen::MatrixXd& original, const Eigen::MatrixXd& embedded, std::size_t k);

/// Rows of `cloud` selected by `indices`, as a matrix.
Eigen::MatrixXd gather_rows(const PointCloud& cloud, const std::vector<VertexId>& indices);

struct ChartScore {
    std::uint32_t chart_id = 0;
    double score = 0.0;

    friend bool operator==(const ChartScore&, const ChartScore&) = default;
};

struct TrustworthinessReport {
    std::vector<ChartScore> per_chart;
    double worst = 0.0;
    double mean = 0.0;
    std::size_t k_neighbors = 0;

    friend bool operator==(const TrustworthinessReport&, const TrustworthinessReport&) = default;
};

/// Scores every chart embedding against the ambient points of its vertices.
TrustworthinessReport report(const std::vector<ChartEmbedding>& embeddings, const PointCloud& cloud,
                             std::size_t k);

}  // namespace atlaslearn

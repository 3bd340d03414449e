#include "atlaslearn/metrics.hpp"

#include <algorithm>
#include <string>

#include "atlaslearn/error.hpp"
#include "atlaslearn/kernels.hpp"

namespace atlaslearn {

double trustworthiness(const Eigen::MatrixXd& original, const Eigen::MatrixXd& embedded, std::size_t k) {
    const auto n = static_cast<std::size_t>(original.rows());
    if (static_cast<std::size_t>(embedded.rows()) != n) {
        throw ParameterError("original and embedded point counts differ");
    }
    if (k < 1 || n < 2 * k + 2) {
        throw ParameterError("trustworthiness needs k >= 1 and N >= 2k + 2 (N=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ")");
    }
    const std::int64_t penalty = kernels::trustworthiness_penalty_parallel(original, embedded, k);
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    const double score = 1.0 - 2.0 / (nn * kk * (2.0 * nn - 3.0 * kk - 1.0)) * static_cast<double>(penalty);
    return std::clamp(score, 0.0, 1.0);
}

Eigen::MatrixXd gather_rows(const PointCloud& cloud, const std::vector<VertexId>& indices) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(indices.size()), static_cast<Eigen::Index>(cloud.dimension()));
    for (std::size_t r = 0; r < indices.size(); ++r) {
        auto p = cloud[indices[r]];
        for (std::size_t c = 0; c < p.size(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = p[c];
    }
    return out;
}

TrustworthinessReport report(const std::vector<ChartEmbedding>& embeddings, const PointCloud& cloud,
                             std::size_t k) {
    if (embeddings.empty()) throw ParameterError("no chart embeddings to score");
    TrustworthinessReport out;
    out.k_neighbors = k;
    double sum = 0.0;
    out.worst = 1.0;
    for (const ChartEmbedding& e : embeddings) {
        double score;
        try {
            score = trustworthiness(gather_rows(cloud, e.vertices), e.coords, k);
        } catch (const ParameterError& err) {
            throw ParameterError("chart " + std::to_string(e.chart_id) + ": " + err.what());
        }
        out.per_chart.push_back({e.chart_id, score});
        sum += score;
        out.worst = std::min(out.worst, score);
    }
    out.mean = sum / static_cast<double>(embeddings.size());
    return out;
}

}  // namespace atlaslearn

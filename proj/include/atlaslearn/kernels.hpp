#pragma once

// Data-parallel inner loops of the pipeline. Every kernel has a plain serial
// reference next to its OpenMP version; the two must agree exactly (tests and
// bench/bench_kernels.cpp compare them). Library code calls the parallel form.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "atlaslearn/graph.hpp"
#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn::kernels {

/// For each point, the k nearest other points ordered by (distance, index).
std::vector<std::vector<VertexId>> nearest_neighbors_serial(const PointCloud& cloud, std::size_t k);
std::vector<std::vector<VertexId>> nearest_neighbors_parallel(const PointCloud& cloud, std::size_t k);

/// For each point i, every j > i with distance <= epsilon.
std::vector<std::vector<VertexId>> epsilon_neighbors_serial(const PointCloud& cloud, double epsilon);
std::vector<std::vector<VertexId>> epsilon_neighbors_parallel(const PointCloud& cloud, double epsilon);

/// Dijkstra from each local source; row r holds distances from sources[r].
Eigen::MatrixXd shortest_paths_serial(const CompactGraph& graph, std::span<const std::uint32_t> sources);
Eigen::MatrixXd shortest_paths_parallel(const CompactGraph& graph, std::span<const std::uint32_t> sources);

/// Rank-penalty sum  sum_i sum_{j in U_k(i)} (r(i,j) - k)  of the
/// trustworthiness score. Rows of both matrices are points. Integer valued,
/// so the parallel reduction is exact.
std::int64_t trustworthiness_penalty_serial(const Eigen::MatrixXd& original,
                                            const Eigen::MatrixXd& embedded, std::size_t k);
std::int64_t trustworthiness_penalty_parallel(const Eigen::MatrixXd& original,
                                              const Eigen::MatrixXd& embedded, std::size_t k);

/// Breadth-first atomic-cycle scan (see atomic_cycles.hpp). Returns the
/// witness found from the lowest source vertex, so both forms agree.
std::optional<std::vector<std::uint32_t>> atomic_cycle_scan_serial(const CompactGraph& graph,
                                                                   std::size_t lambda,
                                                                   std::size_t chord_length);
std::optional<std::vector<std::uint32_t>> atomic_cycle_scan_parallel(const CompactGraph& graph,
                                                                     std::size_t lambda,
                                                                     std::size_t chord_length);

}  // namespace atlaslearn::kernels

#include <gtest/gtest.h>

#include <numeric>

#include "atlaslearn/kernels.hpp"
#include "atlaslearn/synthetic.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace atlaslearn;
using namespace atlaslearn::testing;

TEST(Kernels, NearestNeighborsAgree) {
    const auto cloud = sample_torus(700, 1).cloud;
    EXPECT_EQ(kernels::nearest_neighbors_serial(cloud, 10), kernels::nearest_neighbors_parallel(cloud, 10));
    // duplicates and ties resolve by index
    const auto grid = PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}});
    const auto nn = kernels::nearest_neighbors_serial(grid, 3);
    EXPECT_EQ(nn[0], (std::vector<VertexId>{4, 1, 2}));
    EXPECT_EQ(nn, kernels::nearest_neighbors_parallel(grid, 3));
}

TEST(Kernels, EpsilonNeighborsAgree) {
    const auto cloud = sample_sphere(700, 2).cloud;
    const auto s = kernels::epsilon_neighbors_serial(cloud, 0.2);
    EXPECT_EQ(s, kernels::epsilon_neighbors_parallel(cloud, 0.2));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (VertexId j : s[i]) EXPECT_GT(j, i);
}

TEST(Kernels, ShortestPathsAgree) {
    Rng rng(3);
    const auto g = random_connected_graph(150, 0.03, rng);
    const auto sub = whole_graph(g);
    const CompactGraph cg(g, sub);
    std::vector<std::uint32_t> sources(150);
    std::iota(sources.begin(), sources.end(), 0u);
    const auto a = kernels::shortest_paths_serial(cg, sources);
    EXPECT_TRUE(a == kernels::shortest_paths_parallel(cg, sources));
    EXPECT_LT((a - floyd_warshall(g, sub)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Kernels, TrustworthinessPenaltyAgrees) {
    Rng rng(4);
    Eigen::MatrixXd x(200, 3), y(200, 2);
    for (Eigen::Index i = 0; i < 200; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) x(i, j) = uniform01(rng);
        for (Eigen::Index j = 0; j < 2; ++j) y(i, j) = uniform01(rng);
    }
    const auto p = kernels::trustworthiness_penalty_serial(x, y, 10);
    EXPECT_GT(p, 0);
    EXPECT_EQ(p, kernels::trustworthiness_penalty_parallel(x, y, 10));
    EXPECT_EQ(kernels::trustworthiness_penalty_serial(x, x, 10), 0);
}

TEST(Kernels, AtomicCycleScanAgrees) {
    const auto fx = hemisphere_pair();
    const auto inter = intersect(fx.graph, fx.a, fx.b);
    const CompactGraph cg(fx.graph, inter);
    const auto a = kernels::atomic_cycle_scan_serial(cg, 8, 2);
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(a, kernels::atomic_cycle_scan_parallel(cg, 8, 2));

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_graph(60, 0.06, rng);
        const CompactGraph c(g, whole_graph(g));
        for (std::size_t n : {1u, 2u})
            EXPECT_EQ(kernels::atomic_cycle_scan_serial(c, 5, n), kernels::atomic_cycle_scan_parallel(c, 5, n));
    }
}

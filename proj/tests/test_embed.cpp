#include <gtest/gtest.h>

#include <cmath>

#include "atlaslearn/embed.hpp"
#include "atlaslearn/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace atlaslearn;
using namespace atlaslearn::testing;

namespace {

Eigen::MatrixXd random_points(Rng& rng, Eigen::Index n, Eigen::Index d) {
    Eigen::MatrixXd x(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < d; ++j) x(i, j) = uniform(rng, -1.0, 1.0);
    return x;
}

double correlation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const Eigen::ArrayXd x = a.reshaped().array() - a.mean();
    const Eigen::ArrayXd y = b.reshaped().array() - b.mean();
    return (x * y).sum() / std::sqrt((x * x).sum() * (y * y).sum());
}

}  // namespace

TEST(GeodesicMatrix, PathAndTriangle) {
    const NeighborhoodGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    Eigen::MatrixXd expected(3, 3);
    expected << 0, 1, 2, 1, 0, 1, 2, 1, 0;
    EXPECT_EQ(geodesic_matrix(path, {0, whole_graph(path)}), expected);

    const NeighborhoodGraph tri(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    EXPECT_EQ(geodesic_matrix(tri, {0, whole_graph(tri)}), Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3));
}

TEST(GeodesicMatrix, MatchesFloydWarshall) {
    Rng rng(100);
    const auto g = random_connected_graph(100, 0.04, rng);
    const ChartDomain chart{0, whole_graph(g)};
    EXPECT_LT((geodesic_matrix(g, chart) - floyd_warshall(g, chart.domain)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(GeodesicMatrix, DisconnectedChartIsStructuralError) {
    const NeighborhoodGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    EXPECT_THROW(geodesic_matrix(g, {7, whole_graph(g)}), StructuralError);
}

TEST(ClassicalMds, CollinearPoints) {
    Eigen::MatrixXd d(3, 3);
    d << 0, 1, 2, 1, 0, 1, 2, 1, 0;
    const auto r = classical_mds(d, 1);
    EXPECT_NEAR(std::abs(r.coords(0, 0)), 1.0, 1e-12);
    EXPECT_NEAR(r.coords(1, 0), 0.0, 1e-12);
    EXPECT_NEAR(r.coords(0, 0), -r.coords(2, 0), 1e-12);
    // sign convention: largest-magnitude entry positive (ties go to the first)
    EXPECT_GT(r.coords.col(0).maxCoeff(), 0.0);
}

TEST(ClassicalMds, UnitSquare) {
    Eigen::MatrixXd square(4, 2);
    square << 0, 0, 1, 0, 1, 1, 0, 1;
    const auto r = classical_mds(euclidean_distances(square), 2);
    EXPECT_LT(procrustes_residual(r.coords, square), 1e-9);
}

TEST(ClassicalMds, RecoversRandomConfigurations) {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = static_cast<Eigen::Index>(1 + trial % 3);
        const auto n = static_cast<Eigen::Index>(d + 2 + uniform_index(rng, 40));
        const auto x = random_points(rng, n, d);
        const auto r = classical_mds(euclidean_distances(x), static_cast<std::size_t>(d));
        EXPECT_LT(procrustes_residual(r.coords, x), 1e-6);
        EXPECT_LT(r.coords.colwise().mean().cwiseAbs().maxCoeff(), 1e-9);
        for (Eigen::Index c = 0; c + 1 < d; ++c) {
            EXPECT_GE(r.eigenvalues(c), r.eigenvalues(c + 1));
            EXPECT_GE(r.coords.col(c).squaredNorm(), r.coords.col(c + 1).squaredNorm() - 1e-9);
        }
        EXPECT_LT(r.residual, 1e-9);
    }
}

TEST(ClassicalMds, PermutationEquivariant) {
    Rng rng(8);
    const auto x = random_points(rng, 20, 2);
    const auto d = euclidean_distances(x);
    Eigen::VectorXi perm(20);
    for (int i = 0; i < 20; ++i) perm(i) = (i * 7) % 20;
    const Eigen::PermutationMatrix<Eigen::Dynamic> p(perm);
    const auto a = classical_mds(d, 2).coords;
    const auto b = classical_mds(p * d * p.transpose(), 2).coords;
    EXPECT_LT(((p * a) - b).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(ClassicalMds, FlatGridGeodesics) {
    // 10x10 grid with Euclidean edge lengths (unit sides, sqrt 2 diagonals)
    const auto g = triangulated_grid(10, true);
    const auto d = geodesic_matrix(g, {0, whole_graph(g)});
    const auto r = classical_mds(d, 2);
    EXPECT_GT(correlation(euclidean_distances(r.coords), d), 0.99);
}

TEST(ClassicalMds, NonEuclideanInputReportsResidual) {
    // 4-cycle path metric is not Euclidean-embeddable in 1-D
    Eigen::MatrixXd d(4, 4);
    d << 0, 1, 2, 1, 1, 0, 1, 2, 2, 1, 0, 1, 1, 2, 1, 0;
    EXPECT_GE(classical_mds(d, 1).residual, 0.0);
    // a star metric has negative spectrum
    Eigen::MatrixXd star(4, 4);
    star << 0, 1, 1, 1, 1, 0, 2, 2, 1, 2, 0, 2, 1, 2, 2, 0;
    EXPECT_GT(classical_mds(star, 2).residual, 0.0);
}

TEST(ClassicalMds, Errors) {
    Eigen::MatrixXd d(3, 3);
    d << 0, 1, 2, 1, 0, 1, 2, 1, 0;
    EXPECT_THROW(classical_mds(d, 0), ParameterError);
    EXPECT_THROW(classical_mds(d, 3), ParameterError);
    EXPECT_THROW(classical_mds(Eigen::MatrixXd::Zero(2, 3), 1), ParameterError);
    Eigen::MatrixXd asym = d;
    asym(0, 1) = 5;
    EXPECT_THROW(classical_mds(asym, 1), ParameterError);
    Eigen::MatrixXd neg = d;
    neg(0, 1) = neg(1, 0) = -1;
    EXPECT_THROW(classical_mds(neg, 1), ParameterError);
    EXPECT_THROW(classical_mds(Eigen::MatrixXd::Zero(3, 3), 1), DegeneracyError);
}

TEST(EmbedAtlas, SingleCollinearChart) {
    const NeighborhoodGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    Atlas atlas;
    atlas.charts.push_back({4, whole_graph(path)});
    const auto e = embed_atlas(path, atlas, 1);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].chart_id, 4u);
    EXPECT_EQ(e[0].vertices, (std::vector<VertexId>{0, 1, 2}));
    EXPECT_NEAR(std::abs(e[0].coords(0, 0)), 1.0, 1e-12);
    EXPECT_NEAR(e[0].coords(1, 0), 0.0, 1e-12);
}

TEST(EmbedAtlas, ErrorNamesChart) {
    const NeighborhoodGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    Atlas atlas;
    atlas.charts.push_back({0, induced_subgraph(g, {0, 1})});
    atlas.charts.push_back({9, induced_subgraph(g, {2})});
    try {
        embed_atlas(g, atlas, 1);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("chart 9"), std::string::npos) << e.what();
    }
}

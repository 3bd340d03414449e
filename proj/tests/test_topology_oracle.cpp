// Sanity checks for the hole detector used on learned charts.
#include <gtest/gtest.h>

#include <numbers>

#include "atlaslearn/atlas.hpp"
#include "atlaslearn/synthetic.hpp"
#include "topology.hpp"

using namespace atlaslearn;
using namespace atlaslearn::testing;

namespace {

long manifold_betti1(const std::string& name, std::size_t n) {
    const auto data = sample_manifold(name, n, 1);
    const Cover cover(name, data);
    const double r = 2.0 * knn_radius(cover, 10);
    return rips_betti1(cover.size(), [&](std::size_t a, std::size_t b) {
        return cover.distance(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }, r);
}

}  // namespace

TEST(RipsBetti1, SmallComplexes) {
    // square: one loop at side length, filled once the diagonals join
    const std::vector<Coords> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto dist = [&](std::size_t a, std::size_t b) { return euclid(square[a], square[b]); };
    EXPECT_EQ(rips_betti1(4, dist, 1.0), 1);
    EXPECT_EQ(rips_betti1(4, dist, 1.5), 0);
    EXPECT_EQ(rips_betti1(4, dist, 0.5), 0);
}

TEST(RipsBetti1, WholeManifolds) {
    EXPECT_EQ(manifold_betti1("sphere", 800), 0);
    EXPECT_EQ(manifold_betti1("torus", 1500), 2);
    EXPECT_EQ(manifold_betti1("klein", 1500), 2);
    EXPECT_EQ(manifold_betti1("cylinder", 800), 1);
}

TEST(ChartHoles, WindingLoopOnCylinder) {
    const auto data = sample_cylinder(800, 2);
    const auto graph = build_knn_graph(data.cloud, 10);
    const Cover cover("cylinder", data);
    const double r = 2.0 * knn_radius(cover, 10);
    EXPECT_TRUE(chart_holes(graph, whole_graph(graph), cover, r).winding);

    // a band of heights away from the seam: no loop, no hole
    std::vector<VertexId> patch;
    for (VertexId v = 0; v < data.cloud.size(); ++v)
        if (data.params[v][0] > 0.5 && data.params[v][0] < 3.5) patch.push_back(v);
    const auto holes = chart_holes(graph, induced_subgraph(graph, patch), cover, r);
    EXPECT_TRUE(holes.hole_free()) << holes.betti1;
}

TEST(ChartHoles, PuncturedPatchHasAHole) {
    const auto data = sample_torus(2000, 3);
    const auto graph = build_knn_graph(data.cloud, 10);
    const Cover cover("torus", data);
    const double r = 2.0 * knn_radius(cover, 10);
    const double pi = std::numbers::pi;
    std::vector<VertexId> patch;
    for (VertexId v = 0; v < data.cloud.size(); ++v) {
        const double t = data.params[v][0] - pi, p = data.params[v][1] - pi;
        const double rr = t * t + p * p;
        if (rr < 1.6 * 1.6 && rr > 0.7 * 0.7) patch.push_back(v);
    }
    const auto holes = chart_holes(graph, induced_subgraph(graph, patch), cover, r);
    EXPECT_FALSE(holes.winding);
    EXPECT_EQ(holes.betti1, 1);
}

TEST(ChartHoles, InitialChartsAreHoleFree) {
    const auto data = sample_torus(1500, 4);
    const auto graph = build_knn_graph(data.cloud, 10);
    const Cover cover("torus", data);
    const double r = 2.0 * knn_radius(cover, 10);
    const auto atlas = initialize_charts(graph, farthest_point_sample(graph, 15, 4));
    for (const auto& c : atlas.charts) EXPECT_TRUE(chart_holes(graph, c.domain, cover, r).hole_free()) << c.id;
}

#include "fixtures.hpp"

#include <cmath>
#include <numbers>

#include "atlaslearn/random.hpp"

namespace atlaslearn::testing {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

NeighborhoodGraph radius_graph(const PointCloud& cloud, double radius) {
    std::vector<Edge> edges;
    for (VertexId a = 0; a < cloud.size(); ++a)
        for (VertexId b = a + 1; b < cloud.size(); ++b) {
            const double d = distance(cloud[a], cloud[b]);
            if (d < radius) edges.push_back({a, b, d});
        }
    return NeighborhoodGraph(cloud.size(), std::move(edges));
}

ChartPair planar_disk_pair() {
    std::vector<std::vector<double>> rows;
    for (int i = -14; i <= 14; ++i)
        for (int j = -14; j <= 14; ++j) {
            const double x = i + 0.5 * j, y = j * std::sqrt(3.0) / 2.0;
            if (x * x + y * y <= 13.0 * 13.0) rows.push_back({x, y});
        }
    ChartPair out;
    out.cloud = PointCloud::from_rows(rows);
    out.graph = radius_graph(out.cloud, 1.01);
    auto disk = [](double cx) {
        return [cx](std::span<const double> p) { return (p[0] - cx) * (p[0] - cx) + p[1] * p[1] <= 36.0; };
    };
    out.a = {0, select(out.graph, out.cloud, disk(-3.0))};
    out.b = {1, select(out.graph, out.cloud, disk(3.0))};
    return out;
}

ChartPair half_cylinder_pair() {
    const int columns = 24, layers = 9;
    const double step = 2.0 * kPi / columns;
    const double rise = 2.0 * std::sin(step / 2.0) * std::sqrt(3.0) / 2.0;
    std::vector<std::vector<double>> rows;
    std::vector<double> angle;
    for (int h = 0; h < layers; ++h)
        for (int c = 0; c < columns; ++c) {
            const double theta = (c + 0.5 * (h % 2)) * step;
            rows.push_back({std::cos(theta), std::sin(theta), h * rise});
            angle.push_back(theta);
        }
    ChartPair out;
    out.cloud = PointCloud::from_rows(rows);
    out.graph = radius_graph(out.cloud, 1.2 * 2.0 * std::sin(step / 2.0));
    auto arc = [&](double lo, double hi) {
        std::vector<VertexId> vs;
        for (VertexId v = 0; v < angle.size(); ++v) {
            for (double t : {angle[v], angle[v] + 2.0 * kPi, angle[v] - 2.0 * kPi}) {
                if (t >= lo - 1e-12 && t <= hi + 1e-12) {
                    vs.push_back(v);
                    break;
                }
            }
        }
        return induced_subgraph(out.graph, std::move(vs));
    };
    out.a = {0, arc(-kPi / 4.0, 5.0 * kPi / 4.0)};
    out.b = {1, arc(3.0 * kPi / 4.0, 9.0 * kPi / 4.0)};
    return out;
}

ChartPair hemisphere_pair() {
    const int n = 800;
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / n, r = std::sqrt(1.0 - z * z);
        rows.push_back({r * std::cos(golden * i), r * std::sin(golden * i), z});
    }
    ChartPair out;
    out.cloud = PointCloud::from_rows(rows);
    out.graph = build_knn_graph(out.cloud, 8);
    out.a = {0, select(out.graph, out.cloud, [](std::span<const double> p) { return p[2] >= -0.25; })};
    out.b = {1, select(out.graph, out.cloud, [](std::span<const double> p) { return p[2] <= 0.25; })};
    return out;
}

NeighborhoodGraph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % n), 1.0});
    return NeighborhoodGraph(n, std::move(edges));
}

NeighborhoodGraph triangulated_grid(std::size_t side, bool alternating) {
    auto id = [side](std::size_t i, std::size_t j) { return static_cast<VertexId>(i * side + j); };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) {
            if (i + 1 < side) edges.push_back({id(i, j), id(i + 1, j), 1.0});
            if (j + 1 < side) edges.push_back({id(i, j), id(i, j + 1), 1.0});
            if (i + 1 < side && j + 1 < side) {
                if (!alternating || (i + j) % 2 == 0) {
                    edges.push_back({id(i, j), id(i + 1, j + 1), std::sqrt(2.0)});
                } else {
                    edges.push_back({id(i + 1, j), id(i, j + 1), std::sqrt(2.0)});
                }
            }
        }
    return NeighborhoodGraph(side * side, std::move(edges));
}

PointCloud annulus(std::size_t n, double inner, double outer, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> values;
    while (values.size() < 2 * n) {
        const double x = uniform(rng, -outer, outer), y = uniform(rng, -outer, outer);
        const double r2 = x * x + y * y;
        if (r2 >= inner * inner && r2 <= outer * outer) {
            values.push_back(x);
            values.push_back(y);
        }
    }
    return PointCloud(2, std::move(values));
}

}  // namespace atlaslearn::testing

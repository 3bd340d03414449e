#include "atlaslearn/atlas.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <string>

#include "atlaslearn/error.hpp"
#include "atlaslearn/kernels.hpp"
#include "atlaslearn/random.hpp"

namespace atlaslearn {

namespace {

void require_connected(const NeighborhoodGraph& graph) {
    auto components = connected_components(graph, whole_graph(graph));
    if (components.size() <= 1) return;
    std::string sizes;
    for (std::size_t i = 0; i < components.size() && i < 16; ++i) {
        if (i) sizes += ", ";
        sizes += std::to_string(components[i].size());
    }
    if (components.size() > 16) sizes += ", ...";
    throw StructuralError("neighborhood graph has " + std::to_string(components.size()) +
                          " connected components (sizes " + sizes + ")");
}

bool overlaps(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

template <class T>
std::vector<T> sorted_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<VertexId> farthest_point_sample_from(const NeighborhoodGraph& graph, std::size_t count,
                                                 VertexId first) {
    const std::size_t n = graph.vertex_count();
    if (count < 1 || count > n) {
        throw ParameterError("sample count must be in [1, " + std::to_string(n) + "], got " +
                             std::to_string(count));
    }
    if (first >= n) throw ParameterError("first sample out of range");
    require_connected(graph);

    const CompactGraph g(graph, whole_graph(graph));
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    std::vector<char> chosen(n, 0);
    std::vector<VertexId> picks{first};
    chosen[first] = 1;
    while (true) {
        const std::uint32_t src = picks.back();
        const Eigen::MatrixXd row = kernels::shortest_paths_serial(g, std::span(&src, 1));
        for (std::size_t v = 0; v < n; ++v) nearest[v] = std::min(nearest[v], row(0, static_cast<Eigen::Index>(v)));
        if (picks.size() == count) break;
        VertexId best = 0;
        double best_dist = -1.0;
        for (VertexId v = 0; v < n; ++v) {
            if (!chosen[v] && nearest[v] > best_dist) {
                best = v;
                best_dist = nearest[v];
            }
        }
        chosen[best] = 1;
        picks.push_back(best);
    }
    return picks;
}

std::vector<VertexId> farthest_point_sample(const NeighborhoodGraph& graph, std::size_t count,
                                            std::uint64_t seed) {
    if (graph.vertex_count() == 0) throw ParameterError("graph has no vertices");
    Rng rng(seed);
    const auto first = static_cast<VertexId>(uniform_index(rng, graph.vertex_count()));
    return farthest_point_sample_from(graph, count, first);
}

Atlas initialize_charts(const NeighborhoodGraph& graph, const std::vector<VertexId>& seeds) {
    const std::size_t n = graph.vertex_count();
    if (seeds.empty()) throw ParameterError("at least one seed is required");
    {
        auto sorted = seeds;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ParameterError("seeds must be distinct");
        }
        if (sorted.back() >= n) throw ParameterError("seed out of range");
    }

    std::vector<std::vector<VertexId>> members(seeds.size());
    std::vector<std::vector<char>> in_chart(seeds.size(), std::vector<char>(n, 0));
    std::vector<std::uint32_t> cover_count(n, 0);
    std::size_t covered = 0;
    for (std::size_t c = 0; c < seeds.size(); ++c) {
        members[c].push_back(seeds[c]);
        in_chart[c][seeds[c]] = 1;
        if (cover_count[seeds[c]]++ == 0) ++covered;
    }

    // One synchronized round: every chart adds the neighbors of the vertices
    // it held when the round started.
    auto grow = [&]() {
        std::size_t added = 0;
        for (std::size_t c = 0; c < seeds.size(); ++c) {
            const std::size_t frontier_end = members[c].size();
            for (std::size_t i = 0; i < frontier_end; ++i) {
                for (const Neighbor& nb : graph.neighbors(members[c][i])) {
                    if (in_chart[c][nb.vertex]) continue;
                    in_chart[c][nb.vertex] = 1;
                    members[c].push_back(nb.vertex);
                    if (cover_count[nb.vertex]++ == 0) ++covered;
                    ++added;
                }
            }
        }
        return added;
    };

    while (covered < n) {
        if (grow() == 0) {
            throw StructuralError("chart seeds do not reach " + std::to_string(n - covered) +
                                  " vertices; the graph is disconnected");
        }
    }
    grow();

    Atlas atlas;
    atlas.charts.reserve(seeds.size());
    for (std::size_t c = 0; c < seeds.size(); ++c) {
        atlas.charts.push_back({static_cast<std::uint32_t>(c), induced_subgraph(graph, std::move(members[c]))});
    }
    return atlas;
}

Subgraph intersect(const NeighborhoodGraph& graph, const ChartDomain& a, const ChartDomain& b) {
    std::vector<VertexId> shared;
    std::set_intersection(a.domain.vertices.begin(), a.domain.vertices.end(), b.domain.vertices.begin(),
                          b.domain.vertices.end(), std::back_inserter(shared));
    return induced_subgraph(graph, std::move(shared));
}

bool can_combine(const NeighborhoodGraph& graph, const Subgraph& intersection, const CombineOptions& options) {
    if (intersection.empty()) return false;
    if (connected_components(graph, intersection).size() != 1) return false;
    return !has_atomic_cycle_longer_than(graph, intersection, options.lambda, options.atomic);
}

Atlas combine_until_fixpoint(const NeighborhoodGraph& graph, Atlas atlas, const CombineOptions& options,
                             std::uint64_t seed, CombineStats* stats) {
    if (options.lambda < 3) throw ParameterError("lambda must be at least 3");
    CombineStats local_stats;
    Rng rng(seed);
    std::sort(atlas.charts.begin(), atlas.charts.end(),
              [](const ChartDomain& a, const ChartDomain& b) { return a.id < b.id; });

    // alive[i] is false once chart i has been absorbed
    std::vector<char> alive(atlas.charts.size(), 1);
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
        for (std::size_t j = i + 1; j < atlas.charts.size(); ++j) {
            if (overlaps(atlas.charts[i].domain.vertices, atlas.charts[j].domain.vertices)) pending.emplace_back(i, j);
        }
    }

    while (!pending.empty()) {
        const std::size_t pick = uniform_index(rng, pending.size());
        const auto cur = pending[pick];
        pending[pick] = pending.back();
        pending.pop_back();
        const auto [i, j] = cur;

        ChartDomain& keep = atlas.charts[i];
        ChartDomain& gone = atlas.charts[j];
        ++local_stats.pairs_checked;
        const Subgraph inter = intersect(graph, keep, gone);
        if (inter.empty() || connected_components(graph, inter).size() != 1) {
            ++local_stats.rejected_disconnected;
            continue;
        }
        if (has_atomic_cycle_longer_than(graph, inter, options.lambda, options.atomic)) {
            ++local_stats.rejected_cycle;
            continue;
        }

        ++local_stats.merges;
        keep.domain.vertices = sorted_union(keep.domain.vertices, gone.domain.vertices);
        keep.domain.edges = sorted_union(keep.domain.edges, gone.domain.edges);
        gone.domain = {};
        alive[j] = 0;

        std::erase_if(pending, [&](const auto& p) {
            return p.first == i || p.second == i || p.first == j || p.second == j;
        });
        for (std::size_t x = 0; x < atlas.charts.size(); ++x) {
            if (x == i || !alive[x]) continue;
            if (overlaps(keep.domain.vertices, atlas.charts[x].domain.vertices)) {
                pending.emplace_back(std::min(i, x), std::max(i, x));
            }
        }
    }

    Atlas out;
    for (std::size_t c = 0; c < atlas.charts.size(); ++c) {
        if (alive[c]) out.charts.push_back(std::move(atlas.charts[c]));
    }
    if (stats) *stats = local_stats;
    return out;
}

bool covers(const NeighborhoodGraph& graph, const Atlas& atlas) {
    std::vector<char> seen(graph.vertex_count(), 0);
    for (const auto& chart : atlas.charts) {
        for (VertexId v : chart.domain.vertices) {
            if (v < seen.size()) seen[v] = 1;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace atlaslearn

#include "atlaslearn/pipeline.hpp"

#include <algorithm>

#include "atlaslearn/atlas.hpp"
#include "atlaslearn/delaunay.hpp"
#include "atlaslearn/embed.hpp"
#include "atlaslearn/error.hpp"
#include "atlaslearn/metrics.hpp"
#include "atlaslearn/random.hpp"
#include "atlaslearn/synthetic.hpp"
#include "atlaslearn/version.hpp"

namespace atlaslearn {

namespace {

enum Stream : std::uint64_t { kNoiseStream = 1, kSeedingStream = 2, kCombineStream = 3 };

void require_connected(const NeighborhoodGraph& graph) {
    const auto components = connected_components(graph, whole_graph(graph));
    if (components.size() <= 1) return;
    std::string sizes;
    for (std::size_t i = 0; i < components.size(); ++i) {
        sizes += (i ? ", " : "") + std::to_string(components[i].size());
    }
    throw StructuralError("neighborhood graph is disconnected: " + std::to_string(components.size()) +
                          " components of sizes " + sizes);
}

}  // namespace

NeighborhoodGraph build_graph(const PipelineConfig& config, const PointCloud& cloud) {
    config.validate();
    return config.knn ? build_knn_graph(cloud, *config.knn) : build_epsilon_graph(cloud, *config.epsilon);
}

std::size_t default_initial_charts(std::size_t point_count) {
    return std::min(point_count, std::max<std::size_t>(8, point_count / 100));
}

AtlasArtifact run(const PipelineConfig& config, const PointCloud& cloud) { return run(config, cloud, {}, {}); }

AtlasArtifact run(const PipelineConfig& config, const PointCloud& input, std::vector<std::string> param_names,
                  std::vector<std::vector<double>> params) {
    config.validate();
    if (input.empty()) throw ParameterError("point cloud is empty");
    if (!params.empty() && params.size() != input.size()) {
        throw ParameterError("ground-truth rows (" + std::to_string(params.size()) + ") do not match points (" +
                             std::to_string(input.size()) + ")");
    }

    AtlasArtifact out;
    out.config = config;
    out.provenance = {input_hash(input), std::string(kToolVersion)};
    out.param_names = std::move(param_names);
    out.params = std::move(params);
    out.cloud = input;
    if (config.noise_sigma > 0.0) {
        add_gaussian_noise(out.cloud, config.noise_sigma, derive_seed(config.seed, kNoiseStream));
    }

    const NeighborhoodGraph graph = build_graph(config, out.cloud);
    require_connected(graph);
    out.graph_edges = graph.edges();

    Atlas atlas;
    if (config.baseline) {
        atlas.charts.push_back({0, whole_graph(graph)});
    } else {
        const std::size_t count =
            config.initial_charts ? config.initial_charts : default_initial_charts(out.cloud.size());
        const auto seeds = farthest_point_sample(graph, count, derive_seed(config.seed, kSeedingStream));
        CombineOptions options;
        options.lambda = config.lambda;
        options.atomic.chord_length = config.chord_length;
        atlas = combine_until_fixpoint(graph, initialize_charts(graph, seeds), options,
                                       derive_seed(config.seed, kCombineStream), &out.stats);
    }
    out.charts = atlas.charts;

    out.embeddings = embed_atlas(graph, atlas, config.dim);
    for (const ChartEmbedding& e : out.embeddings) {
        try {
            out.triangulations.push_back(delaunay(e.coords, e.dim));
        } catch (const DegeneracyError& err) {
            throw DegeneracyError("chart " + std::to_string(e.chart_id) + ": " + err.what());
        }
    }
    out.report = report(out.embeddings, out.cloud, config.trust_k);
    return out;
}

}  // namespace atlaslearn

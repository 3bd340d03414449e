#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atlaslearn/artifact.hpp"
#include "atlaslearn/graph.hpp"
#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn {

/// Neighborhood graph selected by the config (k-NN or epsilon ball).
NeighborhoodGraph build_graph(const PipelineConfig& config, const PointCloud& cloud);

/// Seed chart count used when config.initial_charts is 0: max(8, m / 100),
/// capped at m.
std::size_t default_initial_charts(std::size_t point_count);

/// Graph, atlas, per-chart embedding, triangulation and trustworthiness
/// report. Baseline mode embeds the whole graph as a single chart.
///
/// Errors: ParameterError for an invalid config, StructuralError when the
/// graph is disconnected (message lists component sizes), DegeneracyError
/// naming the chart that cannot be embedded in config.dim dimensions.
AtlasArtifact run(const PipelineConfig& config, const PointCloud& cloud);

/// Same, attaching ground-truth parameters (one row per point) for export.
AtlasArtifact run(const PipelineConfig& config, const PointCloud& cloud, std::vector<std::string> param_names,
                  std::vector<std::vector<double>> params);

}  // namespace atlaslearn

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlaslearn/atlas.hpp"
#include "atlaslearn/delaunay.hpp"
#include "atlaslearn/embed.hpp"
#include "atlaslearn/graph.hpp"
#include "atlaslearn/metrics.hpp"
#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn {

/// Everything that determines a run. Exactly one of `knn` / `epsilon` is set.
struct PipelineConfig {
    std::optional<std::size_t> knn = 10;
    std::optional<double> epsilon;
    std::size_t lambda = 8;
    /// the n of "length-n chords" in the atomic-cycle test
    std::size_t chord_length = 2;
    /// 0 selects max(8, m / 100)
    std::size_t initial_charts = 0;
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    std::size_t trust_k = 10;
    /// one chart over the whole graph (plain ISOMAP)
    bool baseline = false;
    /// Gaussian noise added to the input before the graph is built
    double noise_sigma = 0.0;

    /// Throws ParameterError on an invalid combination.
    void validate() const;

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

struct Provenance {
    /// FNV-1a 64 over the input cloud's dimension and IEEE-754 values, as hex
    std::string input_hash;
    std::string tool_version;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Result of one pipeline run. Self-contained: it carries the input points,
/// the graph and every triangulation, so lift and report need no recomputation.
struct AtlasArtifact {
    PipelineConfig config;
    PointCloud cloud;
    /// optional ground truth, one row per point
    std::vector<std::string> param_names;
    std::vector<std::vector<double>> params;
    std::vector<Edge> graph_edges;
    std::vector<ChartDomain> charts;
    std::vector<ChartEmbedding> embeddings;
    std::vector<Triangulation> triangulations;
    TrustworthinessReport report;
    CombineStats stats;
    Provenance provenance;

    /// Index into charts/embeddings/triangulations for a chart id, or nullopt.
    std::optional<std::size_t> chart_index(std::uint32_t chart_id) const;

    friend bool operator==(const AtlasArtifact&, const AtlasArtifact&) = default;
};

inline constexpr std::string_view kArtifactSchema = "atlaslearn.artifact";
inline constexpr int kArtifactMajor = 1;
inline constexpr int kArtifactMinor = 0;

std::string input_hash(const PointCloud& cloud);

/// JSON text. Floats are written in shortest round-trip form, so a load
/// reproduces every double bit for bit.
void save_artifact(const AtlasArtifact& artifact, std::ostream& out);
void save_artifact(const AtlasArtifact& artifact, const std::filesystem::path& path);

/// Throws ParseError for malformed or truncated input and VersionError when
/// the major format version is not supported.
AtlasArtifact load_artifact(std::istream& in);
AtlasArtifact load_artifact(const std::filesystem::path& path);

}  // namespace atlaslearn

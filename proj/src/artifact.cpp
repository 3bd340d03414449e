#include "atlaslearn/artifact.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "atlaslearn/error.hpp"

namespace atlaslearn {

using Json = nlohmann::ordered_json;

void PipelineConfig::validate() const {
    if (knn.has_value() == epsilon.has_value()) {
        throw ParameterError("exactly one of knn and epsilon must be set");
    }
    if (knn && *knn < 1) throw ParameterError("knn must be positive");
    if (epsilon && !(*epsilon > 0.0 && std::isfinite(*epsilon))) throw ParameterError("epsilon must be positive");
    if (lambda < 3) throw ParameterError("lambda must be at least 3");
    if (chord_length < 1) throw ParameterError("chord length must be positive");
    if (dim < 1) throw ParameterError("dim must be positive");
    if (trust_k < 1) throw ParameterError("trust_k must be positive");
    if (!(noise_sigma >= 0.0 && std::isfinite(noise_sigma))) throw ParameterError("noise sigma must be nonnegative");
}

std::optional<std::size_t> AtlasArtifact::chart_index(std::uint32_t chart_id) const {
    for (std::size_t i = 0; i < charts.size(); ++i) {
        if (charts[i].id == chart_id) return i;
    }
    return std::nullopt;
}

std::string input_hash(const PointCloud& cloud) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t word) {
        for (int b = 0; b < 8; ++b) {
            h ^= (word >> (8 * b)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(cloud.dimension());
    for (const double v : cloud.values()) mix(std::bit_cast<std::uint64_t>(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Json matrix_rows(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd read_matrix(const Json& rows, std::size_t cols) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Json& row = rows.at(r);
        if (row.size() != cols) throw ParseError("matrix row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row.at(c).get<double>();
        }
    }
    return m;
}

Json config_json(const PipelineConfig& c) {
    Json j;
    j["knn"] = c.knn ? Json(*c.knn) : Json(nullptr);
    j["epsilon"] = c.epsilon ? Json(*c.epsilon) : Json(nullptr);
    j["lambda"] = c.lambda;
    j["chord_length"] = c.chord_length;
    j["initial_charts"] = c.initial_charts;
    j["dim"] = c.dim;
    j["seed"] = c.seed;
    j["trust_k"] = c.trust_k;
    j["baseline"] = c.baseline;
    j["noise_sigma"] = c.noise_sigma;
    return j;
}

PipelineConfig read_config(const Json& j) {
    PipelineConfig c;
    c.knn = j.at("knn").is_null() ? std::nullopt : std::optional<std::size_t>(j.at("knn").get<std::size_t>());
    c.epsilon = j.at("epsilon").is_null() ? std::nullopt : std::optional<double>(j.at("epsilon").get<double>());
    c.lambda = j.at("lambda").get<std::size_t>();
    c.chord_length = j.at("chord_length").get<std::size_t>();
    c.initial_charts = j.at("initial_charts").get<std::size_t>();
    c.dim = j.at("dim").get<std::size_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.trust_k = j.at("trust_k").get<std::size_t>();
    c.baseline = j.at("baseline").get<bool>();
    c.noise_sigma = j.at("noise_sigma").get<double>();
    return c;
}

Json to_json(const AtlasArtifact& a) {
    Json j;
    j["schema"] = kArtifactSchema;
    j["version"] = {{"major", kArtifactMajor}, {"minor", kArtifactMinor}};
    j["provenance"] = {{"input_hash", a.provenance.input_hash}, {"tool_version", a.provenance.tool_version}};
    j["config"] = config_json(a.config);

    Json points = Json::array();
    for (std::size_t i = 0; i < a.cloud.size(); ++i) {
        const auto p = a.cloud[i];
        points.push_back(Json(std::vector<double>(p.begin(), p.end())));
    }
    j["cloud"] = {{"dimension", a.cloud.dimension()}, {"points", std::move(points)}};
    j["params"] = {{"names", a.param_names}, {"values", a.params}};

    Json edges = Json::array();
    for (const Edge& e : a.graph_edges) edges.push_back(Json::array({e.u, e.v, e.weight}));
    j["graph"] = {{"vertex_count", a.cloud.size()}, {"edges", std::move(edges)}};

    Json charts = Json::array();
    for (std::size_t i = 0; i < a.charts.size(); ++i) {
        Json c;
        c["id"] = a.charts[i].id;
        c["vertices"] = a.charts[i].domain.vertices;
        c["edges"] = a.charts[i].domain.edges;
        if (i < a.embeddings.size()) {
            const ChartEmbedding& e = a.embeddings[i];
            c["embedding"] = {{"dim", e.dim}, {"residual", e.residual}, {"coords", matrix_rows(e.coords)}};
        }
        if (i < a.triangulations.size()) c["simplices"] = a.triangulations[i].simplices;
        charts.push_back(std::move(c));
    }
    j["charts"] = std::move(charts);

    Json scores = Json::array();
    for (const ChartScore& s : a.report.per_chart) scores.push_back({{"chart_id", s.chart_id}, {"score", s.score}});
    j["trustworthiness"] = {{"k", a.report.k_neighbors},
                            {"worst", a.report.worst},
                            {"mean", a.report.mean},
                            {"per_chart", std::move(scores)}};
    j["combine_stats"] = {{"pairs_checked", a.stats.pairs_checked},
                          {"merges", a.stats.merges},
                          {"rejected_disconnected", a.stats.rejected_disconnected},
                          {"rejected_cycle", a.stats.rejected_cycle}};
    return j;
}

AtlasArtifact from_json(const Json& j) {
    if (!j.is_object() || !j.contains("schema") || j.at("schema") != kArtifactSchema) {
        throw ParseError("not an atlas artifact (schema id missing or wrong)");
    }
    const int major = j.at("version").at("major").get<int>();
    if (major != kArtifactMajor) {
        throw VersionError("artifact format version " + std::to_string(major) + "." +
                           std::to_string(j.at("version").at("minor").get<int>()) + " is not supported (expected " +
                           std::to_string(kArtifactMajor) + ".x)");
    }

    AtlasArtifact a;
    a.provenance.input_hash = j.at("provenance").at("input_hash").get<std::string>();
    a.provenance.tool_version = j.at("provenance").at("tool_version").get<std::string>();
    a.config = read_config(j.at("config"));

    const auto dimension = j.at("cloud").at("dimension").get<std::size_t>();
    std::vector<double> values;
    for (const Json& p : j.at("cloud").at("points")) {
        if (p.size() != dimension) throw ParseError("cloud point has the wrong dimension");
        for (const Json& v : p) values.push_back(v.get<double>());
    }
    a.cloud = PointCloud(dimension, std::move(values));
    a.param_names = j.at("params").at("names").get<std::vector<std::string>>();
    a.params = j.at("params").at("values").get<std::vector<std::vector<double>>>();

    for (const Json& e : j.at("graph").at("edges")) {
        if (e.size() != 3) throw ParseError("graph edge needs u, v, weight");
        a.graph_edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>(), e.at(2).get<double>()});
    }

    for (const Json& c : j.at("charts")) {
        ChartDomain chart;
        chart.id = c.at("id").get<std::uint32_t>();
        chart.domain.vertices = c.at("vertices").get<std::vector<VertexId>>();
        chart.domain.edges = c.at("edges").get<std::vector<EdgeId>>();
        a.charts.push_back(chart);
        if (c.contains("embedding")) {
            const Json& e = c.at("embedding");
            ChartEmbedding emb;
            emb.chart_id = chart.id;
            emb.dim = e.at("dim").get<std::size_t>();
            emb.vertices = chart.domain.vertices;
            emb.residual = e.at("residual").get<double>();
            emb.coords = read_matrix(e.at("coords"), emb.dim);
            if (static_cast<std::size_t>(emb.coords.rows()) != emb.vertices.size()) {
                throw ParseError("chart " + std::to_string(chart.id) + " has coordinates for the wrong vertex count");
            }
            if (c.contains("simplices")) {
                Triangulation tri;
                tri.dim = emb.dim;
                tri.simplices = c.at("simplices").get<std::vector<std::vector<std::uint32_t>>>();
                tri.vertex_coords = emb.coords;
                for (const auto& s : tri.simplices) {
                    if (s.size() != emb.dim + 1) throw ParseError("simplex has the wrong vertex count");
                    for (const auto v : s) {
                        if (v >= emb.vertices.size()) throw ParseError("simplex vertex out of range");
                    }
                }
                a.triangulations.push_back(std::move(tri));
            }
            a.embeddings.push_back(std::move(emb));
        }
    }

    const Json& t = j.at("trustworthiness");
    a.report.k_neighbors = t.at("k").get<std::size_t>();
    a.report.worst = t.at("worst").get<double>();
    a.report.mean = t.at("mean").get<double>();
    for (const Json& s : t.at("per_chart")) {
        a.report.per_chart.push_back({s.at("chart_id").get<std::uint32_t>(), s.at("score").get<double>()});
    }
    const Json& st = j.at("combine_stats");
    a.stats.pairs_checked = st.at("pairs_checked").get<std::size_t>();
    a.stats.merges = st.at("merges").get<std::size_t>();
    a.stats.rejected_disconnected = st.at("rejected_disconnected").get<std::size_t>();
    a.stats.rejected_cycle = st.at("rejected_cycle").get<std::size_t>();
    return a;
}

}  // namespace

void save_artifact(const AtlasArtifact& artifact, std::ostream& out) {
    out << to_json(artifact).dump() << '\n';
    if (!out) throw Error("failed to write artifact");
}

void save_artifact(const AtlasArtifact& artifact, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    save_artifact(artifact, out);
}

AtlasArtifact load_artifact(std::istream& in) {
    try {
        return from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed artifact: ") + e.what());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed artifact: ") + e.what());
    } catch (const ParameterError& e) {
        throw ParseError(std::string("malformed artifact: ") + e.what());
    }
}

AtlasArtifact load_artifact(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    return load_artifact(in);
}

}  // namespace atlaslearn

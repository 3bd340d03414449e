#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "atlaslearn/artifact.hpp"
#include "atlaslearn/csv.hpp"
#include "atlaslearn/error.hpp"
#include "atlaslearn/inverse.hpp"
#include "atlaslearn/metrics.hpp"
#include "atlaslearn/pipeline.hpp"
#include "atlaslearn/random.hpp"
#include "atlaslearn/synthetic.hpp"
#include "atlaslearn/version.hpp"

namespace fs = std::filesystem;
using namespace atlaslearn;

namespace {

constexpr int kUsage = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fs::path params_path(fs::path csv) { return csv.replace_extension(".params.csv"); }

std::vector<double> parse_point(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw UsageError("--point expects comma-separated reals, got '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError("--point is empty");
    return out;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    return out;
}

void print_report(const AtlasArtifact& a, const TrustworthinessReport& r) {
    std::printf("%-8s %-10s %-10s %s\n", "charts", "worst", "mean", "k");
    std::printf("%-8zu %-10.4f %-10.4f %zu\n", r.per_chart.size(), r.worst, r.mean, r.k_neighbors);
    std::printf("\n%-8s %-10s %s\n", "chart", "vertices", "trustworthiness");
    for (std::size_t i = 0; i < r.per_chart.size(); ++i) {
        std::printf("%-8u %-10zu %.4f\n", r.per_chart[i].chart_id, a.charts[i].domain.vertices.size(),
                    r.per_chart[i].score);
    }
}

int cmd_generate(const std::string& manifold, std::size_t n, std::uint64_t seed, double sigma, const fs::path& out) {
    if (sigma < 0.0) throw UsageError("--noise-sigma must be nonnegative");
    LabeledCloud lc;
    try {
        lc = sample_manifold(manifold, n, seed);
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
    add_gaussian_noise(lc.cloud, sigma, derive_seed(seed, 1));

    std::vector<std::string> header;
    for (std::size_t c = 0; c < lc.cloud.dimension(); ++c) header.push_back("x" + std::to_string(c));
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < lc.cloud.size(); ++i) rows.emplace_back(lc.cloud[i].begin(), lc.cloud[i].end());
    auto f = open_out(out);
    write_csv(f, header, rows);
    auto p = open_out(params_path(out));
    write_csv(p, lc.param_names, lc.params);
    std::printf("wrote %zu points to %s (parameters in %s)\n", lc.cloud.size(), out.string().c_str(),
                params_path(out).string().c_str());
    return 0;
}

int cmd_learn(const fs::path& input, const std::optional<fs::path>& params_file, PipelineConfig config,
              const fs::path& out) {
    const CsvTable table = read_csv(input);
    std::vector<std::string> names;
    std::vector<std::vector<double>> params;
    if (params_file) {
        const CsvTable p = read_csv(*params_file);
        names = p.header;
        for (std::size_t i = 0; i < p.cloud.size(); ++i) params.emplace_back(p.cloud[i].begin(), p.cloud[i].end());
    }
    const AtlasArtifact artifact = run(config, table.cloud, names, params);
    save_artifact(artifact, out);
    print_report(artifact, artifact.report);
    return 0;
}

int cmd_report(const fs::path& path, std::optional<std::size_t> k) {
    const AtlasArtifact a = load_artifact(path);
    if (k && *k != a.report.k_neighbors) {
        print_report(a, report(a.embeddings, a.cloud, *k));
    } else {
        print_report(a, a.report);
    }
    return 0;
}

int cmd_lift(const fs::path& path, std::uint32_t chart, const std::string& point) {
    const std::vector<double> p = parse_point(point);
    const AtlasArtifact a = load_artifact(path);
    const auto idx = a.chart_index(chart);
    if (!idx) throw Error("artifact has no chart " + std::to_string(chart));
    if (p.size() != a.embeddings[*idx].dim) {
        throw UsageError("chart " + std::to_string(chart) + " has dimension " +
                         std::to_string(a.embeddings[*idx].dim) + ", got " + std::to_string(p.size()) +
                         " coordinates");
    }
    const InverseMap map(a.embeddings[*idx], a.cloud);
    const Eigen::VectorXd x = map.lift(Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size())));
    for (Eigen::Index c = 0; c < x.size(); ++c) std::printf("%s%s", c ? "," : "", format_double(x(c)).c_str());
    std::printf("\n");
    return 0;
}

int cmd_export(const fs::path& path, const std::string& what, const fs::path& out) {
    const AtlasArtifact a = load_artifact(path);
    const bool embeddings = what == "embeddings";
    std::vector<std::string> header{"vertex", "chart"};
    const std::size_t width = embeddings ? (a.embeddings.empty() ? 0 : a.embeddings[0].dim) : a.cloud.dimension();
    for (std::size_t c = 0; c < width; ++c) header.push_back((embeddings ? "u" : "x") + std::to_string(c));
    for (const auto& name : a.param_names) header.push_back(name);

    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < a.charts.size(); ++i) {
        const auto& vertices = a.charts[i].domain.vertices;
        for (std::size_t r = 0; r < vertices.size(); ++r) {
            const auto v = vertices[r];
            std::vector<double> row{static_cast<double>(v), static_cast<double>(a.charts[i].id)};
            if (embeddings) {
                for (Eigen::Index c = 0; c < a.embeddings[i].coords.cols(); ++c) {
                    row.push_back(a.embeddings[i].coords(static_cast<Eigen::Index>(r), c));
                }
            } else {
                row.insert(row.end(), a.cloud[v].begin(), a.cloud[v].end());
            }
            if (!a.params.empty()) row.insert(row.end(), a.params[v].begin(), a.params[v].end());
            rows.push_back(std::move(row));
        }
    }
    auto f = open_out(out);
    write_csv(f, header, rows);
    std::printf("wrote %zu rows to %s\n", rows.size(), out.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learn hole-free coordinate atlases from point clouds"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Sample a synthetic manifold to CSV");
    std::string manifold;
    std::size_t gen_n = 1000;
    std::uint64_t gen_seed = 0;
    double sigma = 0.0;
    std::string gen_out;
    gen->add_option("manifold", manifold, "sphere | torus | klein | so3 | cylinder")->required();
    gen->add_option("--n", gen_n, "Number of points")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--noise-sigma", sigma, "Standard deviation of additive Gaussian noise");
    gen->add_option("--out", gen_out, "Output CSV (parameters go to <stem>.params.csv)")->required();

    auto* learn = app.add_subcommand("learn", "Learn an atlas from a CSV point cloud");
    std::string input, learn_out, params_file;
    std::size_t knn = 10;
    double epsilon = 0.0;
    PipelineConfig config;
    auto* knn_opt = learn->add_option("--knn", knn, "k for the k-nearest-neighbor graph (default 10)")
                        ->check(CLI::PositiveNumber);
    auto* eps_opt = learn->add_option("--epsilon", epsilon, "Radius for the epsilon-ball graph")
                        ->check(CLI::PositiveNumber);
    knn_opt->excludes(eps_opt);
    learn->add_option("--input", input, "Input CSV, one point per row")->required();
    learn->add_option("--lambda", config.lambda, "Longest tolerated atomic cycle (default 8)")
        ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 30));
    learn->add_option("--chord", config.chord_length, "Chord length n of the atomic-cycle test (default 2)")
        ->check(CLI::PositiveNumber);
    learn->add_option("--charts", config.initial_charts, "Initial chart count (default max(8, m/100))");
    learn->add_option("--dim", config.dim, "Target dimension (default 2)")->check(CLI::PositiveNumber);
    learn->add_option("--seed", config.seed, "Random seed");
    learn->add_option("--trust-k", config.trust_k, "Neighbors for trustworthiness (default 10)")
        ->check(CLI::PositiveNumber);
    learn->add_option("--noise-sigma", config.noise_sigma, "Gaussian noise added before learning");
    learn->add_flag("--baseline", config.baseline, "Single-chart ISOMAP instead of an atlas");
    learn->add_option("--params", params_file, "Ground-truth parameter CSV to carry into the artifact");
    learn->add_option("--out", learn_out, "Output artifact")->required();

    auto* rep = app.add_subcommand("report", "Print the trustworthiness table of an artifact");
    std::string rep_artifact;
    std::size_t rep_k = 0;
    rep->add_option("--artifact", rep_artifact)->required();
    auto* rep_k_opt = rep->add_option("--trust-k", rep_k, "Recompute with this k")->check(CLI::PositiveNumber);

    auto* lift = app.add_subcommand("lift", "Map chart coordinates back to ambient space");
    std::string lift_artifact, point;
    std::uint32_t chart = 0;
    lift->add_option("--artifact", lift_artifact)->required();
    lift->add_option("--chart", chart, "Chart id")->required();
    lift->add_option("--point", point, "Comma-separated chart coordinates")->required();

    auto* exp = app.add_subcommand("export", "Write plot-ready CSV");
    std::string exp_artifact, what, exp_out;
    exp->add_option("--artifact", exp_artifact)->required();
    exp->add_option("--what", what)->required()->check(CLI::IsMember({"embeddings", "charts"}));
    exp->add_option("--out", exp_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) return cmd_generate(manifold, gen_n, gen_seed, sigma, gen_out);
        if (*learn) {
            if (*eps_opt) {
                config.knn.reset();
                config.epsilon = epsilon;
            } else {
                config.knn = knn;
            }
            try {
                config.validate();
            } catch (const ParameterError& e) {
                throw UsageError(e.what());
            }
            return cmd_learn(input, params_file.empty() ? std::nullopt : std::optional<fs::path>(params_file),
                             config, learn_out);
        }
        if (*rep) return cmd_report(rep_artifact, *rep_k_opt ? std::optional<std::size_t>(rep_k) : std::nullopt);
        if (*lift) return cmd_lift(lift_artifact, chart, point);
        if (*exp) return cmd_export(exp_artifact, what, exp_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OutOfDomainError& e) {
        std::cerr << "out of domain: " << e.what() << '\n';
        return kDataError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsage;
}

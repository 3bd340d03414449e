#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "atlaslearn/artifact.hpp"
#include "atlaslearn/csv.hpp"
#include "atlaslearn/error.hpp"
#include "atlaslearn/pipeline.hpp"
#include "atlaslearn/synthetic.hpp"

using namespace atlaslearn;

namespace {

CsvTable parse(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in);
}

std::optional<std::size_t> parse_error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return std::nullopt;
}

const AtlasArtifact& small_artifact() {
    static const AtlasArtifact a = [] {
        PipelineConfig config;
        config.seed = 3;
        const auto s = sample_sphere(300, 3);
        return run(config, s.cloud, s.param_names, s.params);
    }();
    return a;
}

std::string saved(const AtlasArtifact& a) {
    std::ostringstream out;
    save_artifact(a, out);
    return out.str();
}

AtlasArtifact loaded(const std::string& text) {
    std::istringstream in(text);
    return load_artifact(in);
}

}  // namespace

TEST(Csv, PlainRows) {
    const auto t = parse("1,2\n3,4\n5,6\n");
    EXPECT_TRUE(t.header.empty());
    EXPECT_EQ(t.cloud.size(), 3u);
    EXPECT_EQ(t.cloud.dimension(), 2u);
    EXPECT_EQ(t.cloud[2][1], 6.0);
}

TEST(Csv, HeaderBlankLinesAndSpacing) {
    const auto t = parse("x, y, z\n\n 1.5 ,-2, 3e2\r\n0,0,+1\n\n");
    EXPECT_EQ(t.header, (std::vector<std::string>{"x", "y", "z"}));
    EXPECT_EQ(t.cloud.size(), 2u);
    EXPECT_EQ(t.cloud[0][0], 1.5);
    EXPECT_EQ(t.cloud[0][2], 300.0);
    EXPECT_EQ(t.cloud[1][2], 1.0);
}

TEST(Csv, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("1,2\n3,4\n5\n"), 3u);
    EXPECT_EQ(parse_error_line("a,b\n1,2\n3,x\n"), 3u);
    EXPECT_EQ(parse_error_line("1,2\n\n3,4,5\n"), 3u);
    EXPECT_EQ(parse_error_line("1,nan\n"), 1u);
    EXPECT_TRUE(parse_error_line("").has_value());
    EXPECT_TRUE(parse_error_line("x,y\n").has_value());
    EXPECT_THROW(read_csv(std::filesystem::path("/nonexistent/points.csv")), ParseError);
}

TEST(Csv, WriteReadRoundTripIsExact) {
    const auto s = sample_torus(100, 2);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < s.cloud.size(); ++i) rows.emplace_back(s.cloud[i].begin(), s.cloud[i].end());
    std::ostringstream out;
    write_csv(out, {"x", "y", "z"}, rows);
    const auto back = parse(out.str());
    EXPECT_EQ(back.header, (std::vector<std::string>{"x", "y", "z"}));
    EXPECT_EQ(back.cloud, s.cloud);
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-2.0), "-2");
}

TEST(Artifact, RoundTripIsFieldExact) {
    const auto& a = small_artifact();
    const auto text = saved(a);
    const auto b = loaded(text);
    EXPECT_EQ(b, a);
    EXPECT_EQ(saved(b), text);
    EXPECT_EQ(a.provenance.input_hash, input_hash(a.cloud));
    EXPECT_EQ(b.param_names, (std::vector<std::string>{"theta", "phi"}));
}

TEST(Artifact, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "atlaslearn_io_test.json";
    save_artifact(small_artifact(), path);
    EXPECT_EQ(load_artifact(path), small_artifact());
    std::filesystem::remove(path);
}

TEST(Artifact, ChartIndex) {
    const auto& a = small_artifact();
    ASSERT_FALSE(a.charts.empty());
    EXPECT_EQ(a.chart_index(a.charts.back().id), a.charts.size() - 1);
    EXPECT_FALSE(a.chart_index(100000).has_value());
}

TEST(Artifact, TruncatedInputIsParseError) {
    const auto text = saved(small_artifact());
    EXPECT_THROW(loaded(text.substr(0, text.size() / 2)), ParseError);
    EXPECT_THROW(loaded(""), ParseError);
    EXPECT_THROW(loaded("[1, 2, 3]"), ParseError);
}

TEST(Artifact, WrongSchemaOrVersion) {
    auto text = saved(small_artifact());
    const auto major = text.find("\"major\":1");
    ASSERT_NE(major, std::string::npos);
    auto v2 = text;
    v2.replace(major, 9, "\"major\":2");
    EXPECT_THROW(loaded(v2), VersionError);

    auto other = text;
    other.replace(other.find("atlaslearn.artifact"), 19, "something.else.here");
    EXPECT_THROW(loaded(other), ParseError);
}

TEST(Artifact, InputHashTracksValues) {
    auto cloud = sample_sphere(50, 1).cloud;
    const auto h = input_hash(cloud);
    EXPECT_EQ(h.size(), 16u);
    EXPECT_EQ(h, input_hash(cloud));
    cloud[3][1] = std::nextafter(cloud[3][1], 2.0);
    EXPECT_NE(h, input_hash(cloud));
}

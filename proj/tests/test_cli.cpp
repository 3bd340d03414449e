#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "atlaslearn/artifact.hpp"
#include "atlaslearn/csv.hpp"

namespace fs = std::filesystem;
using namespace atlaslearn;

namespace {

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        dir_ = fs::temp_directory_path() / "atlaslearn_cli_test";
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        ASSERT_EQ(call("generate sphere --n 400 --seed 2 --out " + path("s.csv")), 0);
        ASSERT_EQ(call("learn --input " + path("s.csv") + " --params " + path("s.params.csv") +
                       " --seed 2 --out " + path("s.json")),
                  0);
    }
    static void TearDownTestSuite() { fs::remove_all(dir_); }

    static std::string path(const std::string& name) { return (dir_ / name).string(); }

    // exit status of the tool; stdout goes to out.txt
    static int call(const std::string& args) {
        const std::string cmd = std::string(ATLASLEARN_CLI) + " " + args + " > " + path("out.txt") + " 2> " +
                                path("err.txt");
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    static std::string slurp(const std::string& name) {
        std::ifstream in(path(name));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    static inline fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateWritesPointsAndParams) {
    const auto pts = read_csv(fs::path(path("s.csv")));
    EXPECT_EQ(pts.cloud.size(), 400u);
    EXPECT_EQ(pts.header, (std::vector<std::string>{"x0", "x1", "x2"}));
    const auto params = read_csv(fs::path(path("s.params.csv")));
    EXPECT_EQ(params.header, (std::vector<std::string>{"theta", "phi"}));
}

TEST_F(Cli, LearnIsDeterministic) {
    ASSERT_EQ(call("learn --input " + path("s.csv") + " --params " + path("s.params.csv") + " --seed 2 --out " +
                   path("again.json")),
              0);
    EXPECT_EQ(slurp("s.json"), slurp("again.json"));
    const auto a = load_artifact(fs::path(path("s.json")));
    EXPECT_EQ(a.param_names, (std::vector<std::string>{"theta", "phi"}));
    EXPECT_EQ(a.params.size(), 400u);
}

TEST_F(Cli, ReportAndExport) {
    ASSERT_EQ(call("report --artifact " + path("s.json")), 0);
    EXPECT_NE(slurp("out.txt").find("worst"), std::string::npos);
    ASSERT_EQ(call("report --artifact " + path("s.json") + " --trust-k 5"), 0);

    ASSERT_EQ(call("export --artifact " + path("s.json") + " --what embeddings --out " + path("e.csv")), 0);
    const auto e = read_csv(fs::path(path("e.csv")));
    EXPECT_EQ(e.header, (std::vector<std::string>{"vertex", "chart", "u0", "u1", "theta", "phi"}));
    ASSERT_EQ(call("export --artifact " + path("s.json") + " --what charts --out " + path("c.csv")), 0);
    EXPECT_EQ(read_csv(fs::path(path("c.csv"))).cloud.dimension(), 7u);
}

TEST_F(Cli, LiftVertexAndOutside) {
    const auto a = load_artifact(fs::path(path("s.json")));
    const auto& emb = a.embeddings[0];
    const std::string point = format_double(emb.coords(0, 0)) + "," + format_double(emb.coords(0, 1));
    ASSERT_EQ(call("lift --artifact " + path("s.json") + " --chart " + std::to_string(emb.chart_id) +
                   " --point " + point),
              0);
    const auto v = emb.vertices[0];
    const std::string expected = format_double(a.cloud[v][0]) + "," + format_double(a.cloud[v][1]) + "," +
                                 format_double(a.cloud[v][2]) + "\n";
    EXPECT_EQ(slurp("out.txt"), expected);

    EXPECT_EQ(call("lift --artifact " + path("s.json") + " --chart " + std::to_string(emb.chart_id) +
                   " --point 1000,1000"),
              2);
    EXPECT_EQ(call("lift --artifact " + path("s.json") + " --chart 99999 --point 0,0"), 2);
    EXPECT_EQ(call("lift --artifact " + path("s.json") + " --chart " + std::to_string(emb.chart_id) +
                   " --point 0"),
              1);
    EXPECT_EQ(call("lift --artifact " + path("s.json") + " --chart 0 --point a,b"), 1);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(call(""), 1);
    EXPECT_EQ(call("frobnicate"), 1);
    EXPECT_EQ(call("generate mobius --out " + path("m.csv")), 1);
    EXPECT_EQ(call("learn --input " + path("s.csv") + " --knn 5 --epsilon 0.2 --out " + path("x.json")), 1);
    EXPECT_EQ(call("learn --input " + path("s.csv") + " --lambda 2 --out " + path("x.json")), 1);
    EXPECT_EQ(call("export --artifact " + path("s.json") + " --what pictures --out " + path("x.csv")), 1);
    EXPECT_EQ(call("--version"), 0);
}

TEST_F(Cli, DataErrors) {
    EXPECT_EQ(call("learn --input " + path("missing.csv") + " --out " + path("x.json")), 2);
    {
        std::ofstream bad(path("bad.csv"));
        bad << "1,2,3\n4,5\n";
    }
    EXPECT_EQ(call("learn --input " + path("bad.csv") + " --out " + path("x.json")), 2);
    EXPECT_NE(slurp("err.txt").find("line 2"), std::string::npos);
    {
        std::ofstream split(path("split.csv"));
        for (int i = 0; i < 20; ++i) split << 0.01 * i << ",0\n";
        for (int i = 0; i < 20; ++i) split << 50 + 0.01 * i << ",0\n";
    }
    EXPECT_EQ(call("learn --input " + path("split.csv") + " --knn 3 --out " + path("x.json")), 2);
    {
        std::ofstream junk(path("junk.json"));
        junk << "{\"schema\": ";
    }
    EXPECT_EQ(call("report --artifact " + path("junk.json")), 2);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "wstab/wstab.hpp"

using namespace wstab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "wstab");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name, const std::string& content) {
    auto dir = fs::temp_directory_path() / "wstab_cli_test";
    fs::create_directories(dir);
    auto path = (dir / name).string();
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("help and usage errors") {
    auto h = cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("dist") != std::string::npos);
    CHECK(cli({"lab", "--help"}).code == 0);
    auto none = cli({});
    CHECK(none.code == 1);
    CHECK(none.err.rfind("wstab: ", 0) == 0);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({"dist", "only-one"}).code == 1);
}

TEST_CASE("input errors exit 1 with a message") {
    auto missing = cli({"dgm", "/nonexistent/file"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot read") != std::string::npos);
    auto bad = tmp("bad.dgm", "0 2 1\n");
    auto r = cli({"dist", bad, bad});
    CHECK(r.code == 1);
    CHECK(r.err.find(":1:") != std::string::npos);
    auto good = tmp("good.dgm", "0 0 1\n");
    CHECK(cli({"dist", "--p", "0.5", good, good}).code == 1);
    CHECK(cli({"lab", "nope"}).code == 1);
}

TEST_CASE("dist matches the library") {
    PersistenceDiagram A({{0, 0, inf}, {0, 1, 3}, {1, 2, 4}}), B({{0, 0.5, inf}, {1, 2, 5}, {1, 0, 0.25}});
    std::ostringstream sa, sb;
    write_diagram(sa, A);
    write_diagram(sb, B);
    auto a = tmp("a.dgm", sa.str()), b = tmp("b.dgm", sb.str());
    for (std::string p : {"1", "2", "inf"}) {
        auto r = cli({"dist", "--p", p, a, b});
        CHECK(r.code == 0);
        CHECK(r.out == format_double(wasserstein_distance(A, B, parse_double(p))) + "\n");
    }
    auto w = cli({"dist", "--witness", "--p", "1", a, b});
    CHECK(w.code == 0);
    CHECK(w.out.find("0 0 inf -> 0.5 inf") != std::string::npos);
    CHECK(w.out.find("diagonal") != std::string::npos);
    CHECK(cli({"dist", "--p", "2", "--q", "inf", a, b}).out ==
          format_double(wasserstein(A, B, MetricParams{2, inf}).cost) + "\n");
}

TEST_CASE("build and dgm") {
    auto img = tmp("img.csv", "0,1\n2,3\n");
    auto built = cli({"build", "cubical-vertex", img});
    REQUIRE(built.code == 0);
    auto f = tmp("img.filt", built.out);
    auto d = cli({"dgm", f});
    CHECK(d.code == 0);
    std::ostringstream expect;
    write_diagram(expect, persistence_diagram(cubical_vertex(GrayImage({2, 2}, {0, 1, 2, 3}))));
    CHECK(d.out == expect.str());

    auto cloud = tmp("sq.csv", "0,0\n1,0\n1,1\n0,1\n");
    auto rf = tmp("sq.filt", cli({"build", "rips", "--max-dim", "1", cloud}).out);
    auto h1 = cli({"dgm", "--dim", "1", rf});
    CHECK(h1.out == "1 1 1.4142135623730951\n");

    auto coords = tmp("seg.csv", "0,0\n0,1\n");
    auto cx = tmp("seg.txt", "0 1\n");
    auto hf = cli({"build", "height", "--direction", "0,1", coords, cx});
    CHECK(hf.code == 0);
    CHECK(cli({"build", "height", "--direction", "1,1", coords, cx}).code == 1);
}

TEST_CASE("pdist, pht and summaries") {
    auto x = tmp("x.csv", "0\n10\n"), y = tmp("y.csv", "1\n10\n");
    CHECK(cli({"pdist", "wasserstein", "--p", "2", x, y}).out == "1\n");
    CHECK(cli({"pdist", "hausdorff", "--p", "inf", x, y}).out == "1\n");

    auto e1 = tmp("e1.csv", "0,0\n1,0\n"), e2 = tmp("e2.csv", "0,0.01\n1,0.01\n"), k = tmp("edge.txt", "0 1\n");
    auto p = cli({"pht", "--p", "1", "--dirs", "32", "--bound", e1, e2, k});
    REQUIRE(p.code == 0);
    VertexEmbedding f{SimplicialComplex::closure({{0, 1}}), {{0, 0}, {1, 0}}}, g{f.complex, {{0, 0.01}, {1, 0.01}}};
    CHECK(p.out == format_double(pht_distance(f, g, 1, sphere_sample(2, 32, SphereScheme::uniform_grid))) + "\n" +
                       format_double(pht_bound(f, g, 1)) + "\n");

    auto a = tmp("s1.dgm", "0 0 4\n0 1 3\n"), b = tmp("s2.dgm", "0 0 2\n");
    PersistenceDiagram A({{0, 0, 4}, {0, 1, 3}}), B({{0, 0, 2}});
    CHECK(cli({"summary", "landscape", "--q", "1", a, b}).out ==
          format_double(landscape_distance(landscape(A), landscape(B), 1)) + "\n");
    auto csv = cli({"summary", "landscape", a}).out;
    CHECK(csv.rfind("level,t,value\n", 0) == 0);
    CHECK(csv.find("2,2,1\n") != std::string::npos);
    CHECK(cli({"summary", "rank", "--q", "1", a, b}).out ==
          format_double(rank_distance(RankFunction(A, 0), RankFunction(B, 0), 1)) + "\n");
    CHECK(cli({"summary", "betti", "--grid", "0:2:3", b}).out == "t,betti\n0,1\n1,1\n2,0\n");
    CHECK(cli({"summary", "betti", "--grid", "0:2", b}).code == 1);
}

TEST_CASE("lab") {
    auto r = cli({"lab", "oracle", "--trials", "3", "--seed", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == run_suite("oracle", 3, 2).to_text() + run_suite("oracle", 3, 2).to_csv());
    auto out = (fs::temp_directory_path() / "wstab_cli_test" / "lab.csv").string();
    auto w = cli({"lab", "ses", "--trials", "2", "--out", out});
    CHECK(w.code == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "suite,seed,trial,label,lhs,rhs,slack,ok");
}

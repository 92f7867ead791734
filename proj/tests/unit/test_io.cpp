#include <doctest.h>

#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "wstab/wstab.hpp"

using namespace wstab;

namespace {

template <class T, class W, class R>
T round_trip(const T& x, W write, R read) {
    std::stringstream ss;
    write(ss, x);
    return read(ss, "<test>");
}

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("numbers") {
    CHECK(format_double(inf) == "inf");
    CHECK(format_double(-inf) == "-inf");
    CHECK(parse_double("inf") == inf);
    CHECK(parse_double("+inf") == inf);
    CHECK(parse_double("-inf") == -inf);
    CHECK(parse_double("0.1") == 0.1);
    CHECK_THROWS_AS(parse_double("nan"), InputError);
    CHECK_THROWS_AS(parse_double("1x"), InputError);
    CHECK_THROWS_AS(parse_double(""), InputError);
    gen::Rng rng(131);
    for (int i = 0; i < 1000; ++i) {
        double x = gen::uniform(rng, -1e6, 1e6) * std::pow(10.0, gen::uniform_int(rng, -300, 290) / 1e2);
        CHECK(parse_double(format_double(x)) == x);
    }
}

TEST_CASE("filtration round-trip is bit-exact") {
    gen::Rng rng(137);
    for (int trial = 0; trial < 20; ++trial) {
        auto K = gen::random_flag_complex(rng, gen::uniform_int(rng, 1, 7), 0.6);
        auto f = gen::random_filtration(rng, K, true);
        std::vector<double> v(f.values().begin(), f.values().end());
        for (auto& x : v) x += 1.0 / 3.0;
        f = f.with_values(v);
        auto g = round_trip(f, write_filtration, read_filtration);
        REQUIRE(g.size() == f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            int id = static_cast<int>(i);
            CHECK(g.value(id) == f.value(id));
            CHECK(g.cell(id).dim == f.cell(id).dim);
            CHECK(g.cell(id).boundary == f.cell(id).boundary);
        }
    }
}

TEST_CASE("filtration parse errors name the line") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        read_filtration(in, "f.txt");
    };
    std::istringstream ok("# two vertices\ncell 0 dim=0 value=0\ncell 1 dim=0 value=1 boundary=\n");
    CHECK(read_filtration(ok).size() == 2);
    CHECK(error_of([&] { parse("cell 0 dim=0 value=0\ncel 1 dim=0 value=0\n"); }).find("f.txt:2") != std::string::npos);
    CHECK(error_of([&] { parse("cell 0 dim=0\n"); }).find("value=") != std::string::npos);
    CHECK(error_of([&] { parse("cell 0 dim=0 value=inf\n"); }).find("finite") != std::string::npos);
    CHECK(error_of([&] { parse("cell 1 dim=0 value=0\n"); }).find("cell ids") != std::string::npos);
    CHECK(error_of([&] { parse("cell 0 dim=0 value=0 colour=red\n"); }).find("unknown key") != std::string::npos);
}

TEST_CASE("diagram round-trip and errors") {
    gen::Rng rng(139);
    for (int trial = 0; trial < 20; ++trial) {
        auto X = gen::random_diagram(rng, gen::uniform_int(rng, 0, 8), 2);
        std::vector<DiagramPoint> pts = X.points;
        pts.push_back({1, 0.1, inf});
        X = PersistenceDiagram(pts);
        CHECK(round_trip(X, write_diagram, read_diagram) == X);
    }
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_diagram(in, "d.txt");
    };
    CHECK(parse("0 0 inf\n\n# c\n1 0.5 2\n").size() == 2);
    CHECK(error_of([&] { parse("0 1 0.5\n"); }).find("d.txt:1") != std::string::npos);
    CHECK(error_of([&] { parse("0 0 1\n0 inf inf\n"); }).find("d.txt:2") != std::string::npos);
    CHECK(error_of([&] { parse("-1 0 1\n"); }).find("negative") != std::string::npos);
    CHECK(error_of([&] { parse("0 0\n"); }).find("d.txt:1") != std::string::npos);
}

TEST_CASE("intervals keep decorations") {
    IntervalModule m({{0, 1, Decoration::oo}, {0.5, inf, Decoration::cc}, {2, 3, Decoration::co}});
    auto r = round_trip(m, write_intervals, read_intervals);
    REQUIRE(r.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(r.intervals[i].birth == m.intervals[i].birth);
        CHECK(r.intervals[i].death == m.intervals[i].death);
        CHECK(r.intervals[i].deco == m.intervals[i].deco);
    }
    std::istringstream plain("0 1 2\n");
    CHECK(read_intervals(plain).intervals.front().deco == Decoration::oc);
}

TEST_CASE("simplicial complexes") {
    std::istringstream in("0 1 2\n2,3\n");
    auto K = read_simplicial_complex(in);
    CHECK(K.simplices == SimplicialComplex::closure({{0, 1, 2}, {2, 3}}).simplices);
    CHECK(round_trip(K, write_simplicial_complex, read_simplicial_complex).simplices == K.simplices);
    std::istringstream neg("0 -1\n"), rep("1 1\n");
    CHECK(error_of([&] { read_simplicial_complex(neg, "k"); }).find("k:1") != std::string::npos);
    CHECK_THROWS_AS(read_simplicial_complex(rep), InputError);
}

TEST_CASE("point clouds and images") {
    gen::Rng rng(149);
    auto X = gen::random_cloud(rng, 7, 3);
    CHECK(round_trip(X, write_point_cloud, read_point_cloud).points == X.points);
    std::istringstream bad("0,0\n1,2,3\n");
    CHECK(error_of([&] { read_point_cloud(bad, "x.csv"); }).find("x.csv:2") != std::string::npos);

    std::istringstream pgm("P2\n# comment\n3 2\n255\n0 1 2\n3 4 5\n");
    auto img = read_image(pgm);
    CHECK(img.shape == std::vector<std::size_t>{2, 3});
    CHECK(img.values == std::vector<double>{0, 1, 2, 3, 4, 5});
    std::istringstream csv("0,1\n2,3\n4,5\n");
    auto c = read_image(csv);
    CHECK(c.shape == std::vector<std::size_t>{3, 2});
    CHECK(c.values.back() == 5.0);
    std::istringstream short_pgm("P2\n3 2\n255\n0 1 2\n");
    CHECK_THROWS_AS(read_image(short_pgm), InputError);
    std::istringstream ragged("0,1\n2\n");
    CHECK_THROWS_AS(read_image(ragged), InputError);
    CHECK_THROWS_AS(read_file("/nonexistent/wstab/file"), InputError);
}

#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "wstab/wstab.hpp"

using namespace wstab;

namespace {

VertexEmbedding random_embedding(gen::Rng& rng, int d) {
    VertexEmbedding e;
    int n = gen::uniform_int(rng, 3, 6);
    std::vector<std::vector<int>> gens;
    for (int v = 0; v < n; ++v) gens.push_back({v});
    for (int t = 0; t < 3; ++t) {
        int a = gen::uniform_int(rng, 0, n - 1), b = gen::uniform_int(rng, 0, n - 1), c = gen::uniform_int(rng, 0, n - 1);
        if (a != b && b != c && a != c) gens.push_back({a, b, c});
        if (a != b) gens.push_back({a, b});
    }
    e.complex = SimplicialComplex::closure(gens);
    e.coords = gen::random_cloud(rng, n, d).points;
    return e;
}

VertexEmbedding moved(const VertexEmbedding& e, gen::Rng& rng, double scale) {
    auto g = e;
    for (auto& x : g.coords)
        for (auto& c : x) c += gen::uniform(rng, -scale, scale);
    return g;
}

}  // namespace

TEST_CASE("sphere_sample examples") {
    auto s = sphere_sample(2, 4, SphereScheme::uniform_grid);
    REQUIRE(s.directions.size() == 4);
    CHECK(s.directions[1][0] == doctest::Approx(0.0));
    CHECK(s.directions[1][1] == doctest::Approx(1.0));
    for (double w : s.weights) CHECK(w == doctest::Approx(M_PI / 2));
    auto f = sphere_sample(3, 100, SphereScheme::fibonacci);
    for (double w : f.weights) CHECK(w == doctest::Approx(4 * M_PI / 100));
    for (auto& u : f.directions) CHECK(std::hypot(u[0], u[1], u[2]) == doctest::Approx(1.0));
    auto r = sphere_sample(4, 10, SphereScheme::random, 3);
    CHECK(r.directions.size() == 10);
    CHECK(r.directions == sphere_sample(4, 10, SphereScheme::random, 3).directions);
    CHECK_THROWS_AS(sphere_sample(2, 10, SphereScheme::fibonacci), InputError);
    CHECK_THROWS_AS(sphere_sample(1, 10, SphereScheme::random), InputError);
}

TEST_CASE("sphere_sample converges for |cos|") {
    double prev = inf;
    for (int n : {8, 64, 512}) {
        double err = quadrature_error(sphere_sample(2, n, SphereScheme::uniform_grid), 1, {{std::cos(0.3), std::sin(0.3)}});
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("sphere constants") {
    for (double p : {1.0, 2.0, 3.0}) CHECK(sphere_constant(p, 3) == doctest::Approx(4 * M_PI / (p + 1)).epsilon(1e-10));
    CHECK(sphere_constant(1, 3) == doctest::Approx(2 * sphere_area(1) / 2).epsilon(1e-12));
    CHECK(sphere_constant(1, 2) == doctest::Approx(4.0).epsilon(1e-12));
    for (int d = 2; d <= 5; ++d)
        for (double p : {1.0, 1.5, 2.0, 3.0})
            CHECK(sphere_constant(p, d) == doctest::Approx(oracle::sphere_constant_closed(p, d)).epsilon(1e-10));
    CHECK(sphere_area(0) == doctest::Approx(2.0));
    CHECK(sphere_area(2) == doctest::Approx(4 * M_PI));
}

TEST_CASE("pht_distance examples") {
    gen::Rng rng(83);
    auto f = random_embedding(rng, 2);
    auto s = sphere_sample(2, 16, SphereScheme::uniform_grid);
    CHECK(pht_distance(f, f, 2, s) == 0.0);

    // translation shifts every point of each directional diagram by <w,u>
    auto g = f;
    for (auto& x : g.coords) {
        x[0] += 0.3;
        x[1] -= 0.1;
    }
    for (std::size_t k = 0; k < 8; ++k) {
        const auto& w = s.directions[k];
        double shift = 0.3 * w[0] - 0.1 * w[1];
        auto a = persistence_diagram(height_filtration(f, w)), b = persistence_diagram(height_filtration(g, w));
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(b.points[i].birth == doctest::Approx(a.points[i].birth + shift));
            if (!a.points[i].essential()) CHECK(b.points[i].death == doctest::Approx(a.points[i].death + shift));
        }
    }

    // single edge, both endpoints moved by delta
    VertexEmbedding e{SimplicialComplex::closure({{0, 1}}), {{0, 0}, {1, 0}}};
    auto e2 = e;
    const double delta = 0.01;
    e2.coords[0][1] += delta;
    e2.coords[1][1] += delta;
    CHECK(e.complex.max_vertex_star() == 2);
    auto dense = sphere_sample(2, 720, SphereScheme::uniform_grid);
    for (double p : {1.0, 2.0}) {
        double bound = std::pow(2 * sphere_constant(p, 2) * 2 * std::pow(delta, p), 1 / p);
        CHECK(pht_bound(e, e2, p) == doctest::Approx(bound));
        CHECK(pht_distance(e, e2, p, dense) <= bound);
    }
    VertexEmbedding other{SimplicialComplex::closure({{0, 1, 2}}), {{0, 0}, {1, 0}, {0, 1}}};
    CHECK_THROWS_AS(pht_distance(e, other, 1, s), InputError);
}

TEST_CASE("property: symmetry, triangle inequality, stability bound") {
    gen::Rng rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 2 + trial % 2;
        auto s = d == 2 ? sphere_sample(2, 60, SphereScheme::uniform_grid) : sphere_sample(3, 150, SphereScheme::fibonacci);
        auto f = random_embedding(rng, d);
        auto g = moved(f, rng, 0.05), h = moved(f, rng, 0.05);
        for (double p : {1.0, 2.0}) {
            double fg = pht_distance(f, g, p, s);
            CHECK(fg == doctest::Approx(pht_distance(g, f, p, s)).epsilon(1e-12));
            CHECK(fg <= pht_distance(f, h, p, s) + pht_distance(h, g, p, s) + 1e-12);
            CHECK(fg <= pht_bound(f, g, p) * 1.05);
        }
    }
}

TEST_CASE("property: rotation equivariance with a rotated sample") {
    gen::Rng rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_embedding(rng, 2);
        auto g = moved(f, rng, 0.1);
        double th = gen::uniform(rng, 0, 2 * M_PI);
        auto rot = [&](std::vector<double> x) {
            return std::vector<double>{std::cos(th) * x[0] - std::sin(th) * x[1], std::sin(th) * x[0] + std::cos(th) * x[1]};
        };
        auto fr = f, gr = g;
        for (auto& x : fr.coords) x = rot(x);
        for (auto& x : gr.coords) x = rot(x);
        auto s = sphere_sample(2, 36, SphereScheme::uniform_grid);
        auto sr = s;
        for (auto& w : sr.directions) w = rot(w);
        CHECK(pht_distance(fr, gr, 2, sr) == doctest::Approx(pht_distance(f, g, 2, s)).epsilon(1e-9));
    }
}

TEST_CASE("parallel_for covers every index once and rethrows") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                        if (i == 3) throw InputError("boom");
                    }),
                    InputError);
    CHECK(thread_count() >= 1);
}

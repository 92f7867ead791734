#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "wstab/wstab.hpp"

using namespace wstab;

namespace {

FilteredComplex hollow_triangle(double v = 0.0) {
    return FilteredComplex({{0, 0, {}}, {1, 0, {}}, {2, 0, {}}, {3, 1, {0, 1}}, {4, 1, {0, 2}}, {5, 1, {1, 2}}},
                           {v, v, v, v, v, v});
}

PersistenceDiagram dgm(std::vector<DiagramPoint> pts) { return PersistenceDiagram(std::move(pts)); }

}  // namespace

TEST_CASE("reduce: single vertex") {
    auto pr = reduce(FilteredComplex({{0, 0, {}}}, {0}));
    CHECK(pr.pairs.empty());
    CHECK(pr.essential == std::vector<int>{0});
    CHECK(diagram(pr, FilteredComplex({{0, 0, {}}}, {0})) == dgm({{0, 0, inf}}));
}

TEST_CASE("reduce: two vertices joined late") {
    FilteredComplex k({{0, 0, {}}, {1, 0, {}}, {2, 1, {0, 1}}}, {0, 1, 2});
    auto pr = reduce(k);
    CHECK(pr.pairs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(pr.essential == std::vector<int>{0});
    CHECK(diagram(pr, k) == dgm({{0, 0, inf}, {0, 1, 2}}));
}

TEST_CASE("reduce: hollow triangle at a single value") {
    auto k = hollow_triangle();
    auto pr = reduce(k);
    CHECK(pr.pairs.size() == 2);
    REQUIRE(pr.essential.size() == 2);
    CHECK(k.cell(pr.essential[0]).dim == 0);
    CHECK(k.cell(pr.essential[1]).dim == 1);
    for (auto [c, d] : pr.pairs) {
        CHECK(k.cell(c).dim == 0);
        CHECK(k.cell(d).dim == 1);
    }
    CHECK(diagram(pr, k) == dgm({{0, 0, inf}, {1, 0, inf}}));
    CHECK(diagram(pr, k, true).size() == 4);
}

TEST_CASE("diagram is canonical and validated") {
    auto d = dgm({{1, 2, 3}, {0, 5, inf}, {0, 1, 4}});
    CHECK(d.points.front() == DiagramPoint{0, 1, 4});
    CHECK_THROWS_AS(dgm({{0, 3, 1}}), InputError);
    CHECK_THROWS_AS(dgm({{-1, 0, 1}}), InputError);
    CHECK(d.in_dim(0).size() == 2);
    CHECK(d.finite_part().size() == 2);
    CHECK(dgm({{0, 1, 1}, {0, 1, 2}}).without_ephemeral().size() == 1);
}

TEST_CASE("presentation_barcode examples") {
    Presentation free{{0.0}, {}, {}};
    CHECK(presentation_barcode(free) == dgm({{0, 0, inf}}));

    // gens (1,2), relations (3,4); relation 0 hits both, relation 1 hits gen 1
    Presentation p{{1, 2}, {3, 4}, {{0, 1}, {1}}};
    CHECK(presentation_barcode(p) == dgm({{0, 1, 4}, {0, 2, 3}}));

    Presentation bad{{1, 5}, {3}, {{1}}};
    CHECK_THROWS_AS(presentation_barcode(bad), InputError);
    Presentation unknown{{1}, {3}, {{4}}};
    CHECK_THROWS_AS(presentation_barcode(unknown), InputError);
}

TEST_CASE("extension example: elder rule pairs the late relation with the old generator") {
    // A = [2,4), C = [1,3); B is generated at 1 and 2 with relations at 3
    // (c + a) and 4 (a).
    Presentation p{{1, 2}, {3, 4}, {{0, 1}, {1}}};
    auto B = presentation_barcode(p);
    CHECK(B == dgm({{0, 1, 4}, {0, 2, 3}}));
}

TEST_CASE("presentation read from a reduction matches the diagram") {
    gen::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto K = gen::random_flag_complex(rng, gen::uniform_int(rng, 3, 7), 0.5);
        auto f = gen::random_filtration(rng, K, true);
        auto red = reduce_full(f);
        for (int dim = 0; dim <= 1; ++dim) {
            auto pres = presentation_from_reduction(red, f, dim);
            auto bars = presentation_barcode(pres, dim).without_ephemeral();
            CHECK(bars == persistence_diagram(f).in_dim(dim));
        }
    }
}

TEST_CASE("reduction invariants: R = D V with V upper triangular") {
    gen::Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto K = gen::random_flag_complex(rng, gen::uniform_int(rng, 3, 7), 0.6);
        auto f = gen::random_filtration(rng, K, true);
        auto red = reduce_full(f);
        const std::size_t n = f.size();
        for (std::size_t j = 0; j < n; ++j) {
            // D V_j over Z/2
            std::vector<int> acc(n, 0);
            for (int c : red.v[j]) {
                CHECK(red.position[static_cast<std::size_t>(c)] <= red.position[j]);
                for (int face : f.cell(c).boundary) acc[static_cast<std::size_t>(face)] ^= 1;
            }
            std::vector<int> r(n, 0);
            for (int c : red.r[j]) r[static_cast<std::size_t>(c)] ^= 1;
            CHECK(acc == r);
        }
        // pivots distinct
        std::vector<int> low;
        for (auto& col : red.r)
            if (!col.empty()) {
                int best = col.front();
                for (int c : col)
                    if (red.position[static_cast<std::size_t>(c)] > red.position[static_cast<std::size_t>(best)]) best = c;
                low.push_back(best);
            }
        std::sort(low.begin(), low.end());
        CHECK(std::adjacent_find(low.begin(), low.end()) == low.end());
    }
}

TEST_CASE("property: diagram equals the rank-function oracle") {
    gen::Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        auto K = gen::random_flag_complex(rng, gen::uniform_int(rng, 2, 7), 0.55);
        auto f = gen::random_filtration(rng, K, trial % 2 == 0);
        CHECK(persistence_diagram(f) == oracle::diagram_by_ranks(f));
    }
}

TEST_CASE("property: Betti numbers from the diagram equal direct elimination") {
    gen::Rng rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        auto K = gen::random_flag_complex(rng, gen::uniform_int(rng, 3, 8), 0.5);
        auto f = gen::random_filtration(rng, K, true);
        auto d = persistence_diagram(f);
        for (double alpha : f.values())
            for (int k = 0; k <= 2; ++k) {
                CHECK(diagram_betti(d, k, alpha) == sublevel_betti(f, k, alpha));
                CHECK(sublevel_betti(f, k, alpha) == oracle::persistent_betti(f, k, alpha, alpha));
            }
    }
}

TEST_CASE("property: diagram does not depend on the tiebreak") {
    gen::Rng rng(55);
    auto rev = [](const Cell& a, const Cell& b) { return a.id > b.id; };
    for (int trial = 0; trial < 40; ++trial) {
        auto K = gen::random_flag_complex(rng, gen::uniform_int(rng, 3, 7), 0.6);
        auto f = gen::random_filtration(rng, K, false);
        CHECK(diagram(reduce(f), f) == diagram(reduce(f, rev), f));
    }
}

TEST_CASE("property: Euler characteristic from the full diagram") {
    gen::Rng rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        auto K = gen::random_flag_complex(rng, gen::uniform_int(rng, 2, 8), 0.5);
        auto f = gen::random_filtration(rng, K, true);
        int chi = 0;
        for (const auto& c : f.cells()) chi += c.dim % 2 ? -1 : 1;
        int from_dgm = 0;
        for (const auto& pt : persistence_diagram(f).points)
            if (pt.essential()) from_dgm += pt.dim % 2 ? -1 : 1;
        CHECK(chi == from_dgm);
    }
}

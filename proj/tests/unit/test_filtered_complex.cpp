#include <doctest.h>

#include "generators.hpp"
#include "wstab/wstab.hpp"

using namespace wstab;

namespace {

FilteredComplex edge(double v0, double v1, double e) {
    return FilteredComplex({{0, 0, {}}, {1, 0, {}}, {2, 1, {0, 1}}}, {v0, v1, e});
}

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
    for (auto& v : vs)
        if (v.kind == k) return true;
    return false;
}

}  // namespace

TEST_CASE("validate: single vertex is clean") {
    FilteredComplex k({{0, 0, {}}}, {0.0});
    CHECK(validate(k).empty());
}

TEST_CASE("validate: endpoint above its edge") {
    auto vs = validate(edge(2.0, 0.0, 1.0));
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == Violation{Violation::Kind::monotonicity, 2, 0});
}

TEST_CASE("validate: repeated boundary face") {
    // triangle whose first edge is listed twice
    FilteredComplex k({{0, 0, {}},
                       {1, 0, {}},
                       {2, 0, {}},
                       {3, 1, {0, 1}},
                       {4, 1, {0, 2}},
                       {5, 1, {1, 2}},
                       {6, 2, {3, 3, 4, 5}}},
                      {0, 0, 0, 0, 0, 0, 0});
    auto vs = validate(k);
    CHECK(has_kind(vs, Violation::Kind::duplicate_boundary));
}

TEST_CASE("validate: wrong face dimension, unknown face, non-cycle boundary") {
    FilteredComplex a({{0, 0, {}}, {1, 0, {}}, {2, 0, {}}, {3, 1, {0, 1}}, {4, 1, {0, 2}}, {5, 2, {3, 4}}},
                      {0, 0, 0, 0, 0, 0});
    CHECK(has_kind(validate(a), Violation::Kind::boundary_not_cycle));
    FilteredComplex b({{0, 0, {}}, {1, 0, {}}, {2, 2, {0, 1}}}, {0, 0, 0});
    CHECK(has_kind(validate(b), Violation::Kind::face_dimension));
    FilteredComplex c({{0, 0, {}}, {1, 1, {0, 7}}}, {0, 0});
    CHECK(has_kind(validate(c), Violation::Kind::unknown_face));
}

TEST_CASE("constructor rejects sparse ids and non-finite values") {
    CHECK_THROWS_AS(FilteredComplex({{0, 0, {}}, {2, 0, {}}}, {0, 0}), InputError);
    CHECK_THROWS_AS(FilteredComplex({{0, 0, {}}}, {std::nan("")}), InputError);
    CHECK_THROWS_AS(FilteredComplex({{0, 0, {}}}, {0, 1}), InputError);
}

TEST_CASE("total_order: face before coface at equal value") {
    auto o = total_order(FilteredComplex({{0, 1, {1, 2}}, {1, 0, {}}, {2, 0, {}}}, {0, 0, 0}));
    CHECK(o.order == std::vector<int>{1, 2, 0});
    auto e = total_order(edge(0, 0, 0));
    CHECK(e.order == std::vector<int>{0, 1, 2});
}

TEST_CASE("total_order: id tiebreak and strict values") {
    FilteredComplex k({{0, 0, {}}, {1, 0, {}}, {2, 0, {}}, {3, 0, {}}}, {5, 0, 1, 0});
    CHECK(total_order(k).order == std::vector<int>{1, 3, 2, 0});
    FilteredComplex s({{0, 0, {}}, {1, 0, {}}, {2, 0, {}}}, {3, 1, 2});
    CHECK(total_order(s).order == std::vector<int>{1, 2, 0});
}

TEST_CASE("total_order: custom tiebreak and rejection of non-monotone input") {
    FilteredComplex k({{0, 0, {}}, {1, 0, {}}}, {0, 0});
    auto rev = [](const Cell& a, const Cell& b) { return a.id > b.id; };
    CHECK(total_order(k, rev).order == std::vector<int>{1, 0});
    CHECK_THROWS_AS(total_order(edge(2, 0, 1)), InputError);
}

TEST_CASE("interpolate: endpoints exact, midpoint, structure check") {
    auto f = edge(0.1, 0.3, 0.7), g = edge(0.2, 0.9, 1.3);
    auto at0 = interpolate(f, g, 0.0), at1 = interpolate(f, g, 1.0);
    for (int i = 0; i < 3; ++i) {
        CHECK(at0.value(i) == f.value(i));
        CHECK(at1.value(i) == g.value(i));
    }
    CHECK(interpolate(edge(0, 0, 0), edge(0, 0, 2), 0.5).value(2) == 1.0);
    CHECK_THROWS_AS(interpolate(f, g, 1.5), InputError);
    FilteredComplex other({{0, 0, {}}}, {0});
    CHECK_THROWS_AS(interpolate(f, other, 0.5), InputError);
}

TEST_CASE("crossing_times examples") {
    FilteredComplex f({{0, 0, {}}, {1, 0, {}}}, {0, 1}), g({{0, 0, {}}, {1, 0, {}}}, {1, 0});
    auto t = crossing_times(f, g);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == doctest::Approx(0.5));
    CHECK(crossing_times(f, f).empty());
    FilteredComplex h({{0, 0, {}}, {1, 0, {}}}, {0, 3}), k({{0, 0, {}}, {1, 0, {}}}, {2, 0});
    auto u = crossing_times(h, k);
    REQUIRE(u.size() == 1);
    CHECK(u[0] == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("cellwise_distance") {
    auto f = edge(0, 0, 0), g = edge(0, 3, 4);
    CHECK(cellwise_distance(f, g, 1) == 7.0);
    CHECK(cellwise_distance(f, g, 2) == doctest::Approx(5.0));
    CHECK(cellwise_distance(f, g, inf) == 4.0);
}

TEST_CASE("property: interpolation stays monotone, order is stable between crossings") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto K = gen::random_flag_complex(rng, gen::uniform_int(rng, 3, 7), 0.6);
        auto f = gen::random_filtration(rng, K, true), g = gen::random_filtration(rng, K, true);
        REQUIRE(validate(f).empty());
        REQUIRE(validate(g).empty());
        auto ts = crossing_times(f, g);
        CHECK(std::is_sorted(ts.begin(), ts.end()));
        std::vector<double> cuts{0.0};
        cuts.insert(cuts.end(), ts.begin(), ts.end());
        cuts.push_back(1.0);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double a = cuts[i], b = cuts[i + 1];
            auto m1 = interpolate(f, g, a + (b - a) / 3), m2 = interpolate(f, g, a + 2 * (b - a) / 3);
            CHECK(validate(m1).empty());
            CHECK(total_order(m1).order == total_order(m2).order);
        }
    }
}

#include "wstab/stability_lab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "wstab/diagram_metrics.hpp"
#include "wstab/error.hpp"
#include "wstab/parallel.hpp"
#include "wstab/pht.hpp"
#include "wstab/pointcloud_metrics.hpp"
#include "wstab/summaries.hpp"

namespace wstab {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

TrialRecord inequality(std::string label, double lhs, double rhs, double tol) {
    TrialRecord r;
    r.label = std::move(label);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.ok = r.slack >= -tol;
    return r;
}

TrialRecord equality(std::string label, double value, double expected, double tol) {
    TrialRecord r;
    r.label = std::move(label);
    r.lhs = value;
    r.rhs = expected;
    double err = std::fabs(value - expected);
    if (value == expected) err = 0.0;  // covers matching infinities
    r.slack = 0.0 - err;
    r.ok = err <= tol;
    return r;
}

const double p_list_cellular[] = {1.0, 2.0, inf};

std::string p_label(double p) { return std::isinf(p) ? "inf" : fmt(p); }

}  // namespace

// ---- generators ---------------------------------------------------------

SimplicialComplex random_simplicial_complex(Rng& rng, std::size_t max_cells) {
    const int n = uniform_int(rng, 3, 8);
    std::vector<std::vector<int>> gens;
    for (int v = 0; v < n; ++v) gens.push_back({v});
    SimplicialComplex K = SimplicialComplex::closure(gens);
    int failures = 0;
    for (int attempt = 0; attempt < 40 && failures < 6; ++attempt) {
        int size = uniform_int(rng, 2, std::min(4, n));
        std::vector<int> verts(static_cast<std::size_t>(n));
        std::iota(verts.begin(), verts.end(), 0);
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(static_cast<std::size_t>(size));
        gens.push_back(verts);
        auto next = SimplicialComplex::closure(gens);
        if (next.simplices.size() > max_cells) {
            gens.pop_back();
            ++failures;
            continue;
        }
        K = std::move(next);
    }
    return K;
}

FilteredComplex random_monotone(const FilteredComplex& structure, Rng& rng) {
    std::vector<double> v(structure.size());
    // cells are visited in dimension order so faces are final first
    std::vector<int> order(structure.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return structure.cell(a).dim < structure.cell(b).dim; });
    for (int id : order) {
        const Cell& c = structure.cell(id);
        double base = c.dim == 0 ? uniform(rng, 0.0, 1.0) : -inf;
        for (int f : c.boundary) base = std::max(base, v[static_cast<std::size_t>(f)]);
        if (base == -inf) base = uniform(rng, 0.0, 1.0);
        double jitter = coin(rng) ? 0.0 : uniform(rng, 0.0, 0.5);
        v[static_cast<std::size_t>(id)] = base + jitter;
    }
    return structure.with_values(std::move(v));
}

GrayImage random_image(Rng& rng, std::size_t max_side) {
    const int hi = static_cast<int>(max_side);
    std::size_t h = static_cast<std::size_t>(uniform_int(rng, 1, hi));
    std::size_t w = static_cast<std::size_t>(uniform_int(rng, 1, hi));
    std::vector<double> vals(h * w);
    for (auto& x : vals) x = uniform(rng, 0.0, 1.0);
    return GrayImage({h, w}, std::move(vals));
}

PersistenceDiagram random_diagram(Rng& rng, int n, int max_dim, int essential) {
    std::vector<DiagramPoint> pts;
    for (int i = 0; i < n; ++i) {
        double b = uniform(rng, 0.0, 10.0);
        double l = uniform(rng, 0.0, 5.0);
        pts.push_back({uniform_int(rng, 0, max_dim), b, b + l});
    }
    for (int i = 0; i < essential; ++i) pts.push_back({0, uniform(rng, 0.0, 10.0), inf});
    return PersistenceDiagram(std::move(pts));
}

IntervalModule random_interval_module(Rng& rng, int n, bool dyadic) {
    IntervalModule M;
    for (int i = 0; i < n; ++i) {
        double b, d;
        if (dyadic) {
            b = uniform_int(rng, 0, 64) / 8.0;
            d = b + uniform_int(rng, 1, 48) / 8.0;
        } else {
            b = uniform(rng, 0.0, 10.0);
            d = b + uniform(rng, 0.01, 5.0);
        }
        M.intervals.push_back({b, d, Decoration::oc});
    }
    return M;
}

// ---- verifiers ----------------------------------------------------------

TrialRecord verify_cellular(const FilteredComplex& f, const FilteredComplex& g, double p) {
    double lhs = wasserstein_distance(persistence_diagram(f), persistence_diagram(g), p);
    double rhs = cellwise_distance(f, g, p);
    return inequality("cellular p=" + p_label(p), lhs, rhs, 1e-9);
}

PiecewiseCheck verify_piecewise(const FilteredComplex& f, const FilteredComplex& g, double p) {
    PiecewiseCheck out;
    out.total = cellwise_distance(f, g, p);
    if (out.total == 0.0) return out;
    out.breakpoints.push_back(0.0);
    for (double t : crossing_times(f, g)) out.breakpoints.push_back(t);
    out.breakpoints.push_back(1.0);
    std::vector<PersistenceDiagram> dgms;
    std::vector<FilteredComplex> fs;
    for (double t : out.breakpoints) {
        fs.push_back(interpolate(f, g, t));
        dgms.push_back(persistence_diagram(fs.back()));
    }
    for (std::size_t i = 0; i + 1 < out.breakpoints.size(); ++i) {
        double lhs = wasserstein_distance(dgms[i], dgms[i + 1], p);
        double rhs = cellwise_distance(fs[i], fs[i + 1], p);
        auto rec = inequality("segment " + std::to_string(i), lhs, rhs, 1e-9);
        out.segments.push_back(rec);
        out.telescoped += rhs;
    }
    return out;
}

// ---- named constructions ------------------------------------------------

FilteredComplex teepee_function(int N, double r, double spacing) {
    if (N < 0) throw InputError("teepee: N must be non-negative");
    if (!(r > 0.0)) throw InputError("teepee: r must be positive");
    if (!(spacing >= 2.0 * r)) throw InputError("teepee: spacing must be at least 2r");
    // vertex values along the path: valley, peak, valley, [gap valley], peak, ...
    std::vector<double> values{0.0};
    for (int i = 0; i < N; ++i) {
        values.push_back(r);
        values.push_back(0.0);
        if (spacing > 2.0 * r && i + 1 < N) values.push_back(0.0);
    }
    std::vector<Cell> cells;
    std::vector<double> cv;
    const int nv = static_cast<int>(values.size());
    for (int i = 0; i < nv; ++i) {
        cells.push_back({i, 0, {}});
        cv.push_back(values[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i + 1 < nv; ++i) {
        cells.push_back({nv + i, 1, {i, i + 1}});
        cv.push_back(std::max(values[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(i + 1)]));
    }
    return FilteredComplex(std::move(cells), std::move(cv));
}

namespace {

struct LadderGeometry {
    double a, h, b, alpha;
};

LadderGeometry ladder(int C, double r, double eps, double eps_prime) {
    if (C < 0) throw InputError("sphere_rectangles: C must be non-negative");
    if (!(r > 0.0) || !(eps > 0.0) || !(eps < r) || !(eps_prime > 0.0))
        throw InputError("sphere_rectangles: need r > eps > 0 and eps' > 0");
    LadderGeometry g;
    g.a = r - eps;
    g.h = std::sqrt(r * r - g.a * g.a / 4.0);
    double diag = r + eps_prime;
    g.b = std::sqrt(diag * diag - g.a * g.a);
    if (!(g.b < 2.0 * g.h)) throw InputError("sphere_rectangles: eps' too large for the sphere");
    g.alpha = 2.0 * std::asin(g.b / (2.0 * g.h));
    // each side of the ladder must be a clique before the rungs appear
    double span_chord = 2.0 * g.h * std::sin(C * g.alpha / 2.0);
    if (C > 0 && !(C * g.alpha < std::numbers::pi && span_chord < g.a))
        throw InputError("sphere_rectangles: rectangles span too wide an arc (shrink eps')");
    return g;
}

}  // namespace

PointCloud sphere_rectangles(int C, double r, double eps, double eps_prime) {
    auto g = ladder(C, r, eps, eps_prime);
    std::vector<std::vector<double>> pts{{0.0, 0.0, 0.0}};
    for (int k = 0; k <= C; ++k) {
        double th = k * g.alpha;
        double y = g.h * std::cos(th), z = g.h * std::sin(th);
        pts.push_back({-g.a / 2.0, y, z});
        pts.push_back({g.a / 2.0, y, z});
    }
    return PointCloud(std::move(pts));
}

double sphere_rectangles_eps_prime(int C, double r, double eps, double span) {
    if (C <= 0) throw InputError("sphere_rectangles_eps_prime: C must be positive");
    double a = r - eps;
    double h = std::sqrt(r * r - a * a / 4.0);
    double b = 2.0 * h * std::sin(span / C / 2.0);
    return std::sqrt(a * a + b * b) - r;
}

PointCloud spiral_cloud(int n) {
    if (n < 0) throw InputError("spiral_cloud: n must be non-negative");
    std::vector<std::vector<double>> pts{{0.0, 0.0}};
    for (int k = 1; k <= n; ++k) {
        double theta = 0.9 * k;
        double rad = 1.0 + 0.15 * theta;
        pts.push_back({rad * std::cos(theta), rad * std::sin(theta)});
    }
    return PointCloud(std::move(pts));
}

std::pair<PersistenceDiagram, PersistenceDiagram> landscape_pair(double a, double r) {
    if (!(r >= 0.0) || !(r <= a)) throw InputError("landscape_pair: need 0 <= r <= a");
    return {PersistenceDiagram({{0, 0.0, a}}), PersistenceDiagram({{0, 0.0, a - r}})};
}

int changed_deaths(const PersistenceDiagram& before, const PersistenceDiagram& after, double min_persistence) {
    auto b = before.in_dim(1).points, a = after.in_dim(1).points;
    int count = 0;
    for (const auto& pt : b) {
        if (pt.length() < min_persistence) continue;
        auto it = std::find(a.begin(), a.end(), pt);
        if (it == a.end())
            ++count;
        else
            a.erase(it);
    }
    return count;
}

// ---- report -------------------------------------------------------------

void StabilityReport::finalize() {
    min_slack = inf;
    pass = true;
    for (const auto& r : records) {
        min_slack = std::min(min_slack, r.slack);
        pass = pass && r.ok;
    }
    if (records.empty()) {
        min_slack = 0.0;
        notes.push_back("warning: zero trials, pass is vacuous");
    }
}

std::string StabilityReport::to_text() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " suite=" << suite << " seed=" << seed << " trials=" << trials
       << " checks=" << records.size() << " min_slack=" << fmt(min_slack) << " tolerance=" << fmt(tolerance) << "\n";
    for (const auto& n : notes) os << "  " << n << "\n";
    return os.str();
}

std::string StabilityReport::to_csv() const {
    std::ostringstream os;
    os << "suite,seed,trial,label,lhs,rhs,slack,ok\n";
    for (const auto& r : records)
        os << suite << "," << seed << "," << r.trial << ",\"" << r.label << "\"," << fmt(r.lhs) << "," << fmt(r.rhs)
           << "," << fmt(r.slack) << "," << (r.ok ? 1 : 0) << "\n";
    return os.str();
}

// ---- suites -------------------------------------------------------------

namespace {

using TrialFn = std::function<std::vector<TrialRecord>(std::size_t trial, Rng& rng)>;

struct Suite {
    double tolerance;
    TrialFn run;
    std::function<void(StabilityReport&)> post;  // aggregate checks
};

std::vector<TrialRecord> suite_cellular(std::size_t, Rng& rng) {
    auto K = random_simplicial_complex(rng, 60);
    auto structure = lower_star(K, std::vector<double>(static_cast<std::size_t>(K.vertex_count()), 0.0));
    auto f = random_monotone(structure, rng);
    auto g = random_monotone(structure, rng);
    std::vector<TrialRecord> out;
    for (double p : p_list_cellular) out.push_back(verify_cellular(f, g, p));
    return out;
}

std::vector<TrialRecord> suite_piecewise(std::size_t, Rng& rng) {
    auto K = random_simplicial_complex(rng, 25);
    auto structure = lower_star(K, std::vector<double>(static_cast<std::size_t>(K.vertex_count()), 0.0));
    auto f = random_monotone(structure, rng);
    auto g = random_monotone(structure, rng);
    std::vector<TrialRecord> out;
    for (double p : {1.0, 2.0}) {
        auto chk = verify_piecewise(f, g, p);
        for (auto& s : chk.segments) {
            s.label = "p=" + p_label(p) + " " + s.label;
            out.push_back(s);
        }
        out.push_back(equality("telescope p=" + p_label(p), chk.telescoped, chk.total, 1e-12 * std::max(1.0, chk.total)));
        out.push_back(verify_cellular(f, g, p));
    }
    return out;
}

std::vector<TrialRecord> suite_image(std::size_t, Rng& rng) {
    auto a = random_image(rng, 16);
    GrayImage b = a;
    double scale = std::pow(10.0, uniform(rng, -3.0, 0.0));
    for (auto& v : b.values)
        if (coin(rng)) v += uniform(rng, -scale, scale);
    std::vector<TrialRecord> out;
    for (double p : p_list_cellular) {
        double pix = 0.0;
        for (std::size_t i = 0; i < a.values.size(); ++i) {
            double d = std::fabs(a.values[i] - b.values[i]);
            pix = std::isinf(p) ? std::max(pix, d) : pix + std::pow(d, p);
        }
        if (!std::isinf(p)) pix = std::pow(pix, 1.0 / p);
        double m1 = wasserstein_distance(persistence_diagram(cubical_top(a)), persistence_diagram(cubical_top(b)), p);
        double m2 =
            wasserstein_distance(persistence_diagram(cubical_vertex(a)), persistence_diagram(cubical_vertex(b)), p);
        out.push_back(inequality("method1 p=" + p_label(p), m1, 9.0 * pix, 1e-9));
        out.push_back(inequality("method2 p=" + p_label(p), m2, 9.0 * pix, 1e-9));
    }
    return out;
}

VertexEmbedding random_embedding(Rng& rng, int d) {
    VertexEmbedding e;
    const int n = uniform_int(rng, 3, 7);
    std::vector<std::vector<int>> gens;
    for (int v = 0; v < n; ++v) gens.push_back({v});
    const int tops = uniform_int(rng, 1, 5);
    for (int t = 0; t < tops; ++t) {
        std::vector<int> verts(static_cast<std::size_t>(n));
        std::iota(verts.begin(), verts.end(), 0);
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(static_cast<std::size_t>(uniform_int(rng, 2, std::min(n, d + 1))));
        gens.push_back(verts);
    }
    e.complex = SimplicialComplex::closure(gens);
    for (int v = 0; v < n; ++v) {
        std::vector<double> x(static_cast<std::size_t>(d));
        for (auto& c : x) c = uniform(rng, 0.0, 1.0);
        e.coords.push_back(std::move(x));
    }
    return e;
}

std::vector<TrialRecord> suite_pht(std::size_t trial, Rng& rng) {
    const int d = trial % 2 == 0 ? 2 : 3;
    auto f = random_embedding(rng, d);
    auto g = f;
    double sigma = std::pow(10.0, uniform(rng, -3.0, -1.0));
    std::normal_distribution<double> gauss(0.0, sigma);
    for (auto& x : g.coords)
        for (auto& c : x) c += gauss(rng);
    auto sample = d == 2 ? sphere_sample(2, 90, SphereScheme::uniform_grid)
                         : sphere_sample(3, 300, SphereScheme::fibonacci);
    std::vector<std::vector<double>> probes;
    for (std::size_t i = 0; i < f.coords.size(); ++i) {
        std::vector<double> u(static_cast<std::size_t>(d));
        double nrm = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k) {
            u[k] = g.coords[i][k] - f.coords[i][k];
            nrm += u[k] * u[k];
        }
        if (nrm == 0.0) continue;
        for (auto& c : u) c /= std::sqrt(nrm);
        probes.push_back(std::move(u));
    }
    std::vector<TrialRecord> out;
    for (double p : {1.0, 2.0}) {
        double rel = probes.empty() ? 0.0 : quadrature_error(sample, p, probes);
        double lhs = pht_distance(f, g, p, sample);
        double rhs = pht_bound(f, g, p);
        out.push_back(inequality("pht d=" + std::to_string(d) + " p=" + p_label(p), lhs, rhs * (1.0 + 3.0 * rel), 1e-9));
    }
    return out;
}

PointCloud random_planar_cloud(Rng& rng, int n) {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) pts.push_back({uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0)});
    return PointCloud(std::move(pts));
}

std::vector<TrialRecord> suite_rips21(std::size_t, Rng& rng) {
    const int n = uniform_int(rng, 4, 25);
    auto X = generic_perturb(random_planar_cloud(rng, n), 1e-6, rng());
    auto Y = generic_perturb(X, std::pow(10.0, uniform(rng, -3.0, -1.0)), rng());
    if (coin(rng) && coin(rng)) {
        auto extra = Y.points[static_cast<std::size_t>(uniform_int(rng, 0, n - 1))];
        extra[0] += 1e-3;
        Y.points.push_back(extra);
        Y = generic_perturb(Y, 1e-6, rng());
    }
    auto dx = persistence_diagram(rips(X, 1)).in_dim(1);
    auto dy = persistence_diagram(rips(Y, 1)).in_dim(1);
    std::vector<TrialRecord> out;
    for (double p : {1.0, 2.0}) {
        double lhs = wasserstein_distance(dx, dy, p);
        double rhs = std::pow(18.0, 1.0 / p) * p_hausdorff(X, Y, p);
        out.push_back(inequality("rips dgm1 p=" + p_label(p), lhs, rhs, 1e-9));
    }
    return out;
}

std::vector<TrialRecord> suite_rips0(std::size_t, Rng& rng) {
    const int n = uniform_int(rng, 2, 25);
    auto X = generic_perturb(random_planar_cloud(rng, n), 1e-6, rng());
    int worst = 0;
    for (int v = 0; v < n; ++v) worst = std::max(worst, count_adjacent_critical(X, v, 0));
    return {inequality("max dim-0 critical count", worst, 6.0, 0.0)};
}

std::vector<TrialRecord> suite_porism(std::size_t, Rng& rng) {
    const int M = uniform_int(rng, 2, 5);
    auto X = generic_perturb(random_planar_cloud(rng, M), 1e-6, rng());
    auto Y = generic_perturb(X, std::pow(10.0, uniform(rng, -3.0, -1.0)), rng());
    auto binom = [](int n, int k) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return k < 0 || k > n ? 0.0 : r;
    };
    std::vector<TrialRecord> out;
    for (int k : {0, 1}) {
        auto dx = persistence_diagram(rips(X, k)).in_dim(k);
        auto dy = persistence_diagram(rips(Y, k)).in_dim(k);
        for (double p : {1.0, 2.0}) {
            double c = binom(M * M - 1, k) + binom(M * M - 1, k + 1);
            out.push_back(inequality("porism k=" + std::to_string(k) + " p=" + p_label(p),
                                     wasserstein_distance(dx, dy, p), std::pow(c, 1.0 / p) * p_hausdorff(X, Y, p),
                                     1e-9));
        }
    }
    return out;
}

// One C per trial; aggregated linearity check in the post step.
struct C31Result {
    int C;
    int changed;
    double w1;
};

C31Result c31_run(int C, Rng& rng) {
    const double r = 1.0, eps = 1e-3, delta = 1e-4;
    const double span = std::numbers::pi / 6.0;
    double eps_prime = sphere_rectangles_eps_prime(C, r, eps, span);
    auto X = generic_perturb(sphere_rectangles(C, r, eps, eps_prime), 2e-7, rng());
    double th = span / 2.0;
    auto Y = X;
    Y.points[0][1] += delta * std::cos(th);
    Y.points[0][2] += delta * std::sin(th);
    auto before = persistence_diagram(rips(X, 1));
    auto after = persistence_diagram(rips(Y, 1));
    // jitter creates H1 classes of persistence ~1e-8 near the sphere radius
    return {C, changed_deaths(before, after, 1e-5), wasserstein_distance(before.in_dim(1), after.in_dim(1), 1.0)};
}


StabilityReport run_c31(std::size_t trials, std::uint64_t seed) {
    StabilityReport rep;
    rep.tolerance = 0.0;
    std::vector<C31Result> res(trials);
    parallel_for(trials, [&](std::size_t t) {
        auto rng = trial_rng(seed, t);
        res[t] = c31_run(3 + static_cast<int>(t % 6), rng);
    });
    for (std::size_t t = 0; t < trials; ++t) {
        auto rec = equality("C=" + std::to_string(res[t].C) + " changed H1 deaths", res[t].changed, res[t].C, 0.0);
        rec.trial = t;
        rep.records.push_back(rec);
    }
    // least squares fit of W1 against C through all trials
    std::map<int, std::vector<double>> byC;
    for (auto& r : res) byC[r.C].push_back(r.w1);
    if (byC.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double n = 0;
        for (auto& r : res) {
            sx += r.C;
            sy += r.w1;
            sxx += static_cast<double>(r.C) * r.C;
            sxy += r.C * r.w1;
            n += 1;
        }
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        double icept = (sy - slope * sx) / n;
        double worst = 0.0;
        for (auto& r : res) {
            double fit = slope * r.C + icept;
            worst = std::max(worst, std::fabs(r.w1 - fit) / fit);
        }
        auto rec = inequality("W1 within 20% of linear fit in C", worst, 0.2, 0.0);
        rec.trial = trials;
        rep.records.push_back(rec);
        rep.notes.push_back("W1 ~ " + fmt(slope) + " * C + " + fmt(icept) + " (delta = 1e-4)");
    }
    return rep;
}

std::vector<TrialRecord> suite_teepee(std::size_t, Rng& rng) {
    const int N = uniform_int(rng, 0, 64);
    const double r = std::ldexp(1.0, -uniform_int(rng, 0, 6));
    const double spacing = coin(rng) ? 2.0 * r : 3.0 * r;
    auto dgm = persistence_diagram(teepee_function(N, r, spacing)).in_dim(0).finite_part();
    std::vector<TrialRecord> out;
    for (int k : {1, 2, 3}) {
        double expected = N * std::pow(r, k);
        out.push_back(equality("N=" + std::to_string(N) + " r=" + fmt(r) + " k=" + std::to_string(k),
                               total_persistence(dgm, k), expected, 0.0));
    }
    return out;
}

StabilityReport run_landscape() {
    StabilityReport rep;
    rep.tolerance = 0.0;
    for (double q : {1.0, 2.0}) {
        for (double alpha : {1.0, 0.5}) {
            for (double p : {1.0, 2.0, inf}) {
                double prev = -inf;
                for (int k = 1; k <= 8; ++k) {
                    double a = std::ldexp(1.0, k), r = std::ldexp(1.0, -k);
                    auto [X, Y] = landscape_pair(a, r);
                    double w = wasserstein_distance(X, Y, p);
                    auto lbl = "q=" + p_label(q) + " alpha=" + fmt(alpha) + " p=" + p_label(p) + " k=" + std::to_string(k);
                    rep.records.push_back(equality("W_p = r " + lbl, w, r, 0.0));
                    double dist = landscape_distance(landscape(X), landscape(Y), q);
                    double ratio = dist / std::pow(w, alpha);
                    if (k > 1) {
                        auto rec = inequality("ratio increases " + lbl, prev, ratio, 0.0);
                        rec.ok = ratio > prev;
                        rep.records.push_back(rec);
                    }
                    // lower bound from the trapezoid
                    rep.records.push_back(inequality("trapezoid bound " + lbl, r * std::pow(a / 2.0 - r, 1.0 / q), dist, 0.0));
                    prev = ratio;
                }
            }
        }
    }
    return rep;
}

std::vector<TrialRecord> suite_rank(std::size_t trial, Rng& rng) {
    std::vector<TrialRecord> out;
    const int n = uniform_int(rng, 1, 6);
    const int ess = uniform_int(rng, 0, 1);
    auto X = random_diagram(rng, n, 0, ess);
    PersistenceDiagram Y;
    if (coin(rng)) {
        Y = random_diagram(rng, uniform_int(rng, 0, 6), 0, 0);
        for (const auto& pt : X.points)
            if (pt.essential()) Y.points.push_back({0, uniform(rng, 0.0, 10.0), inf});
        Y.canonicalize();
    } else {
        Y = X;
        double s = std::pow(10.0, uniform(rng, -3.0, 0.0));
        for (auto& pt : Y.points) {
            double nb = pt.birth + uniform(rng, -s, s);
            double nd = pt.essential() ? inf : pt.death + uniform(rng, -s, s);
            pt.birth = std::min(nb, nd);
            pt.death = std::max(nb, nd);
        }
        Y.canonicalize();
    }
    double rd = rank_distance(RankFunction(X, 0), RankFunction(Y, 0), 1.0);
    double w1 = wasserstein(X, Y, MetricParams{1.0, 1.0}).cost;
    out.push_back(inequality("rank q=1 <= W1", rd, w1, 1e-9));

    // q = 2 counter-pair: move one birth by a small delta
    PersistenceDiagram A = random_diagram(rng, uniform_int(rng, 1, 4), 0, 0);
    PersistenceDiagram B = A;
    double delta = std::pow(10.0, uniform(rng, -6.0, -2.0));
    auto& pt = B.points[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(B.size()) - 1))];
    pt.birth = std::min(pt.birth + delta, pt.death);
    B.canonicalize();
    double r2 = rank_distance(RankFunction(A, 0), RankFunction(B, 0), 2.0);
    double w2 = wasserstein_distance(A, B, 2.0);
    TrialRecord rec;
    rec.trial = trial;
    rec.label = "q=2 ratio (informational)";
    rec.lhs = w2;
    rec.rhs = r2;
    rec.slack = 0.0;
    rec.ok = true;
    out.push_back(rec);
    return out;
}

Matching random_module_matching(Rng& rng, const IntervalModule& A, const IntervalModule& B) {
    std::vector<int> af, bf, ae, be;
    for (std::size_t i = 0; i < A.size(); ++i) (A.intervals[i].infinite() ? ae : af).push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < B.size(); ++j) (B.intervals[j].infinite() ? be : bf).push_back(static_cast<int>(j));
    std::shuffle(af.begin(), af.end(), rng);
    std::shuffle(bf.begin(), bf.end(), rng);
    std::shuffle(be.begin(), be.end(), rng);
    Matching m;
    for (std::size_t k = 0; k < ae.size(); ++k) m.edges.push_back({0, ae[k], be[k]});
    std::size_t pairs = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(std::min(af.size(), bf.size()))));
    for (std::size_t k = 0; k < af.size(); ++k) m.edges.push_back({0, af[k], k < pairs ? bf[k] : -1});
    for (std::size_t k = pairs; k < bf.size(); ++k) m.edges.push_back({0, -1, bf[k]});
    return m;
}

std::vector<TrialRecord> suite_algebraic(std::size_t trial, Rng& rng) {
    const double p = trial % 2 == 0 ? 1.0 : 2.0;
    auto A = random_interval_module(rng, uniform_int(rng, 0, 5));
    auto B = random_interval_module(rng, uniform_int(rng, 0, 5));
    int ess = uniform_int(rng, 0, 1);
    for (int i = 0; i < ess; ++i) {
        A.intervals.push_back({uniform(rng, 0.0, 10.0), inf, Decoration::oc});
        B.intervals.push_back({uniform(rng, 0.0, 10.0), inf, Decoration::oc});
    }
    // matchings refer to module indices; build diagrams in the same order
    PersistenceDiagram DA, DB;
    for (const auto& x : A.intervals) DA.points.push_back({0, x.birth, x.death});
    for (const auto& x : B.intervals) DB.points.push_back({0, x.birth, x.death});
    auto opt = wasserstein(DA, DB, MetricParams{p, std::nullopt});
    std::vector<TrialRecord> out;
    double best = inf;
    for (int s = 0; s < 50; ++s) {
        Matching m = s == 0 ? opt.witness : random_module_matching(rng, A, B);
        double c = interpolating_cost(matching_to_interpolating_object(A, B, m), p);
        double mc = matching_cost(DA, DB, m, MetricParams{p, std::nullopt});
        if (s < 3) out.push_back(equality("cost identity", c, mc, 1e-12 * std::max(1.0, mc)));
        out.push_back(inequality("object cost >= W_p", opt.cost, c, 1e-9));
        best = std::min(best, c);
    }
    out.push_back(equality("min object cost = W_p p=" + p_label(p), best, opt.cost, 1e-9));
    return out;
}

std::vector<std::vector<int>> random_gamma(Rng& rng, const IntervalModule& A, const IntervalModule& C) {
    std::vector<std::vector<int>> gamma(C.size());
    for (std::size_t k = 0; k < C.size(); ++k) {
        if (C.intervals[k].infinite()) continue;
        for (std::size_t g = 0; g < A.size(); ++g)
            if (A.intervals[g].birth <= C.intervals[k].death && coin(rng)) gamma[k].push_back(static_cast<int>(g));
    }
    return gamma;
}

std::vector<TrialRecord> suite_ses(std::size_t, Rng& rng) {
    auto A = random_interval_module(rng, uniform_int(rng, 1, 5), true);
    auto C = random_interval_module(rng, uniform_int(rng, 1, 5), true);
    auto B = IntervalModule::from_diagram(presentation_barcode(build_extension(A, C, random_gamma(rng, A, C))));
    std::vector<TrialRecord> out;
    for (double p : {1.0, 2.0, 3.0}) {
        double ac = module_norm(A + C, p), b = module_norm(B, p), sum = module_norm(A, p) + module_norm(C, p);
        out.push_back(inequality("||A+C|| <= ||B|| p=" + p_label(p), ac, b, 1e-12));
        out.push_back(inequality("||B|| <= ||A||+||C|| p=" + p_label(p), b, sum, 1e-12));
    }
    out.push_back(equality("p=1 equality", module_norm(B, 1.0), module_norm(A + C, 1.0), 0.0));
    return out;
}

std::vector<TrialRecord> suite_rearrangement(std::size_t trial, Rng& rng) {
    const int n = uniform_int(rng, 1, 7);
    const double p = 1.0 + static_cast<double>(trial % 3);
    std::vector<double> vals(2 * static_cast<std::size_t>(n));
    for (auto& v : vals) v = uniform(rng, 0.0, 10.0);
    std::sort(vals.begin(), vals.end());
    std::vector<double> a(vals.begin(), vals.begin() + n), b(vals.begin() + n, vals.end());
    std::reverse(a.begin(), a.end());
    auto res = rearrangement_oracle(a, b, p);
    auto rec = inequality("identity maximal n=" + std::to_string(n) + " p=" + p_label(p), res.max_cost,
                          res.identity_cost, 1e-12 * std::max(1.0, res.max_cost));
    rec.ok = rec.ok && res.identity_is_max;
    return {rec};
}

std::vector<TrialRecord> suite_diagonal(std::size_t trial, Rng& rng) {
    static const double ps[] = {1.0, 1.5, 2.0, 3.0};
    const double p = ps[trial % 4];
    auto X = random_diagram(rng, uniform_int(rng, 1, 10), 1, 0);
    double ratio = wasserstein_distance(X, PersistenceDiagram{}, p) / norm(X, p);
    return {equality("W_p(X,0)/||X||_p vs 2^((1-p)/p) p=" + p_label(p), ratio, std::pow(2.0, (1.0 - p) / p), 1e-12)};
}

std::vector<TrialRecord> suite_oracle(std::size_t, Rng& rng) {
    auto X = random_diagram(rng, uniform_int(rng, 0, 6), 0, 0);
    auto Y = random_diagram(rng, uniform_int(rng, 0, 6), 0, 0);
    std::vector<TrialRecord> out;
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        MetricParams mp{p, std::nullopt};
        out.push_back(equality("assignment = brute force p=" + p_label(p), wasserstein(X, Y, mp).cost,
                               brute_force_wasserstein(X, Y, mp), 1e-12));
    }
    double w1 = wasserstein_distance(X, Y, 1.0), w2 = wasserstein_distance(X, Y, 2.0), wi = bottleneck(X, Y);
    out.push_back(inequality("W_inf <= W_2", wi, w2, 1e-12));
    out.push_back(inequality("W_2 <= W_1", w2, w1, 1e-12));
    return out;
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> s = {
        {"cellular", {1e-9, suite_cellular, nullptr}},
        {"piecewise", {1e-9, suite_piecewise, nullptr}},
        {"image", {1e-9, suite_image, nullptr}},
        {"pht", {1e-9, suite_pht, nullptr}},
        {"rips-21", {1e-9, suite_rips21, nullptr}},
        {"rips-0", {0.0, suite_rips0, nullptr}},
        {"porism", {1e-9, suite_porism, nullptr}},
        {"teepee", {0.0, suite_teepee, nullptr}},
        {"rank", {1e-9, suite_rank,
                  [](StabilityReport& rep) {
                      std::size_t found = 0;
                      double worst = 0.0;
                      for (auto& r : rep.records)
                          if (r.label.rfind("q=2", 0) == 0) {
                              double ratio = r.rhs / r.lhs;
                              worst = std::max(worst, ratio);
                              if (ratio > 1.0) ++found;
                          }
                      rep.notes.push_back("q=2 counter-pairs with rank/W2 > 1: " + std::to_string(found) +
                                          " (max ratio " + fmt(worst) + ")");
                      if (rep.trials > 0) {
                          TrialRecord rec;
                          rec.trial = rep.trials;
                          rec.label = "q=2 Lipschitz failure found";
                          rec.lhs = 1.0;
                          rec.rhs = worst;
                          rec.slack = worst - 1.0;
                          rec.ok = found > 0;
                          rep.records.push_back(rec);
                      }
                  }}},
        {"algebraic", {1e-9, suite_algebraic, nullptr}},
        {"ses", {1e-12, suite_ses, nullptr}},
        {"rearrangement", {1e-12, suite_rearrangement, nullptr}},
        {"diagonal", {1e-12, suite_diagonal,
                      [](StabilityReport& rep) {
                          rep.notes.push_back("measured W_p(X,0)/||X||_p matches 2^((1-p)/p); the printed constant "
                                              "2^((p-1)/p) only agrees at p = 1");
                      }}},
        {"oracle", {1e-12, suite_oracle, nullptr}},
    };
    return s;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (auto& [k, v] : suites()) names.push_back(k);
    names.push_back("c31");
    names.push_back("landscape");
    std::sort(names.begin(), names.end());
    return names;
}

StabilityReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
    StabilityReport rep;
    if (name == "c31") {
        rep = trials == 0 ? StabilityReport{} : run_c31(trials, seed);
    } else if (name == "landscape") {
        rep = trials == 0 ? StabilityReport{} : run_landscape();
        rep.tolerance = 0.0;
    } else {
        auto it = suites().find(name);
        if (it == suites().end()) throw InputError("unknown suite '" + name + "'");
        const Suite& s = it->second;
        rep.tolerance = s.tolerance;
        std::vector<std::vector<TrialRecord>> per(trials);
        parallel_for(trials, [&](std::size_t t) {
            auto rng = trial_rng(seed, t);
            per[t] = s.run(t, rng);
            for (auto& r : per[t]) r.trial = t;
        });
        for (auto& v : per) rep.records.insert(rep.records.end(), v.begin(), v.end());
        rep.trials = trials;
        if (s.post) s.post(rep);
    }
    rep.suite = name;
    rep.seed = seed;
    rep.trials = trials;
    rep.finalize();
    return rep;
}

}  // namespace wstab

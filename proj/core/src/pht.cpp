#include "wstab/pht.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "wstab/diagram_metrics.hpp"
#include "wstab/error.hpp"
#include "wstab/parallel.hpp"
#include "wstab/persistence.hpp"

namespace wstab {

namespace {

constexpr double pi = std::numbers::pi;

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                   int depth) {
    double m = (a + b) / 2.0;
    double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double diff = left + right - whole;
    if (depth <= 0 || std::fabs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b), fm = f((a + b) / 2.0);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 40);
}

void check_same_complex(const VertexEmbedding& f, const VertexEmbedding& g) {
    if (f.complex.simplices != g.complex.simplices) throw InputError("pht: embeddings use different complexes");
    if (f.coords.size() != g.coords.size()) throw InputError("pht: embeddings have different vertex counts");
    if (static_cast<int>(f.coords.size()) < f.complex.vertex_count())
        throw InputError("pht: fewer coordinates than vertices");
    for (std::size_t i = 0; i < f.coords.size(); ++i)
        if (f.coords[i].size() != f.coords.front().size() || g.coords[i].size() != f.coords.front().size())
            throw InputError("pht: inconsistent coordinate dimension");
}

}  // namespace

double sphere_area(int k) {
    if (k < 0) throw InputError("sphere_area: negative dimension");
    double n = static_cast<double>(k + 1);
    return 2.0 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
}

DirectionSample sphere_sample(int d, int n, SphereScheme scheme, std::uint64_t seed) {
    if (d < 2) throw InputError("sphere_sample: d must be at least 2");
    if (n < 1) throw InputError("sphere_sample: n must be positive");
    DirectionSample s;
    const double area = sphere_area(d - 1);
    switch (scheme) {
    case SphereScheme::uniform_grid:
        if (d == 2) {
            for (int k = 0; k < n; ++k) {
                double a = 2.0 * pi * k / n;
                s.directions.push_back({std::cos(a), std::sin(a)});
            }
        } else if (d == 3) {
            // bands x azimuths with bands the divisor of n closest to sqrt(n/2)
            int bands = 1;
            double target = std::sqrt(n / 2.0);
            for (int b = 1; b <= n; ++b)
                if (n % b == 0 && std::fabs(b - target) < std::fabs(bands - target)) bands = b;
            int az = n / bands;
            for (int b = 0; b < bands; ++b) {
                double z = -1.0 + (2.0 * b + 1.0) / bands;
                double r = std::sqrt(std::max(0.0, 1.0 - z * z));
                double shift = (b % 2) * 0.5;
                for (int a = 0; a < az; ++a) {
                    double phi = 2.0 * pi * (a + shift) / az;
                    s.directions.push_back({r * std::cos(phi), r * std::sin(phi), z});
                }
            }
        } else {
            throw InputError("sphere_sample: uniform-grid supports d = 2 or 3");
        }
        break;
    case SphereScheme::fibonacci: {
        if (d != 3) throw InputError("sphere_sample: fibonacci supports d = 3 only");
        const double golden = pi * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < n; ++k) {
            double z = 1.0 - (2.0 * k + 1.0) / n;
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi = golden * k;
            s.directions.push_back({r * std::cos(phi), r * std::sin(phi), z});
        }
        break;
    }
    case SphereScheme::random: {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int k = 0; k < n; ++k) {
            std::vector<double> v(static_cast<std::size_t>(d));
            double nrm = 0.0;
            while (nrm < 1e-12) {
                nrm = 0.0;
                for (auto& x : v) {
                    x = gauss(rng);
                    nrm += x * x;
                }
            }
            nrm = std::sqrt(nrm);
            for (auto& x : v) x /= nrm;
            s.directions.push_back(std::move(v));
        }
        break;
    }
    }
    s.weights.assign(s.directions.size(), area / static_cast<double>(s.directions.size()));
    return s;
}

double sphere_constant(double p, int d) {
    if (d < 2) throw InputError("sphere_constant: d must be at least 2");
    if (!(p >= 0.0) || std::isinf(p)) throw InputError("sphere_constant: p must be finite and non-negative");
    const double e = static_cast<double>(d - 2);
    auto f = [&](double t) {
        double c = std::cos(t);
        double s = std::sin(t);
        return (c <= 0.0 ? (p == 0.0 ? 1.0 : 0.0) : std::pow(c, p)) * (e == 0.0 ? 1.0 : std::pow(s, e));
    };
    double integral = adaptive_simpson(f, 0.0, pi / 2.0, 1e-13);
    return 2.0 * sphere_area(d - 2) * integral;
}

double quadrature_error(const DirectionSample& s, double p, const std::vector<std::vector<double>>& probes) {
    if (s.directions.empty()) throw InputError("quadrature_error: empty sample");
    const int d = static_cast<int>(s.directions.front().size());
    const double c = sphere_constant(p, d);
    double worst = 0.0;
    for (const auto& u : probes) {
        double q = 0.0;
        for (std::size_t k = 0; k < s.directions.size(); ++k) {
            double dot = 0.0;
            for (int i = 0; i < d; ++i) dot += s.directions[k][static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
            q += s.weights[k] * std::pow(std::fabs(dot), p);
        }
        worst = std::max(worst, std::fabs(q - c) / c);
    }
    return worst;
}

double pht_distance(const VertexEmbedding& f, const VertexEmbedding& g, double p, const DirectionSample& sample) {
    check_same_complex(f, g);
    if (!(p >= 1.0) || std::isinf(p)) throw InputError("pht_distance: p must be finite and >= 1");
    if (sample.directions.size() != sample.weights.size()) throw InputError("pht_distance: malformed sample");
    if (f.coords.empty()) return 0.0;
    const int d = static_cast<int>(f.coords.front().size());
    std::vector<double> terms(sample.directions.size(), 0.0);
    parallel_for(sample.directions.size(), [&](std::size_t k) {
        const auto& w = sample.directions[k];
        if (static_cast<int>(w.size()) != d) throw InputError("pht_distance: direction dimension mismatch");
        auto trim = [d](PersistenceDiagram D) {
            std::erase_if(D.points, [d](const DiagramPoint& pt) { return pt.dim >= d; });
            return D;
        };
        auto df = trim(persistence_diagram(height_filtration(f, w)));
        auto dg = trim(persistence_diagram(height_filtration(g, w)));
        double wp = wasserstein_distance(df, dg, p);
        terms[k] = sample.weights[k] * std::pow(wp, p);
    });
    double acc = 0.0;
    for (double t : terms) acc += t;
    return std::pow(acc, 1.0 / p);
}

double pht_bound(const VertexEmbedding& f, const VertexEmbedding& g, double p) {
    check_same_complex(f, g);
    if (f.coords.empty()) return 0.0;
    const int d = static_cast<int>(f.coords.front().size());
    double s = 0.0;
    for (std::size_t i = 0; i < f.coords.size(); ++i) s += std::pow(euclidean(f.coords[i], g.coords[i]), p);
    return std::pow(f.complex.max_vertex_star() * sphere_constant(p, d) * s, 1.0 / p);
}

}  // namespace wstab

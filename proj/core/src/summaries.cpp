#include "wstab/summaries.hpp"

#include <algorithm>
#include <cmath>

#include "wstab/error.hpp"

namespace wstab {

namespace {

double tent(double b, double d, double t) { return std::max(0.0, std::min(t - b, d - t)); }

int slope_class(double t0, double v0, double t1, double v1) {
    double s = (v1 - v0) / (t1 - t0);
    return s > 0.5 ? 1 : (s < -0.5 ? -1 : 0);
}

double piecewise_at(const std::vector<std::pair<double, double>>& pts, double t) {
    if (pts.empty() || t <= pts.front().first || t >= pts.back().first) {
        if (!pts.empty() && t == pts.front().first) return pts.front().second;
        if (!pts.empty() && t == pts.back().first) return pts.back().second;
        return 0.0;
    }
    auto it = std::lower_bound(pts.begin(), pts.end(), t,
                               [](const std::pair<double, double>& a, double v) { return a.first < v; });
    if (it->first == t) return it->second;
    auto prev = it - 1;
    double w = (t - prev->first) / (it->first - prev->first);
    return prev->second + w * (it->second - prev->second);
}

// int_0^len |a + (b-a) s/len|^q ds for a, b of the same sign.
double same_sign_power_integral(double a, double b, double len, double q) {
    a = std::fabs(a);
    b = std::fabs(b);
    if (q == 1.0) return len * (a + b) / 2.0;
    if (q == 2.0) return len * (a * a + a * b + b * b) / 3.0;
    if (a == b) return len * std::pow(a, q);
    return len * (std::pow(b, q + 1.0) - std::pow(a, q + 1.0)) / ((q + 1.0) * (b - a));
}

double segment_power_integral(double a, double b, double len, double q) {
    if (len <= 0.0) return 0.0;
    if ((a >= 0.0 && b >= 0.0) || (a <= 0.0 && b <= 0.0)) return same_sign_power_integral(a, b, len, q);
    double s = len * a / (a - b);  // zero crossing
    return same_sign_power_integral(a, 0.0, s, q) + same_sign_power_integral(0.0, b, len - s, q);
}

}  // namespace

double Landscape::operator()(int k, double t) const {
    if (k < 1 || static_cast<std::size_t>(k) > levels.size()) return 0.0;
    return piecewise_at(levels[static_cast<std::size_t>(k - 1)], t);
}

double default_horizon(const PersistenceDiagram& X) {
    double m = -inf;
    for (const auto& pt : X.points)
        if (!pt.essential()) m = std::max(m, pt.death);
    return m == -inf ? 1.0 : 10.0 * m;
}

Landscape landscape(const PersistenceDiagram& X, const LandscapeOptions& opt) {
    const double horizon = opt.horizon.value_or(default_horizon(X));
    std::vector<std::pair<double, double>> bars;
    for (const auto& pt : X.points) {
        double d = pt.essential() ? horizon : pt.death;
        if (d > pt.birth) bars.emplace_back(pt.birth, d);
    }
    const std::size_t levels = opt.max_level > 0 ? static_cast<std::size_t>(opt.max_level) : bars.size();
    Landscape L;
    L.levels.resize(levels);
    if (bars.empty() || levels == 0) return L;

    // Between consecutive candidates every tent is linear and their order
    // is fixed, so each level is linear there.
    std::vector<double> ts;
    for (auto [b, d] : bars) {
        ts.push_back(b);
        ts.push_back(d);
    }
    for (auto [bi, di] : bars)
        for (auto [bj, dj] : bars) ts.push_back((bi + dj) / 2.0);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<double> vals(bars.size());
    for (double t : ts) {
        for (std::size_t i = 0; i < bars.size(); ++i) vals[i] = tent(bars[i].first, bars[i].second, t);
        std::sort(vals.begin(), vals.end(), std::greater<>());
        for (std::size_t k = 0; k < levels; ++k) {
            auto& lev = L.levels[k];
            const double v = k < vals.size() ? vals[k] : 0.0;
            // slopes are -1, 0 or 1: drop the middle of three collinear breakpoints
            if (lev.size() >= 2) {
                auto [t0, v0] = lev[lev.size() - 2];
                auto [t1, v1] = lev.back();
                if (slope_class(t0, v0, t1, v1) == slope_class(t1, v1, t, v)) lev.pop_back();
            }
            lev.emplace_back(t, v);
        }
    }
    // trim runs of zeros at both ends, keeping one zero breakpoint
    for (auto& lev : L.levels) {
        std::size_t first = 0, last = lev.size();
        while (first + 1 < lev.size() && lev[first + 1].second == 0.0 && lev[first].second == 0.0) ++first;
        while (last > first + 1 && lev[last - 1].second == 0.0 && lev[last - 2].second == 0.0) --last;
        std::vector<std::pair<double, double>> trimmed(lev.begin() + static_cast<std::ptrdiff_t>(first),
                                                       lev.begin() + static_cast<std::ptrdiff_t>(last));
        if (trimmed.size() == 1 && trimmed.front().second == 0.0) trimmed.clear();
        lev.swap(trimmed);
    }
    return L;
}

double landscape_distance(const Landscape& a, const Landscape& b, double q) {
    if (!(q >= 1.0)) throw InputError("landscape_distance: q must be >= 1");
    const std::size_t levels = std::max(a.depth(), b.depth());
    double acc = 0.0;
    for (std::size_t k = 0; k < levels; ++k) {
        std::vector<double> ts;
        if (k < a.depth())
            for (auto& [t, v] : a.levels[k]) ts.push_back(t);
        if (k < b.depth())
            for (auto& [t, v] : b.levels[k]) ts.push_back(t);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        const int level = static_cast<int>(k) + 1;
        std::vector<double> diff(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) diff[i] = a(level, ts[i]) - b(level, ts[i]);
        if (std::isinf(q)) {
            for (double d : diff) acc = std::max(acc, std::fabs(d));
            continue;
        }
        for (std::size_t i = 0; i + 1 < ts.size(); ++i)
            acc += segment_power_integral(diff[i], diff[i + 1], ts[i + 1] - ts[i], q);
    }
    return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

RankFunction::RankFunction(const PersistenceDiagram& X, int dim) {
    for (const auto& pt : X.points)
        if (pt.dim == dim) pts_.push_back(pt);
}

int RankFunction::operator()(double a, double b) const {
    int n = 0;
    for (const auto& pt : pts_)
        if (pt.birth <= a && pt.death > b) ++n;
    return n;
}

double rank_distance(const RankFunction& r1, const RankFunction& r2, double q) {
    if (!(q >= 1.0)) throw InputError("rank_distance: q must be >= 1");
    std::vector<double> g;
    int e1 = 0, e2 = 0;
    for (const auto* r : {&r1, &r2})
        for (const auto& pt : r->points()) {
            g.push_back(pt.birth);
            if (!pt.essential()) g.push_back(pt.death);
        }
    for (const auto& pt : r1.points()) e1 += pt.essential();
    for (const auto& pt : r2.points()) e2 += pt.essential();
    if (e1 != e2) return inf;
    if (g.empty()) return 0.0;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    const std::size_t m = g.size();
    // cell i is [g_i, g_{i+1}), the last one unbounded
    auto upper = [&](std::size_t i) { return i + 1 < m ? g[i + 1] : inf; };

    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            double diff = std::fabs(static_cast<double>(r1(g[i], g[j]) - r2(g[i], g[j])));
            if (diff == 0.0) continue;
            double w;
            if (i == j) {
                double len = upper(i) - g[i];
                if (std::isinf(len)) return inf;
                w = len + std::expm1(-len);
            } else {
                double x0 = g[i], x1 = upper(i), y0 = g[j], y1 = upper(j);
                w = std::exp(x1 - y0) * (-std::expm1(x0 - x1)) * (-std::expm1(y0 - y1));
            }
            if (std::isinf(q))
                acc = std::max(acc, w > 0.0 ? diff : 0.0);
            else
                acc += std::pow(diff, q) * w;
        }
    }
    return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

std::vector<double> linear_representation(const PersistenceDiagram& X, const Kernel& kernel, std::size_t out_dim) {
    std::vector<double> out(out_dim, 0.0);
    for (const auto& pt : X.points) {
        auto v = kernel(pt);
        if (v.size() != out_dim) throw InputError("linear_representation: kernel returned the wrong length");
        for (std::size_t i = 0; i < out_dim; ++i) out[i] += v[i];
    }
    return out;
}

Kernel betti_kernel(std::vector<double> grid) {
    return [grid = std::move(grid)](const DiagramPoint& pt) {
        std::vector<double> v(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) v[i] = (pt.birth <= grid[i] && grid[i] < pt.death) ? 1.0 : 0.0;
        return v;
    };
}

std::vector<double> betti_curve(const PersistenceDiagram& X, const std::vector<double>& grid) {
    return linear_representation(X, betti_kernel(grid), grid.size());
}

}  // namespace wstab

#include "wstab/diagram_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "wstab/assignment.hpp"
#include "wstab/error.hpp"

namespace wstab {

namespace {

struct DimSlice {
    std::vector<int> xf, yf;  // finite point indices
    std::vector<int> xe, ye;  // essential point indices
};

std::map<int, DimSlice> slice_by_dim(const PersistenceDiagram& X, const PersistenceDiagram& Y) {
    std::map<int, DimSlice> out;
    for (std::size_t i = 0; i < X.points.size(); ++i) {
        auto& s = out[X.points[i].dim];
        (X.points[i].essential() ? s.xe : s.xf).push_back(static_cast<int>(i));
    }
    for (std::size_t j = 0; j < Y.points.size(); ++j) {
        auto& s = out[Y.points[j].dim];
        (Y.points[j].essential() ? s.ye : s.yf).push_back(static_cast<int>(j));
    }
    return out;
}

// ||(a,b)||_q^p
double lq_pow(double a, double b, double p, double q) {
    a = std::fabs(a);
    b = std::fabs(b);
    if (q == p) return std::pow(a, p) + std::pow(b, p);
    if (std::isinf(q)) return std::pow(std::max(a, b), p);
    return std::pow(std::pow(a, q) + std::pow(b, q), p / q);
}

double pair_pow(const DiagramPoint& x, const DiagramPoint& y, double p, double q) {
    if (x.essential() != y.essential()) return inf;
    if (x.essential()) return std::pow(std::fabs(x.birth - y.birth), p);
    return lq_pow(x.birth - y.birth, x.death - y.death, p, q);
}

double diag_pow(const DiagramPoint& x, double p, double q) {
    if (x.essential()) return inf;
    double h = x.length() / 2.0;
    return lq_pow(h, h, p, q);
}

// Sorted-birth matching of essential points (optimal for every p >= 1).
std::vector<std::pair<int, int>> match_essential(const PersistenceDiagram& X, const PersistenceDiagram& Y,
                                                 std::vector<int> xe, std::vector<int> ye) {
    auto by_birth = [](const PersistenceDiagram& D) {
        return [&D](int a, int b) {
            const auto& pa = D.points[static_cast<std::size_t>(a)];
            const auto& pb = D.points[static_cast<std::size_t>(b)];
            return pa.birth < pb.birth || (pa.birth == pb.birth && a < b);
        };
    };
    std::sort(xe.begin(), xe.end(), by_birth(X));
    std::sort(ye.begin(), ye.end(), by_birth(Y));
    std::vector<std::pair<int, int>> out;
    for (std::size_t k = 0; k < xe.size(); ++k) out.emplace_back(xe[k], ye[k]);
    return out;
}

}  // namespace

void MetricParams::check() const {
    if (!(p >= 1.0)) throw InputError("metric: p must be >= 1 (got " + std::to_string(p) + ")");
    double qq = q_value();
    if (!(qq >= 1.0)) throw InputError("metric: q must be >= 1 (got " + std::to_string(qq) + ")");
}

double point_distance(const DiagramPoint& x, const DiagramPoint& y, double q) {
    if (x.essential() != y.essential()) return inf;
    if (x.essential()) return std::fabs(x.birth - y.birth);
    double a = std::fabs(x.birth - y.birth), b = std::fabs(x.death - y.death);
    if (std::isinf(q)) return std::max(a, b);
    return std::pow(std::pow(a, q) + std::pow(b, q), 1.0 / q);
}

double diagonal_distance(const DiagramPoint& x, double q) {
    if (x.essential()) return inf;
    double h = x.length() / 2.0;
    if (std::isinf(q)) return h;
    return h * std::pow(2.0, 1.0 / q);
}

WassersteinResult wasserstein(const PersistenceDiagram& X, const PersistenceDiagram& Y, const MetricParams& params) {
    params.check();
    const double p = params.p, q = params.q_value();
    if (std::isinf(p)) return bottleneck_matching(X, Y, q);

    WassersteinResult res;
    for (auto& [dim, s] : slice_by_dim(X, Y)) {
        if (s.xe.size() != s.ye.size()) {
            res.cost = inf;
            res.witness.edges.clear();
            return res;
        }
        for (auto [i, j] : match_essential(X, Y, s.xe, s.ye)) res.witness.edges.push_back({dim, i, j});

        const std::size_t n = s.xf.size(), m = s.yf.size(), N = n + m;
        if (N == 0) continue;
        CostMatrix c(N);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& x = X.points[static_cast<std::size_t>(s.xf[i])];
            for (std::size_t j = 0; j < m; ++j) c(i, j) = pair_pow(x, Y.points[static_cast<std::size_t>(s.yf[j])], p, q);
            double dx = diag_pow(x, p, q);
            for (std::size_t j = m; j < N; ++j) c(i, j) = dx;
        }
        for (std::size_t j = 0; j < m; ++j) {
            double dy = diag_pow(Y.points[static_cast<std::size_t>(s.yf[j])], p, q);
            for (std::size_t i = n; i < N; ++i) c(i, j) = dy;
        }
        auto assign = solve_assignment(c);
        std::vector<char> y_used(m, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = static_cast<std::size_t>(assign[i]);
            if (j < m) {
                y_used[j] = 1;
                res.witness.edges.push_back({dim, s.xf[i], s.yf[j]});
            } else {
                res.witness.edges.push_back({dim, s.xf[i], -1});
            }
        }
        for (std::size_t j = 0; j < m; ++j)
            if (!y_used[j]) res.witness.edges.push_back({dim, -1, s.yf[j]});
    }
    res.cost = matching_cost(X, Y, res.witness, params);
    return res;
}

double wasserstein_distance(const PersistenceDiagram& X, const PersistenceDiagram& Y, double p) {
    return wasserstein(X, Y, MetricParams{p, std::nullopt}).cost;
}

WassersteinResult bottleneck_matching(const PersistenceDiagram& X, const PersistenceDiagram& Y, double q) {
    if (!(q >= 1.0)) throw InputError("bottleneck: q must be >= 1");
    WassersteinResult res;
    double worst = 0.0;
    for (auto& [dim, s] : slice_by_dim(X, Y)) {
        if (s.xe.size() != s.ye.size()) return {inf, {}};
        for (auto [i, j] : match_essential(X, Y, s.xe, s.ye)) {
            res.witness.edges.push_back({dim, i, j});
            worst = std::max(worst, std::fabs(X.points[static_cast<std::size_t>(i)].birth -
                                              Y.points[static_cast<std::size_t>(j)].birth));
        }
        const std::size_t n = s.xf.size(), m = s.yf.size(), N = n + m;
        if (N == 0) continue;

        // cost of the augmented bipartite graph, same layout as the assignment
        auto cost = [&](std::size_t i, std::size_t j) -> double {
            if (i < n && j < m)
                return point_distance(X.points[static_cast<std::size_t>(s.xf[i])],
                                      Y.points[static_cast<std::size_t>(s.yf[j])], q);
            if (i < n) return diagonal_distance(X.points[static_cast<std::size_t>(s.xf[i])], q);
            if (j < m) return diagonal_distance(Y.points[static_cast<std::size_t>(s.yf[j])], q);
            return 0.0;
        };
        std::vector<double> cand{0.0};
        for (std::size_t i = 0; i < n; ++i) {
            cand.push_back(cost(i, m));
            for (std::size_t j = 0; j < m; ++j) cand.push_back(cost(i, j));
        }
        for (std::size_t j = 0; j < m; ++j) cand.push_back(cost(n, j));
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

        std::vector<int> l2r;
        auto feasible = [&](double eps, std::vector<int>* out) {
            std::vector<std::vector<int>> adj(N);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    if (cost(i, j) <= eps) adj[i].push_back(static_cast<int>(j));
            return max_bipartite_matching(adj, static_cast<int>(N), out) == static_cast<int>(N);
        };
        std::size_t lo = 0, hi = cand.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (feasible(cand[mid], nullptr))
                hi = mid;
            else
                lo = mid + 1;
        }
        if (!feasible(cand[lo], &l2r)) throw InvariantError("bottleneck: largest candidate infeasible");
        worst = std::max(worst, cand[lo]);
        std::vector<char> y_used(m, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = static_cast<std::size_t>(l2r[i]);
            if (j < m) {
                y_used[j] = 1;
                res.witness.edges.push_back({dim, s.xf[i], s.yf[j]});
            } else {
                res.witness.edges.push_back({dim, s.xf[i], -1});
            }
        }
        for (std::size_t j = 0; j < m; ++j)
            if (!y_used[j]) res.witness.edges.push_back({dim, -1, s.yf[j]});
    }
    res.cost = worst;
    return res;
}

double bottleneck(const PersistenceDiagram& X, const PersistenceDiagram& Y, double q) {
    return bottleneck_matching(X, Y, q).cost;
}

double matching_cost(const PersistenceDiagram& X, const PersistenceDiagram& Y, const Matching& m,
                     const MetricParams& params) {
    params.check();
    const double p = params.p, q = params.q_value();
    std::vector<int> xc(X.points.size(), 0), yc(Y.points.size(), 0);
    double acc = 0.0;
    for (const auto& e : m.edges) {
        if (e.x < -1 || e.x >= static_cast<int>(X.points.size()) || e.y < -1 ||
            e.y >= static_cast<int>(Y.points.size()) || (e.x < 0 && e.y < 0))
            throw InputError("matching: edge index out of range");
        const DiagramPoint* x = e.x >= 0 ? &X.points[static_cast<std::size_t>(e.x)] : nullptr;
        const DiagramPoint* y = e.y >= 0 ? &Y.points[static_cast<std::size_t>(e.y)] : nullptr;
        if ((x && x->dim != e.dim) || (y && y->dim != e.dim)) throw InputError("matching: dimension mismatch");
        if (x) ++xc[static_cast<std::size_t>(e.x)];
        if (y) ++yc[static_cast<std::size_t>(e.y)];
        double term;
        if (std::isinf(p)) {
            term = x && y ? point_distance(*x, *y, q) : diagonal_distance(x ? *x : *y, q);
            acc = std::max(acc, term);
        } else {
            term = x && y ? pair_pow(*x, *y, p, q) : diag_pow(x ? *x : *y, p, q);
            acc += term;
        }
    }
    for (int c : xc)
        if (c != 1) throw InputError("matching: a point of X is not matched exactly once");
    for (int c : yc)
        if (c != 1) throw InputError("matching: a point of Y is not matched exactly once");
    return std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
}

double norm(const PersistenceDiagram& X, double p) {
    if (!(p >= 1.0)) throw InputError("norm: p must be >= 1");
    double acc = 0.0;
    for (const auto& pt : X.points) {
        if (pt.essential()) return inf;
        if (std::isinf(p))
            acc = std::max(acc, pt.length());
        else
            acc += std::pow(pt.length(), p);
    }
    return std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
}

double total_persistence(const PersistenceDiagram& X, double k) {
    double acc = 0.0;
    for (const auto& pt : X.points) {
        if (pt.essential()) return inf;
        acc += std::pow(pt.length(), k);
    }
    return acc;
}

double brute_force_wasserstein(const PersistenceDiagram& X, const PersistenceDiagram& Y, const MetricParams& params) {
    params.check();
    const double p = params.p, q = params.q_value();
    const bool sup = std::isinf(p);

    // Ground distances written out independently of the solver path.
    auto dist = [q](double b1, double d1, double b2, double d2) {
        double a = std::fabs(b1 - b2), b = std::fabs(d1 - d2);
        if (std::isinf(q)) return std::max(a, b);
        return std::pow(std::pow(a, q) + std::pow(b, q), 1.0 / q);
    };
    auto to_diag = [&](double b, double d) {
        double mid = (b + d) / 2.0;
        return dist(b, d, mid, mid);
    };
    auto lift = [&](double c) { return sup ? c : std::pow(c, p); };
    auto combine = [&](double a, double b) { return sup ? std::max(a, b) : a + b; };

    std::map<int, std::vector<DiagramPoint>> xs, ys;
    for (const auto& pt : X.points) xs[pt.dim].push_back(pt);
    for (const auto& pt : Y.points) ys[pt.dim].push_back(pt);
    std::vector<int> dims;
    for (auto& [d, v] : xs) dims.push_back(d);
    for (auto& [d, v] : ys) dims.push_back(d);
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

    double total = 0.0;
    for (int d : dims) {
        std::vector<DiagramPoint> xf, yf, xe, ye;
        for (const auto& pt : xs[d]) (pt.death == inf ? xe : xf).push_back(pt);
        for (const auto& pt : ys[d]) (pt.death == inf ? ye : yf).push_back(pt);
        if (xe.size() != ye.size()) return inf;
        if (xf.size() + yf.size() > brute_force_cap || xe.size() > 8)
            throw InputError("brute_force_wasserstein: size cap exceeded in dimension " + std::to_string(d));

        double best_e = xe.empty() ? 0.0 : inf;
        if (!xe.empty()) {
            std::vector<int> perm(ye.size());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                double c = 0.0;
                for (std::size_t k = 0; k < xe.size(); ++k)
                    c = combine(c, lift(std::fabs(xe[k].birth - ye[static_cast<std::size_t>(perm[k])].birth)));
                best_e = std::min(best_e, c);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        double best_f = inf;
        std::vector<char> used(yf.size(), 0);
        std::function<void(std::size_t, double)> rec = [&](std::size_t i, double acc) {
            if (i == xf.size()) {
                for (std::size_t j = 0; j < yf.size(); ++j)
                    if (!used[j]) acc = combine(acc, lift(to_diag(yf[j].birth, yf[j].death)));
                best_f = std::min(best_f, acc);
                return;
            }
            rec(i + 1, combine(acc, lift(to_diag(xf[i].birth, xf[i].death))));
            for (std::size_t j = 0; j < yf.size(); ++j) {
                if (used[j]) continue;
                used[j] = 1;
                rec(i + 1, combine(acc, lift(dist(xf[i].birth, xf[i].death, yf[j].birth, yf[j].death))));
                used[j] = 0;
            }
        };
        rec(0, 0.0);
        total = combine(total, combine(best_e, best_f));
    }
    return sup ? total : std::pow(total, 1.0 / p);
}

}  // namespace wstab

#include "wstab/pointcloud_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "wstab/assignment.hpp"
#include "wstab/error.hpp"
#include "wstab/persistence.hpp"

namespace wstab {

namespace {

void check_p(double p, const char* who) {
    if (!(p >= 1.0)) throw InputError(std::string(who) + ": p must be >= 1");
}

std::vector<std::vector<double>> distances(const PointCloud& X, const PointCloud& Y) {
    if (!X.points.empty() && !Y.points.empty() && X.dim() != Y.dim())
        throw InputError("point clouds live in different dimensions");
    std::vector<std::vector<double>> d(X.size(), std::vector<double>(Y.size()));
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < Y.size(); ++j) d[i][j] = euclidean(X.points[i], Y.points[j]);
    return d;
}

}  // namespace

double pointset_wasserstein(const PointCloud& X, const PointCloud& Y, double p) {
    check_p(p, "pointset_wasserstein");
    if (X.size() != Y.size())
        throw InputError("pointset_wasserstein: clouds have " + std::to_string(X.size()) + " and " +
                         std::to_string(Y.size()) + " points");
    const std::size_t n = X.size();
    if (n == 0) return 0.0;
    auto d = distances(X, Y);
    if (std::isinf(p)) {
        std::vector<double> cand;
        for (auto& row : d) cand.insert(cand.end(), row.begin(), row.end());
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        auto feasible = [&](double eps) {
            std::vector<std::vector<int>> adj(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (d[i][j] <= eps) adj[i].push_back(static_cast<int>(j));
            return max_bipartite_matching(adj, static_cast<int>(n)) == static_cast<int>(n);
        };
        std::size_t lo = 0, hi = cand.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (feasible(cand[mid]))
                hi = mid;
            else
                lo = mid + 1;
        }
        return cand[lo];
    }
    CostMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = std::pow(d[i][j], p);
    auto a = solve_assignment(c);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += c(i, static_cast<std::size_t>(a[i]));
    return std::pow(s, 1.0 / p);
}

Correspondence p_hausdorff_correspondence(const PointCloud& X, const PointCloud& Y, double p) {
    check_p(p, "p_hausdorff");
    if (X.size() == 0 || Y.size() == 0) throw InputError("p_hausdorff: empty point cloud");
    const std::size_t n = X.size(), m = Y.size();
    auto d = distances(X, Y);

    std::vector<int> best_x(n), best_y(m);
    for (std::size_t i = 0; i < n; ++i)
        best_x[i] = static_cast<int>(std::min_element(d[i].begin(), d[i].end()) - d[i].begin());
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t bi = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (d[i][j] < d[bi][j]) bi = i;
        best_y[j] = static_cast<int>(bi);
    }

    std::set<std::pair<int, int>> edges;
    if (std::isinf(p)) {
        for (std::size_t i = 0; i < n; ++i) edges.insert({static_cast<int>(i), best_x[i]});
        for (std::size_t j = 0; j < m; ++j) edges.insert({best_y[j], static_cast<int>(j)});
    } else {
        // Min edge cover = min over matchings of matched cost plus the
        // cheapest edge of every unmatched vertex.
        const std::size_t N = n + m;
        CostMatrix c(N);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) c(i, j) = std::pow(d[i][j], p);
            double mu = std::pow(d[i][static_cast<std::size_t>(best_x[i])], p);
            for (std::size_t j = m; j < N; ++j) c(i, j) = mu;
        }
        for (std::size_t j = 0; j < m; ++j) {
            double mu = std::pow(d[static_cast<std::size_t>(best_y[j])][j], p);
            for (std::size_t i = n; i < N; ++i) c(i, j) = mu;
        }
        auto a = solve_assignment(c);
        std::vector<char> y_done(m, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = static_cast<std::size_t>(a[i]);
            if (j < m) {
                edges.insert({static_cast<int>(i), static_cast<int>(j)});
                y_done[j] = 1;
            } else {
                edges.insert({static_cast<int>(i), best_x[i]});
            }
        }
        for (std::size_t j = 0; j < m; ++j)
            if (!y_done[j]) edges.insert({best_y[j], static_cast<int>(j)});
    }

    Correspondence out;
    out.pairs.assign(edges.begin(), edges.end());
    double acc = 0.0;
    for (auto [i, j] : out.pairs) {
        double v = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        acc = std::isinf(p) ? std::max(acc, v) : acc + std::pow(v, p);
    }
    out.cost = std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
    return out;
}

double p_hausdorff(const PointCloud& X, const PointCloud& Y, double p) {
    return p_hausdorff_correspondence(X, Y, p).cost;
}

bool is_generic(const PointCloud& X) {
    std::vector<double> ds;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j) ds.push_back(euclidean(X.points[i], X.points[j]));
    std::sort(ds.begin(), ds.end());
    return std::adjacent_find(ds.begin(), ds.end()) == ds.end() && (ds.empty() || ds.front() > 0.0);
}

PointCloud generic_perturb(const PointCloud& X, double eps, std::uint64_t seed) {
    if (!(eps > 0.0)) throw InputError("generic_perturb: eps must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const std::size_t d = X.dim();
    const double radius = eps / 2.0;
    for (int attempt = 0; attempt < 100; ++attempt) {
        PointCloud Y = X;
        for (auto& pt : Y.points) {
            std::vector<double> dir(d);
            double nrm = 0.0;
            do {
                nrm = 0.0;
                for (auto& x : dir) {
                    x = gauss(rng);
                    nrm += x * x;
                }
            } while (nrm == 0.0);
            nrm = std::sqrt(nrm);
            double r = radius * std::pow(unif(rng), 1.0 / static_cast<double>(d));
            for (std::size_t i = 0; i < d; ++i) pt[i] += r * dir[i] / nrm;
        }
        if (is_generic(Y)) return Y;
    }
    throw InputError("generic_perturb: no generic configuration after 100 attempts");
}

int count_adjacent_critical(const PointCloud& X, int vertex, int k) {
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= X.size())
        throw InputError("count_adjacent_critical: vertex out of range");
    if (k < 0) throw InputError("count_adjacent_critical: negative dimension");
    if (!is_generic(X)) throw InputError("count_adjacent_critical: pairwise distances are not distinct");
    RipsOptions opt;
    opt.max_dim = k;
    auto sf = rips_simplices(X, opt);
    const auto& K = sf.complex;
    auto pairing = reduce(K);

    auto incident = [&](int cell) {
        const auto& s = sf.simplices[static_cast<std::size_t>(cell)];
        if (s.size() < 2) return false;
        double best = -1.0;
        int a = -1, b = -1;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                double v = euclidean(X.points[static_cast<std::size_t>(s[i])], X.points[static_cast<std::size_t>(s[j])]);
                if (v > best) {
                    best = v;
                    a = s[i];
                    b = s[j];
                }
            }
        return a == vertex || b == vertex;
    };

    int count = 0;
    for (auto [c, d] : pairing.pairs) {
        if (K.cell(c).dim != k || K.value(c) == K.value(d)) continue;
        if (incident(c) || incident(d)) ++count;
    }
    for (int c : pairing.essential)
        if (K.cell(c).dim == k && incident(c)) ++count;
    return count;
}

}  // namespace wstab

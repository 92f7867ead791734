#pragma once

// Reference computations used only by the tests. None of them call into the
// solvers they check.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "wstab/wstab.hpp"

namespace oracle {

using Column = std::vector<std::uint8_t>;  // dense Z/2 vector

// Rank over Z/2 of a list of column vectors of equal length.
inline int gf2_rank(std::vector<Column> cols) {
    int rank = 0;
    if (cols.empty()) return 0;
    const std::size_t rows = cols.front().size();
    for (std::size_t r = 0; r < rows && rank < static_cast<int>(cols.size()); ++r) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < cols.size() && !cols[piv][r]) ++piv;
        if (piv == cols.size()) continue;
        std::swap(cols[piv], cols[static_cast<std::size_t>(rank)]);
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (c != static_cast<std::size_t>(rank) && cols[c][r])
                for (std::size_t k = 0; k < rows; ++k) cols[c][k] ^= cols[static_cast<std::size_t>(rank)][k];
        ++rank;
    }
    return rank;
}

// Basis of the kernel of the map given by columns (each column an image
// vector); returned vectors live in the domain (length = cols.size()).
inline std::vector<Column> gf2_kernel(const std::vector<Column>& cols, std::size_t rows) {
    const std::size_t n = cols.size();
    // augmented rows: [image | identity]
    std::vector<Column> aug(n, Column(rows + n, 0));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < rows; ++r) aug[c][r] = cols[c][r];
        aug[c][rows + c] = 1;
    }
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < n; ++r) {
        std::size_t piv = lead;
        while (piv < n && !aug[piv][r]) ++piv;
        if (piv == n) continue;
        std::swap(aug[piv], aug[lead]);
        for (std::size_t c = lead + 1; c < n; ++c)
            if (aug[c][r])
                for (std::size_t k = 0; k < rows + n; ++k) aug[c][k] ^= aug[lead][k];
        ++lead;
    }
    std::vector<Column> out;
    for (std::size_t c = lead; c < n; ++c) out.emplace_back(aug[c].begin() + static_cast<std::ptrdiff_t>(rows), aug[c].end());
    return out;
}

// Rank of H_k(K_a) -> H_k(K_b) for a <= b: rank[B_b | Z_a] - rank[B_b].
inline int persistent_betti(const wstab::FilteredComplex& K, int k, double a, double b) {
    const std::size_t n = K.size();
    std::vector<int> kcells_a, kcells;
    for (std::size_t i = 0; i < n; ++i)
        if (K.cell(static_cast<int>(i)).dim == k) kcells.push_back(static_cast<int>(i));
    std::map<int, std::size_t> row_of;
    std::vector<int> lower;
    for (std::size_t i = 0; i < n; ++i)
        if (K.cell(static_cast<int>(i)).dim == k - 1) {
            row_of[static_cast<int>(i)] = lower.size();
            lower.push_back(static_cast<int>(i));
        }
    std::map<int, std::size_t> kidx;
    for (std::size_t i = 0; i < kcells.size(); ++i) kidx[kcells[i]] = i;
    // Z_k(K_a)
    std::vector<int> in_a;
    for (int c : kcells)
        if (K.value(c) <= a) in_a.push_back(c);
    std::vector<Column> bd;
    for (int c : in_a) {
        Column col(lower.size(), 0);
        for (int f : K.cell(c).boundary) col[row_of[f]] ^= 1;
        bd.push_back(col);
    }
    std::vector<Column> Z;
    for (auto& z : gf2_kernel(bd, lower.size())) {
        Column full(kcells.size(), 0);
        for (std::size_t i = 0; i < in_a.size(); ++i)
            if (z[i]) full[kidx[in_a[i]]] = 1;
        Z.push_back(full);
    }
    // B_k(K_b)
    std::vector<Column> B;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = K.cell(static_cast<int>(i));
        if (c.dim != k + 1 || K.value(static_cast<int>(i)) > b) continue;
        Column col(kcells.size(), 0);
        for (int f : c.boundary) col[kidx[f]] ^= 1;
        B.push_back(col);
    }
    if (kcells.empty()) return 0;
    auto both = B;
    both.insert(both.end(), Z.begin(), Z.end());
    return gf2_rank(both) - gf2_rank(B);
}

// Diagram by inclusion-exclusion over persistent Betti numbers at the
// critical values. Ephemeral points are not produced.
inline wstab::PersistenceDiagram diagram_by_ranks(const wstab::FilteredComplex& K) {
    std::vector<double> v(K.values().begin(), K.values().end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<wstab::DiagramPoint> pts;
    const int top = K.max_dim();
    const std::size_t m = v.size();
    auto beta = [&](int k, std::ptrdiff_t i, std::ptrdiff_t j) {
        // i = -1 means "before everything"; j = m means "at infinity" (= last value)
        if (i < 0) return 0;
        double a = v[static_cast<std::size_t>(i)];
        double b = j >= static_cast<std::ptrdiff_t>(m) ? v.back() : v[static_cast<std::size_t>(j)];
        return persistent_betti(K, k, a, b);
    };
    for (int k = 0; k <= top; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            const auto I = static_cast<std::ptrdiff_t>(i);
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto J = static_cast<std::ptrdiff_t>(j);
                int mu = beta(k, I, J - 1) - beta(k, I - 1, J - 1) - beta(k, I, J) + beta(k, I - 1, J);
                for (int t = 0; t < mu; ++t) pts.push_back({k, v[i], v[j]});
            }
            int ess = beta(k, I, static_cast<std::ptrdiff_t>(m)) - beta(k, I - 1, static_cast<std::ptrdiff_t>(m));
            for (int t = 0; t < ess; ++t) pts.push_back({k, v[i], wstab::inf});
        }
    }
    return wstab::PersistenceDiagram(std::move(pts));
}

// Closed form of the sphere integral of |<w, e>|^p over S^{d-1}.
inline double sphere_constant_closed(double p, int d) {
    return 2.0 * std::pow(M_PI, (d - 1) / 2.0) * std::tgamma((p + 1.0) / 2.0) / std::tgamma((p + d) / 2.0);
}

// Minimum over all bijections, by permutation enumeration.
inline double pointset_wasserstein_brute(const wstab::PointCloud& X, const wstab::PointCloud& Y, double p) {
    std::vector<int> perm(X.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = wstab::inf;
    do {
        double s = 0.0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            double d = wstab::euclidean(X.points[i], Y.points[static_cast<std::size_t>(perm[i])]);
            s = std::isinf(p) ? std::max(s, d) : s + std::pow(d, p);
        }
        best = std::min(best, std::isinf(p) ? s : std::pow(s, 1.0 / p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Minimum over every relation covering both sides (n*m <= 16).
inline double p_hausdorff_brute(const wstab::PointCloud& X, const wstab::PointCloud& Y, double p) {
    const std::size_t n = X.size(), m = Y.size();
    double best = wstab::inf;
    for (std::uint32_t mask = 1; mask < (1u << (n * m)); ++mask) {
        std::vector<bool> cx(n), cy(m);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (mask & (1u << (i * m + j))) {
                    cx[i] = cy[j] = true;
                    double d = wstab::euclidean(X.points[i], Y.points[j]);
                    s = std::isinf(p) ? std::max(s, d) : s + std::pow(d, p);
                }
        if (std::count(cx.begin(), cx.end(), false) || std::count(cy.begin(), cy.end(), false)) continue;
        best = std::min(best, std::isinf(p) ? s : std::pow(s, 1.0 / p));
    }
    return best;
}

// k-th largest tent value at t.
inline double landscape_at(const wstab::PersistenceDiagram& X, int k, double t) {
    std::vector<double> v;
    for (const auto& pt : X.points) v.push_back(std::max(0.0, std::min(t - pt.birth, pt.death - t)));
    std::sort(v.begin(), v.end(), std::greater<>());
    return k <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k - 1)] : 0.0;
}

// Composite Simpson on a fine grid; finite diagrams only.
inline double landscape_distance_numeric(const wstab::PersistenceDiagram& X, const wstab::PersistenceDiagram& Y,
                                         double q, int steps = 20000) {
    double lo = wstab::inf, hi = -wstab::inf;
    for (const auto* D : {&X, &Y})
        for (const auto& pt : D->points) {
            lo = std::min(lo, pt.birth);
            hi = std::max(hi, pt.death);
        }
    if (lo > hi) return 0.0;
    const int levels = static_cast<int>(std::max(X.size(), Y.size()));
    double h = (hi - lo) / steps, acc = 0.0;
    for (int k = 1; k <= levels; ++k)
        for (int s = 0; s <= steps; ++s) {
            double t = lo + s * h;
            double w = (s == 0 || s == steps) ? 1.0 : (s % 2 ? 4.0 : 2.0);
            acc += w * std::pow(std::fabs(landscape_at(X, k, t) - landscape_at(Y, k, t)), q);
        }
    return std::pow(acc * h / 3.0, 1.0 / q);
}

// Midpoint rule for the exponentially weighted rank integral on [lo, hi]^2.
inline double rank_distance_numeric(const wstab::PersistenceDiagram& X, const wstab::PersistenceDiagram& Y, double q,
                                    double lo, double hi, int steps) {
    auto beta = [](const wstab::PersistenceDiagram& D, double a, double b) {
        int n = 0;
        for (const auto& pt : D.points)
            if (pt.birth <= a && pt.death > b) ++n;
        return n;
    };
    double h = (hi - lo) / steps, acc = 0.0;
    for (int i = 0; i < steps; ++i) {
        double x = lo + (i + 0.5) * h;
        for (int j = i; j < steps; ++j) {
            double y = lo + (j + 0.5) * h;
            double w = j == i ? 0.5 : 1.0;  // diagonal cells are half inside x < y
            double d = std::abs(beta(X, x, y) - beta(Y, x, y));
            acc += w * std::pow(d, q) * std::exp(-(y - x)) * h * h;
        }
    }
    return std::pow(acc, 1.0 / q);
}

}  // namespace oracle

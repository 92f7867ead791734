#pragma once

#include <random>
#include <vector>

#include "wstab/wstab.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Flag complex of a random graph on n vertices, up to triangles.
inline wstab::SimplicialComplex random_flag_complex(Rng& rng, int n, double edge_prob) {
    std::vector<std::vector<int>> gens;
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v) gens.push_back({v});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (uniform(rng, 0, 1) < edge_prob) {
                adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                gens.push_back({a, b});
            }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                    gens.push_back({a, b, c});
    return wstab::SimplicialComplex::closure(gens);
}

// Monotone values: lower star of integer vertex values (ties on purpose)
// plus optional non-negative bumps applied in dimension order.
inline wstab::FilteredComplex random_filtration(Rng& rng, const wstab::SimplicialComplex& K, bool bumps) {
    std::vector<double> vv(static_cast<std::size_t>(K.vertex_count()));
    for (auto& x : vv) x = uniform_int(rng, 0, 5);
    auto sf = wstab::lower_star_simplices(K, vv);
    std::vector<double> vals(sf.complex.values().begin(), sf.complex.values().end());
    if (bumps) {
        for (std::size_t i = 0; i < vals.size(); ++i) {
            for (int f : sf.complex.cell(static_cast<int>(i)).boundary) vals[i] = std::max(vals[i], vals[static_cast<std::size_t>(f)]);
            if (uniform(rng, 0, 1) < 0.3) vals[i] += uniform_int(rng, 1, 3);
        }
    }
    return sf.complex.with_values(std::move(vals));
}

inline wstab::PersistenceDiagram random_diagram(Rng& rng, int n, int dims = 1, bool integer = false) {
    std::vector<wstab::DiagramPoint> pts;
    for (int i = 0; i < n; ++i) {
        double b = integer ? uniform_int(rng, 0, 8) : uniform(rng, 0, 10);
        double l = integer ? uniform_int(rng, 0, 6) : uniform(rng, 0, 4);
        pts.push_back({uniform_int(rng, 0, dims - 1), b, b + l});
    }
    return wstab::PersistenceDiagram(std::move(pts));
}

inline wstab::PointCloud random_cloud(Rng& rng, int n, int d) {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) {
        std::vector<double> x(static_cast<std::size_t>(d));
        for (auto& c : x) c = uniform(rng, 0, 1);
        pts.push_back(std::move(x));
    }
    return wstab::PointCloud(std::move(pts));
}

}  // namespace gen

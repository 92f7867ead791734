#pragma once

#include <cstdint>
#include <vector>

#include "wstab/builders.hpp"

namespace wstab {

enum class SphereScheme { uniform_grid, fibonacci, random };

struct DirectionSample {
    std::vector<std::vector<double>> directions;
    std::vector<double> weights;  // sum to the area of S^{d-1}
};

/// Area of the unit sphere S^{k} in R^{k+1}; sphere_area(0) = 2.
double sphere_area(int k);

/// uniform_grid: equally spaced angles (d = 2) or equal-area bands (d = 3).
/// fibonacci: golden-angle spiral (d = 3). random: any d, seeded.
DirectionSample sphere_sample(int d, int n, SphereScheme scheme, std::uint64_t seed = 0);

/// C_{p,d} = 2 area(S^{d-2}) * int_0^{pi/2} cos^p sin^{d-2}, which equals
/// the sphere integral of |<w, e_1>|^p. Adaptive Simpson to 1e-13.
double sphere_constant(double p, int d);

/// Max relative error of the sample as a quadrature for |<w,u>|^p over the
/// given unit probes, against sphere_constant(p, d).
double quadrature_error(const DirectionSample& s, double p, const std::vector<std::vector<double>>& probes);

/// (sum_v weight_v W_p(Dgm h_v^f, Dgm h_v^g)^p)^(1/p), dims 0..d-1.
double pht_distance(const VertexEmbedding& f, const VertexEmbedding& g, double p, const DirectionSample& sample);

/// (C_K C_{p,d} sum_v ||f(v) - g(v)||^p)^(1/p).
double pht_bound(const VertexEmbedding& f, const VertexEmbedding& g, double p);

}  // namespace wstab

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wstab/builders.hpp"

namespace wstab {

struct Correspondence {
    std::vector<std::pair<int, int>> pairs;  // (index in X, index in Y)
    double cost = 0.0;
};

/// Min over bijections of (sum ||x - M(x)||^p)^(1/p); p = infinity gives
/// the bottleneck bijection. Requires |X| = |Y|.
double pointset_wasserstein(const PointCloud& X, const PointCloud& Y, double p);

/// Min over correspondences of (sum ||x - y||^p)^(1/p), solved as a
/// minimum-cost edge cover. p = infinity gives the Hausdorff distance.
Correspondence p_hausdorff_correspondence(const PointCloud& X, const PointCloud& Y, double p);
double p_hausdorff(const PointCloud& X, const PointCloud& Y, double p);

/// True when all pairwise distances are distinct (exact comparison).
bool is_generic(const PointCloud& X);

/// Uniform jitter in a ball of radius eps/2 around each point, resampled
/// until generic. Throws after 100 failed attempts.
PointCloud generic_perturb(const PointCloud& X, double eps, std::uint64_t seed);

/// Number of off-diagonal Dgm_k points of the Rips filtration whose creator
/// or destroyer attains its value on an edge incident to the vertex.
int count_adjacent_critical(const PointCloud& X, int vertex, int k);

}  // namespace wstab

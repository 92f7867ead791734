#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wstab/persistence.hpp"

namespace wstab {

/// Piecewise-linear levels; levels[k-1] holds the breakpoints (t, value) of
/// lambda(k, .), sorted by t. The function is zero outside the breakpoints.
struct Landscape {
    std::vector<std::vector<std::pair<double, double>>> levels;

    double operator()(int k, double t) const;
    std::size_t depth() const { return levels.size(); }
};

struct LandscapeOptions {
    int max_level = 0;               // 0: one level per point
    std::optional<double> horizon;   // essential bars end here
};

/// Uses every point of X regardless of dimension.
Landscape landscape(const PersistenceDiagram& X, const LandscapeOptions& opt = {});

/// Default horizon: 10 times the largest finite death (1 if none).
double default_horizon(const PersistenceDiagram& X);

/// (sum_k int |l1 - l2|^q)^(1/q), exact on each linear piece; q = inf gives
/// the sup.
double landscape_distance(const Landscape& a, const Landscape& b, double q);

/// beta(a, b) = #{points with birth <= a and death > b}, for one dimension.
class RankFunction {
public:
    RankFunction(const PersistenceDiagram& X, int dim);
    int operator()(double a, double b) const;
    const std::vector<DiagramPoint>& points() const { return pts_; }

private:
    std::vector<DiagramPoint> pts_;
};

/// (int_{x<y} |r1 - r2|^q e^{-(y-x)} dx dy)^(1/q), summed cell by cell over
/// the grid of all endpoints. +inf when the essential counts differ.
double rank_distance(const RankFunction& r1, const RankFunction& r2, double q);

using Kernel = std::function<std::vector<double>(const DiagramPoint&)>;

/// sum over points of kernel(point); out_dim fixes the length for X empty.
std::vector<double> linear_representation(const PersistenceDiagram& X, const Kernel& kernel, std::size_t out_dim);

/// Indicator of [birth, death) sampled on the grid.
Kernel betti_kernel(std::vector<double> grid);

std::vector<double> betti_curve(const PersistenceDiagram& X, const std::vector<double>& grid);

}  // namespace wstab

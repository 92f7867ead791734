#pragma once

#include <optional>
#include <vector>

#include "wstab/persistence.hpp"

namespace wstab {

/// Exponent p of the matching sum and exponent q of the ground norm on the
/// plane. q defaults to p.
struct MetricParams {
    double p = 2.0;
    std::optional<double> q;

    double q_value() const { return q.value_or(p); }
    void check() const;
};

/// One matched pair. x and y index X.points and Y.points; -1 stands for the
/// diagonal projection of the mate.
struct MatchEdge {
    int dim = 0;
    int x = -1;
    int y = -1;
    bool operator==(const MatchEdge&) const = default;
};

struct Matching {
    std::vector<MatchEdge> edges;
};

struct WassersteinResult {
    double cost = 0.0;
    Matching witness;
};

/// l_q distance between two points; essential points only match each other.
double point_distance(const DiagramPoint& x, const DiagramPoint& y, double q);

/// l_q distance from a point to its nearest diagonal point.
double diagonal_distance(const DiagramPoint& x, double q);

/// Total (p,q)-Wasserstein distance: per-dimension optimal matchings, p-sum
/// across dimensions (max for p = infinity). +inf when the essential counts
/// differ in some dimension. Zero-length points are harmless (cost 0).
WassersteinResult wasserstein(const PersistenceDiagram& X, const PersistenceDiagram& Y, const MetricParams& params);

double wasserstein_distance(const PersistenceDiagram& X, const PersistenceDiagram& Y, double p);

/// W_infinity with ground norm l_q (default l_inf), by threshold search.
double bottleneck(const PersistenceDiagram& X, const PersistenceDiagram& Y, double q = inf);
WassersteinResult bottleneck_matching(const PersistenceDiagram& X, const PersistenceDiagram& Y, double q = inf);

/// Cost of an explicit matching. Throws InputError if it is not a valid
/// matching between X and Y.
double matching_cost(const PersistenceDiagram& X, const PersistenceDiagram& Y, const Matching& m,
                     const MetricParams& params);

/// (sum of lengths^p)^(1/p) over all points; +inf with an essential point;
/// p = infinity gives the longest bar.
double norm(const PersistenceDiagram& X, double p);

/// Degree-k total persistence: sum of length^k.
double total_persistence(const PersistenceDiagram& X, double k);

inline constexpr int brute_force_cap = 12;

/// Exhaustive enumeration of partial matchings, dimension by dimension.
/// Independent of the assignment solver; at most brute_force_cap points of
/// X and Y together per dimension.
double brute_force_wasserstein(const PersistenceDiagram& X, const PersistenceDiagram& Y, const MetricParams& params);

}  // namespace wstab

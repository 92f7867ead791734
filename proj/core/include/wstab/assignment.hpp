#pragma once

#include <cstddef>
#include <vector>

namespace wstab {

/// Dense row-major square cost matrix.
class CostMatrix {
public:
    explicit CostMatrix(std::size_t n = 0) : n_(n), c_(n * n, 0.0) {}
    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return c_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> c_;
};

/// Exact minimum-cost perfect matching (Hungarian method with potentials).
/// Returns row_to_col. Entries must be finite.
std::vector<int> solve_assignment(const CostMatrix& cost);

/// Maximum bipartite matching size (Hopcroft-Karp). adj[i] lists the right
/// vertices adjacent to left vertex i.
int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right,
                           std::vector<int>* left_to_right = nullptr);

}  // namespace wstab

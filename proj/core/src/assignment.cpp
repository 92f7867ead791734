#include "wstab/assignment.hpp"

#include <cmath>
#include <limits>
#include <queue>

#include "wstab/error.hpp"

namespace wstab {

std::vector<int> solve_assignment(const CostMatrix& cost) {
    const std::size_t n = cost.size();
    if (n == 0) return {};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!std::isfinite(cost(i, j))) throw InvariantError("solve_assignment: non-finite cost");

    const double big = std::numeric_limits<double>::infinity();
    // 1-based potentials; column 0 is a virtual start.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), big);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            std::size_t i0 = p[j0], j1 = 0;
            double delta = big;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(n, -1);
    for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = static_cast<int>(j - 1);
    return row_to_col;
}

int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int n_right, std::vector<int>* left_to_right) {
    const int n_left = static_cast<int>(adj.size());
    std::vector<int> match_l(static_cast<std::size_t>(n_left), -1), match_r(static_cast<std::size_t>(n_right), -1);
    std::vector<int> dist(static_cast<std::size_t>(n_left));
    const int unreached = std::numeric_limits<int>::max();

    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (int i = 0; i < n_left; ++i) {
            if (match_l[static_cast<std::size_t>(i)] < 0) {
                dist[static_cast<std::size_t>(i)] = 0;
                q.push(i);
            } else {
                dist[static_cast<std::size_t>(i)] = unreached;
            }
        }
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j : adj[static_cast<std::size_t>(i)]) {
                int k = match_r[static_cast<std::size_t>(j)];
                if (k < 0) {
                    found = true;
                } else if (dist[static_cast<std::size_t>(k)] == unreached) {
                    dist[static_cast<std::size_t>(k)] = dist[static_cast<std::size_t>(i)] + 1;
                    q.push(k);
                }
            }
        }
        return found;
    };

    std::vector<std::size_t> it(static_cast<std::size_t>(n_left));
    auto dfs = [&](auto&& self, int i) -> bool {
        auto& pos = it[static_cast<std::size_t>(i)];
        const auto& nbrs = adj[static_cast<std::size_t>(i)];
        for (; pos < nbrs.size(); ++pos) {
            int j = nbrs[pos];
            int k = match_r[static_cast<std::size_t>(j)];
            if (k < 0 || (dist[static_cast<std::size_t>(k)] == dist[static_cast<std::size_t>(i)] + 1 && self(self, k))) {
                match_l[static_cast<std::size_t>(i)] = j;
                match_r[static_cast<std::size_t>(j)] = i;
                ++pos;
                return true;
            }
        }
        dist[static_cast<std::size_t>(i)] = unreached;
        return false;
    };

    int size = 0;
    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (int i = 0; i < n_left; ++i)
            if (match_l[static_cast<std::size_t>(i)] < 0 && dfs(dfs, i)) ++size;
    }
    if (left_to_right) *left_to_right = match_l;
    return size;
}

}  // namespace wstab

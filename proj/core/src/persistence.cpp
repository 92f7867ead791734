#include "wstab/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wstab/error.hpp"

namespace wstab {

namespace {

// Symmetric difference of two sorted columns, stored into a.
void add_column(std::vector<int>& a, const std::vector<int>& b, std::vector<int>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
    a.swap(scratch);
}

}  // namespace

PersistenceDiagram::PersistenceDiagram(std::vector<DiagramPoint> pts) : points(std::move(pts)) {
    for (const auto& pt : points) {
        if (pt.dim < 0) throw InputError("diagram: negative dimension");
        if (!(pt.birth <= pt.death)) throw InputError("diagram: birth > death");
        if (pt.birth == inf || pt.birth == -inf) throw InputError("diagram: infinite birth");
    }
    canonicalize();
}

int PersistenceDiagram::max_dim() const {
    int d = -1;
    for (const auto& pt : points) d = std::max(d, pt.dim);
    return d;
}

void PersistenceDiagram::canonicalize() { std::sort(points.begin(), points.end()); }

PersistenceDiagram PersistenceDiagram::in_dim(int dim) const {
    PersistenceDiagram out;
    for (const auto& pt : points)
        if (pt.dim == dim) out.points.push_back(pt);
    return out;
}

PersistenceDiagram PersistenceDiagram::without_ephemeral() const {
    PersistenceDiagram out;
    for (const auto& pt : points)
        if (pt.birth != pt.death) out.points.push_back(pt);
    return out;
}

PersistenceDiagram PersistenceDiagram::finite_part() const {
    PersistenceDiagram out;
    for (const auto& pt : points)
        if (!pt.essential()) out.points.push_back(pt);
    return out;
}

Reduction reduce_full(const FilteredComplex& complex, const TieBreak& tiebreak) {
    Reduction red;
    red.order = total_order(complex, tiebreak);
    const std::size_t n = complex.size();
    red.position.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) red.position[static_cast<std::size_t>(red.order.order[i])] = static_cast<int>(i);

    // Work in positions; convert back to ids at the end.
    std::vector<std::vector<int>> r(n), v(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Cell& c = complex.cell(red.order.order[j]);
        for (int f : c.boundary) r[j].push_back(red.position[static_cast<std::size_t>(f)]);
        std::sort(r[j].begin(), r[j].end());
        // mod-2 cancellation of repeated faces
        std::vector<int> dedup;
        for (std::size_t k = 0; k < r[j].size();) {
            std::size_t m = k;
            while (m < r[j].size() && r[j][m] == r[j][k]) ++m;
            if ((m - k) % 2 == 1) dedup.push_back(r[j][k]);
            k = m;
        }
        r[j].swap(dedup);
        v[j] = {static_cast<int>(j)};
    }

    std::vector<int> low_owner(n, -1);
    std::vector<int> scratch;
    std::vector<char> paired(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        while (!r[j].empty()) {
            int low = r[j].back();
            int k = low_owner[static_cast<std::size_t>(low)];
            if (k < 0) break;
            add_column(r[j], r[static_cast<std::size_t>(k)], scratch);
            add_column(v[j], v[static_cast<std::size_t>(k)], scratch);
        }
        if (!r[j].empty()) {
            int low = r[j].back();
            low_owner[static_cast<std::size_t>(low)] = static_cast<int>(j);
            paired[static_cast<std::size_t>(low)] = 1;
            paired[j] = 1;
            red.pairing.pairs.emplace_back(red.order.order[static_cast<std::size_t>(low)], red.order.order[j]);
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!paired[j]) red.pairing.essential.push_back(red.order.order[j]);

    red.r.resize(n);
    red.v.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t id = static_cast<std::size_t>(red.order.order[j]);
        for (int x : r[j]) red.r[id].push_back(red.order.order[static_cast<std::size_t>(x)]);
        for (int x : v[j]) red.v[id].push_back(red.order.order[static_cast<std::size_t>(x)]);
    }
    return red;
}

PersistencePairing reduce(const FilteredComplex& complex, const TieBreak& tiebreak) {
    return reduce_full(complex, tiebreak).pairing;
}

PersistenceDiagram diagram(const PersistencePairing& pairing, const FilteredComplex& complex, bool keep_ephemeral) {
    PersistenceDiagram out;
    for (auto [c, d] : pairing.pairs) {
        double b = complex.value(c), e = complex.value(d);
        if (b == e && !keep_ephemeral) continue;
        out.points.push_back({complex.cell(c).dim, b, e});
    }
    for (int c : pairing.essential) out.points.push_back({complex.cell(c).dim, complex.value(c), inf});
    out.canonicalize();
    return out;
}

PersistenceDiagram persistence_diagram(const FilteredComplex& complex, bool keep_ephemeral) {
    return diagram(reduce(complex), complex, keep_ephemeral);
}

PersistenceDiagram presentation_barcode(const Presentation& p, int dim) {
    const std::size_t ng = p.generator_births.size();
    const std::size_t nr = p.relation_values.size();
    if (p.columns.size() != nr) throw InputError("presentation: column count differs from relation count");

    // Rows ranked by (birth, index); the pivot is the highest rank.
    std::vector<int> gen_order(ng);
    std::iota(gen_order.begin(), gen_order.end(), 0);
    std::stable_sort(gen_order.begin(), gen_order.end(), [&](int a, int b) {
        return p.generator_births[static_cast<std::size_t>(a)] < p.generator_births[static_cast<std::size_t>(b)];
    });
    std::vector<int> rank(ng);
    for (std::size_t i = 0; i < ng; ++i) rank[static_cast<std::size_t>(gen_order[i])] = static_cast<int>(i);

    std::vector<std::vector<int>> cols(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        for (int g : p.columns[r]) {
            if (g < 0 || static_cast<std::size_t>(g) >= ng)
                throw InputError("presentation: relation " + std::to_string(r) + " references unknown generator " +
                                 std::to_string(g));
            if (p.generator_births[static_cast<std::size_t>(g)] > p.relation_values[r])
                throw InputError("presentation: relation " + std::to_string(r) + " at " +
                                 std::to_string(p.relation_values[r]) + " hits generator " + std::to_string(g) +
                                 " born later");
            cols[r].push_back(rank[static_cast<std::size_t>(g)]);
        }
        std::sort(cols[r].begin(), cols[r].end());
        std::vector<int> dedup;
        for (std::size_t k = 0; k < cols[r].size();) {
            std::size_t m = k;
            while (m < cols[r].size() && cols[r][m] == cols[r][k]) ++m;
            if ((m - k) % 2 == 1) dedup.push_back(cols[r][k]);
            k = m;
        }
        cols[r].swap(dedup);
    }

    std::vector<int> rel_order(nr);
    std::iota(rel_order.begin(), rel_order.end(), 0);
    std::stable_sort(rel_order.begin(), rel_order.end(), [&](int a, int b) {
        return p.relation_values[static_cast<std::size_t>(a)] < p.relation_values[static_cast<std::size_t>(b)];
    });

    std::vector<int> owner(ng, -1);
    std::vector<char> killed(ng, 0);
    std::vector<int> scratch;
    PersistenceDiagram out;
    for (int r : rel_order) {
        auto& col = cols[static_cast<std::size_t>(r)];
        while (!col.empty()) {
            int k = owner[static_cast<std::size_t>(col.back())];
            if (k < 0) break;
            add_column(col, cols[static_cast<std::size_t>(k)], scratch);
        }
        if (col.empty()) continue;
        int piv = col.back();
        owner[static_cast<std::size_t>(piv)] = r;
        killed[static_cast<std::size_t>(piv)] = 1;
        int g = gen_order[static_cast<std::size_t>(piv)];
        out.points.push_back({dim, p.generator_births[static_cast<std::size_t>(g)], p.relation_values[static_cast<std::size_t>(r)]});
    }
    for (std::size_t i = 0; i < ng; ++i)
        if (!killed[i]) out.points.push_back({dim, p.generator_births[static_cast<std::size_t>(gen_order[i])], inf});
    out.canonicalize();
    return out;
}

Presentation presentation_from_reduction(const Reduction& red, const FilteredComplex& complex, int dim) {
    Presentation pres;
    std::vector<int> gen_of_cell(complex.size(), -1);
    for (int id : red.order.order) {
        const Cell& c = complex.cell(id);
        if (c.dim != dim || !red.r[static_cast<std::size_t>(id)].empty()) continue;
        gen_of_cell[static_cast<std::size_t>(id)] = static_cast<int>(pres.generator_births.size());
        pres.generator_births.push_back(complex.value(id));
    }
    auto by_position = [&](int a, int b) {
        return red.position[static_cast<std::size_t>(a)] < red.position[static_cast<std::size_t>(b)];
    };
    std::vector<int> scratch;
    for (int id : red.order.order) {
        const Cell& c = complex.cell(id);
        if (c.dim != dim + 1) continue;
        std::vector<int> chain = c.boundary;
        std::sort(chain.begin(), chain.end(), by_position);
        std::vector<int> col;
        while (!chain.empty()) {
            int last = chain.back();
            int g = gen_of_cell[static_cast<std::size_t>(last)];
            if (g < 0) throw InvariantError("presentation_from_reduction: boundary is not in the cycle basis");
            col.push_back(g);
            std::vector<int> cyc = red.v[static_cast<std::size_t>(last)];
            std::sort(cyc.begin(), cyc.end(), by_position);
            scratch.clear();
            std::set_symmetric_difference(chain.begin(), chain.end(), cyc.begin(), cyc.end(),
                                          std::back_inserter(scratch), by_position);
            chain.swap(scratch);
        }
        pres.relation_values.push_back(complex.value(id));
        pres.columns.push_back(std::move(col));
    }
    return pres;
}

int sublevel_betti(const FilteredComplex& complex, int dim, double alpha) {
    // rank of the boundary map from dimension k to k-1 on the sublevel set
    auto boundary_rank = [&](int k) {
        if (k <= 0) return 0;
        std::vector<std::vector<int>> cols;
        for (std::size_t i = 0; i < complex.size(); ++i) {
            int id = static_cast<int>(i);
            if (complex.cell(id).dim != k || complex.value(id) > alpha) continue;
            std::vector<int> col = complex.cell(id).boundary;
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        // Gaussian elimination over Z/2 with pivot = largest index
        std::vector<std::vector<int>> basis;  // indexed by pivot row
        std::vector<int> pivot_of(complex.size(), -1);
        std::vector<int> scratch;
        int rank = 0;
        for (auto& col : cols) {
            while (!col.empty() && pivot_of[static_cast<std::size_t>(col.back())] >= 0)
                add_column(col, basis[static_cast<std::size_t>(pivot_of[static_cast<std::size_t>(col.back())])], scratch);
            if (col.empty()) continue;
            pivot_of[static_cast<std::size_t>(col.back())] = static_cast<int>(basis.size());
            basis.push_back(col);
            ++rank;
        }
        return rank;
    };
    int cells = 0;
    for (std::size_t i = 0; i < complex.size(); ++i)
        if (complex.cell(static_cast<int>(i)).dim == dim && complex.value(static_cast<int>(i)) <= alpha) ++cells;
    return cells - boundary_rank(dim) - boundary_rank(dim + 1);
}

int diagram_betti(const PersistenceDiagram& dgm, int dim, double alpha) {
    int n = 0;
    for (const auto& pt : dgm.points)
        if (pt.dim == dim && pt.birth <= alpha && alpha < pt.death) ++n;
    return n;
}

}  // namespace wstab

#include "wstab/builders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "wstab/error.hpp"

namespace wstab {

GrayImage::GrayImage(std::vector<std::size_t> shp, std::vector<double> vals)
    : shape(std::move(shp)), values(std::move(vals)) {
    if (shape.empty() || shape.size() > 3) throw InputError("image: dimension must be 1, 2 or 3");
    std::size_t total = 1;
    for (auto e : shape) {
        if (e == 0) throw InputError("image: zero extent");
        total *= e;
    }
    if (total != values.size())
        throw InputError("image: expected " + std::to_string(total) + " values, got " + std::to_string(values.size()));
    for (double v : values)
        if (!std::isfinite(v)) throw InputError("image: non-finite pixel value");
}

PointCloud::PointCloud(std::vector<std::vector<double>> pts) : points(std::move(pts)) {
    for (const auto& p : points) {
        if (p.size() != points.front().size()) throw InputError("point cloud: ragged coordinates");
        if (p.empty()) throw InputError("point cloud: zero-dimensional point");
        for (double x : p)
            if (!std::isfinite(x)) throw InputError("point cloud: non-finite coordinate");
    }
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {

bool simplex_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

SimplexFiltration from_simplices(std::vector<std::vector<int>> simplices, const std::vector<double>& values_in) {
    std::vector<std::size_t> order(simplices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return simplex_less(simplices[a], simplices[b]); });
    SimplexFiltration out;
    std::vector<double> values(simplices.size());
    out.simplices.resize(simplices.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.simplices[i] = std::move(simplices[order[i]]);
        values[i] = values_in[order[i]];
    }
    std::unordered_map<std::vector<int>, int, VecHash> index;
    index.reserve(out.simplices.size());
    for (std::size_t i = 0; i < out.simplices.size(); ++i) index.emplace(out.simplices[i], static_cast<int>(i));
    std::vector<Cell> cells(out.simplices.size());
    std::vector<int> face;
    for (std::size_t i = 0; i < out.simplices.size(); ++i) {
        const auto& s = out.simplices[i];
        cells[i].id = static_cast<int>(i);
        cells[i].dim = static_cast<int>(s.size()) - 1;
        if (s.size() < 2) continue;
        for (std::size_t k = 0; k < s.size(); ++k) {
            face.clear();
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != k) face.push_back(s[j]);
            auto it = index.find(face);
            if (it == index.end()) throw InputError("simplicial complex is not closed under faces");
            cells[i].boundary.push_back(it->second);
        }
    }
    out.complex = FilteredComplex(std::move(cells), std::move(values));
    return out;
}

// Cells of the cubical grid with the given extents, id = linear index.
struct Grid {
    std::vector<std::size_t> ext, stride;
    std::size_t total = 1;

    explicit Grid(std::vector<std::size_t> e) : ext(std::move(e)), stride(ext.size()) {
        for (std::size_t i = ext.size(); i-- > 0;) {
            stride[i] = total;
            total *= ext[i];
        }
    }
    void decode(std::size_t id, std::vector<std::size_t>& c) const {
        c.resize(ext.size());
        for (std::size_t i = 0; i < ext.size(); ++i) {
            c[i] = id / stride[i];
            id %= stride[i];
        }
    }
    std::vector<Cell> cells() const {
        std::vector<Cell> out(total);
        std::vector<std::size_t> c;
        for (std::size_t id = 0; id < total; ++id) {
            decode(id, c);
            Cell& cell = out[id];
            cell.id = static_cast<int>(id);
            for (std::size_t i = 0; i < ext.size(); ++i) {
                if (c[i] % 2 == 0) continue;
                ++cell.dim;
                cell.boundary.push_back(static_cast<int>(id - stride[i]));
                cell.boundary.push_back(static_cast<int>(id + stride[i]));
            }
            std::sort(cell.boundary.begin(), cell.boundary.end());
        }
        return out;
    }
};

std::size_t pixel_index(const GrayImage& img, const std::vector<std::size_t>& px) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < px.size(); ++i) idx = idx * img.shape[i] + px[i];
    return idx;
}

}  // namespace

SimplicialComplex SimplicialComplex::closure(const std::vector<std::vector<int>>& generators) {
    std::set<std::vector<int>> all;
    for (auto g : generators) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        if (g.empty()) continue;
        if (g.front() < 0) throw InputError("simplicial complex: negative vertex index");
        if (g.size() > 20) throw InputError("simplicial complex: simplex too large");
        const std::size_t n = g.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) s.push_back(g[i]);
            all.insert(std::move(s));
        }
    }
    SimplicialComplex K;
    K.simplices.assign(all.begin(), all.end());
    std::stable_sort(K.simplices.begin(), K.simplices.end(), simplex_less);
    return K;
}

int SimplicialComplex::vertex_count() const {
    int n = 0;
    for (const auto& s : simplices)
        for (int v : s) n = std::max(n, v + 1);
    return n;
}

int SimplicialComplex::max_vertex_star() const {
    std::vector<int> count(static_cast<std::size_t>(vertex_count()), 0);
    for (const auto& s : simplices)
        for (int v : s) ++count[static_cast<std::size_t>(v)];
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

FilteredComplex cubical_top(const GrayImage& img) {
    std::vector<std::size_t> ext;
    for (auto e : img.shape) ext.push_back(2 * e + 1);
    Grid g(ext);
    auto cells = g.cells();
    std::vector<double> values(g.total);
    std::vector<std::size_t> c, px(img.dim());
    const std::size_t d = img.dim();
    for (std::size_t id = 0; id < g.total; ++id) {
        g.decode(id, c);
        // even coordinates choose a neighbouring pixel on either side
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < d; ++i)
            if (c[i] % 2 == 0) free.push_back(i);
        double best = inf;
        for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
            bool ok = true;
            for (std::size_t i = 0; i < d; ++i) px[i] = c[i];
            for (std::size_t k = 0; k < free.size(); ++k) {
                std::size_t i = free[k];
                if (mask & (std::size_t{1} << k)) {
                    if (c[i] + 1 >= ext[i]) ok = false;
                    px[i] = c[i] + 1;
                } else {
                    if (c[i] == 0) ok = false;
                    px[i] = c[i] - 1;
                }
            }
            if (!ok) continue;
            for (std::size_t i = 0; i < d; ++i) px[i] /= 2;
            best = std::min(best, img.values[pixel_index(img, px)]);
        }
        values[id] = best;
    }
    return FilteredComplex(std::move(cells), std::move(values));
}

FilteredComplex cubical_vertex(const GrayImage& img) {
    std::vector<std::size_t> ext;
    for (auto e : img.shape) ext.push_back(2 * e - 1);
    Grid g(ext);
    auto cells = g.cells();
    std::vector<double> values(g.total);
    std::vector<std::size_t> c, px(img.dim());
    const std::size_t d = img.dim();
    for (std::size_t id = 0; id < g.total; ++id) {
        g.decode(id, c);
        std::vector<std::size_t> odd;
        for (std::size_t i = 0; i < d; ++i)
            if (c[i] % 2 == 1) odd.push_back(i);
        double best = -inf;
        for (std::size_t mask = 0; mask < (std::size_t{1} << odd.size()); ++mask) {
            for (std::size_t i = 0; i < d; ++i) px[i] = c[i];
            for (std::size_t k = 0; k < odd.size(); ++k) {
                std::size_t i = odd[k];
                px[i] = (mask & (std::size_t{1} << k)) ? c[i] + 1 : c[i] - 1;
            }
            for (std::size_t i = 0; i < d; ++i) px[i] /= 2;
            best = std::max(best, img.values[pixel_index(img, px)]);
        }
        values[id] = best;
    }
    return FilteredComplex(std::move(cells), std::move(values));
}

SimplexFiltration lower_star_simplices(const SimplicialComplex& K, const std::vector<double>& vertex_values) {
    if (static_cast<int>(vertex_values.size()) < K.vertex_count())
        throw InputError("lower_star: " + std::to_string(vertex_values.size()) + " vertex values for " +
                         std::to_string(K.vertex_count()) + " vertices");
    std::vector<double> values;
    values.reserve(K.simplices.size());
    for (const auto& s : K.simplices) {
        double v = -inf;
        for (int x : s) v = std::max(v, vertex_values[static_cast<std::size_t>(x)]);
        values.push_back(v);
    }
    return from_simplices(K.simplices, values);
}

FilteredComplex lower_star(const SimplicialComplex& K, const std::vector<double>& vertex_values) {
    return lower_star_simplices(K, vertex_values).complex;
}

SimplexFiltration rips_simplices(const PointCloud& X, const RipsOptions& opt) {
    const int n = static_cast<int>(X.size());
    if (opt.max_dim < 0) throw InputError("rips: max_dim must be non-negative");
    if (opt.full && n > 20) throw InputError("rips: the full complex is capped at 20 points");
    const std::size_t max_size = opt.full ? static_cast<std::size_t>(n) : static_cast<std::size_t>(opt.max_dim) + 2;

    std::vector<double> D(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    auto dist = [&](int i, int j) -> double& { return D[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
    std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = euclidean(X.points[static_cast<std::size_t>(i)], X.points[static_cast<std::size_t>(j)]);
            dist(i, j) = dist(j, i) = d;
            if (opt.full || d <= opt.max_radius) up[static_cast<std::size_t>(i)].push_back(j);
        }

    std::vector<std::vector<int>> simplices;
    std::vector<double> values;
    std::vector<int> cur;
    std::function<void(const std::vector<int>&, double)> extend = [&](const std::vector<int>& cand, double val) {
        simplices.push_back(cur);
        values.push_back(val);
        if (cur.size() >= max_size) return;
        for (std::size_t k = 0; k < cand.size(); ++k) {
            int v = cand[k];
            double nv = val;
            for (int u : cur) nv = std::max(nv, dist(u, v));
            std::vector<int> next;
            const auto& nb = up[static_cast<std::size_t>(v)];
            std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(k) + 1, cand.end(), nb.begin(), nb.end(),
                                  std::back_inserter(next));
            cur.push_back(v);
            extend(next, nv);
            cur.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        cur = {v};
        simplices.push_back(cur);
        values.push_back(0.0);
        if (max_size < 2) continue;
        const auto& nb = up[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < nb.size(); ++k) {
            int w = nb[k];
            std::vector<int> next;
            const auto& nw = up[static_cast<std::size_t>(w)];
            std::set_intersection(nb.begin() + static_cast<std::ptrdiff_t>(k) + 1, nb.end(), nw.begin(), nw.end(),
                                  std::back_inserter(next));
            cur.push_back(w);
            extend(next, dist(v, w));
            cur.pop_back();
        }
    }
    return from_simplices(std::move(simplices), values);
}

FilteredComplex rips(const PointCloud& X, int max_dim, double max_radius) {
    RipsOptions opt;
    opt.max_dim = max_dim;
    opt.max_radius = max_radius;
    return rips_simplices(X, opt).complex;
}

FilteredComplex height_filtration(const VertexEmbedding& emb, const std::vector<double>& direction) {
    double nrm = 0.0;
    for (double x : direction) nrm += x * x;
    if (std::fabs(std::sqrt(nrm) - 1.0) > 1e-9) throw InputError("height_filtration: direction is not a unit vector");
    std::vector<double> h;
    h.reserve(emb.coords.size());
    for (const auto& x : emb.coords) {
        if (x.size() != direction.size()) throw InputError("height_filtration: coordinate dimension mismatch");
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * direction[i];
        h.push_back(s);
    }
    return lower_star(emb.complex, h);
}

}  // namespace wstab

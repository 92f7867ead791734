#include "wstab/filtered_complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "wstab/error.hpp"

namespace wstab {

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::monotonicity:
        os << "monotonicity: face " << face << " has larger value than cell " << cell;
        break;
    case Kind::duplicate_boundary:
        os << "duplicate boundary: face " << face << " listed twice in cell " << cell;
        break;
    case Kind::face_dimension:
        os << "face dimension: face " << face << " of cell " << cell << " is not of codimension 1";
        break;
    case Kind::unknown_face:
        os << "unknown face: cell " << cell << " references id " << face;
        break;
    case Kind::boundary_not_cycle:
        os << "boundary of boundary of cell " << cell << " is nonzero (first survivor " << face << ")";
        break;
    }
    return os.str();
}

FilteredComplex::FilteredComplex(std::vector<Cell> cells, std::vector<double> values) : values_(std::move(values)) {
    if (cells.size() != values_.size())
        throw InputError("filtered complex: " + std::to_string(cells.size()) + " cells but " +
                         std::to_string(values_.size()) + " values");
    std::vector<Cell> sorted(cells.size());
    std::vector<char> seen(cells.size(), 0);
    std::vector<double> reordered(values_.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        int id = cells[i].id;
        if (id < 0 || static_cast<std::size_t>(id) >= cells.size() || seen[static_cast<std::size_t>(id)])
            throw InputError("filtered complex: cell ids must be exactly 0.." + std::to_string(cells.size() - 1) +
                             " (offending id " + std::to_string(id) + ")");
        if (cells[i].dim < 0) throw InputError("filtered complex: negative dimension on cell " + std::to_string(id));
        if (!std::isfinite(values_[i]))
            throw InputError("filtered complex: non-finite value on cell " + std::to_string(id));
        seen[static_cast<std::size_t>(id)] = 1;
        reordered[static_cast<std::size_t>(id)] = values_[i];
        sorted[static_cast<std::size_t>(id)] = std::move(cells[i]);
    }
    values_ = std::move(reordered);
    cells_ = std::make_shared<const std::vector<Cell>>(std::move(sorted));
}

int FilteredComplex::max_dim() const {
    int d = -1;
    for (const auto& c : *cells_) d = std::max(d, c.dim);
    return d;
}

FilteredComplex FilteredComplex::with_values(std::vector<double> values) const {
    if (values.size() != values_.size()) throw InputError("with_values: size mismatch");
    for (double v : values)
        if (!std::isfinite(v)) throw InputError("with_values: non-finite value");
    FilteredComplex out;
    out.cells_ = cells_;
    out.values_ = std::move(values);
    return out;
}

bool FilteredComplex::same_structure(const FilteredComplex& other) const {
    if (cells_ == other.cells_) return true;
    if (cells_->size() != other.cells_->size()) return false;
    for (std::size_t i = 0; i < cells_->size(); ++i) {
        const Cell& a = (*cells_)[i];
        const Cell& b = (*other.cells_)[i];
        if (a.dim != b.dim || a.boundary != b.boundary) return false;
    }
    return true;
}

std::vector<Violation> validate(const FilteredComplex& complex) {
    std::vector<Violation> out;
    const int n = static_cast<int>(complex.size());
    std::vector<int> mark(complex.size(), -1);
    for (int i = 0; i < n; ++i) {
        const Cell& c = complex.cell(i);
        bool faces_known = true;
        for (int f : c.boundary) {
            if (f < 0 || f >= n) {
                out.push_back({Violation::Kind::unknown_face, i, f});
                faces_known = false;
                continue;
            }
            if (mark[static_cast<std::size_t>(f)] == i)
                out.push_back({Violation::Kind::duplicate_boundary, i, f});
            mark[static_cast<std::size_t>(f)] = i;
            if (complex.cell(f).dim != c.dim - 1) out.push_back({Violation::Kind::face_dimension, i, f});
            if (complex.value(f) > complex.value(i)) out.push_back({Violation::Kind::monotonicity, i, f});
        }
        if (!faces_known || c.dim < 2) continue;
        std::vector<int> bb;
        for (int f : c.boundary)
            for (int g : complex.cell(f).boundary) bb.push_back(g);
        std::sort(bb.begin(), bb.end());
        for (std::size_t k = 0; k < bb.size();) {
            std::size_t j = k;
            while (j < bb.size() && bb[j] == bb[k]) ++j;
            if ((j - k) % 2 == 1) {
                out.push_back({Violation::Kind::boundary_not_cycle, i, bb[k]});
                break;
            }
            k = j;
        }
    }
    return out;
}

bool tiebreak_by_id(const Cell& a, const Cell& b) { return a.id < b.id; }

FiltrationOrder total_order(const FilteredComplex& complex, const TieBreak& tiebreak) {
    for (const auto& v : validate(complex))
        if (v.kind == Violation::Kind::monotonicity || v.kind == Violation::Kind::unknown_face)
            throw InputError("total_order: " + v.describe());
    FiltrationOrder out;
    out.order.resize(complex.size());
    std::iota(out.order.begin(), out.order.end(), 0);
    std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        double va = complex.value(a), vb = complex.value(b);
        if (va != vb) return va < vb;
        const Cell& ca = complex.cell(a);
        const Cell& cb = complex.cell(b);
        if (ca.dim != cb.dim) return ca.dim < cb.dim;
        if (tiebreak(ca, cb)) return true;
        if (tiebreak(cb, ca)) return false;
        return a < b;
    });
    return out;
}

FilteredComplex interpolate(const FilteredComplex& f, const FilteredComplex& g, double t) {
    if (!f.same_structure(g)) throw InputError("interpolate: mismatched cell structures");
    if (!(t >= 0.0 && t <= 1.0)) throw InputError("interpolate: t outside [0,1]");
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        int id = static_cast<int>(i);
        if (t == 0.0)
            v[i] = f.value(id);
        else if (t == 1.0)
            v[i] = g.value(id);
        else
            v[i] = (1.0 - t) * f.value(id) + t * g.value(id);
    }
    return f.with_values(std::move(v));
}

std::vector<double> crossing_times(const FilteredComplex& f, const FilteredComplex& g) {
    if (!f.same_structure(g)) throw InputError("crossing_times: mismatched cell structures");
    const int n = static_cast<int>(f.size());
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double df = f.value(i) - f.value(j);
            double dg = g.value(i) - g.value(j);
            if (df == 0.0 && dg == 0.0) continue;
            // (1-t) df + t dg = 0
            double denom = df - dg;
            if (denom == 0.0) continue;
            double t = df / denom;
            if (t > 0.0 && t < 1.0) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double cellwise_distance(const FilteredComplex& f, const FilteredComplex& g, double p) {
    if (!f.same_structure(g)) throw InputError("cellwise_distance: mismatched cell structures");
    if (!(p >= 1.0)) throw InputError("cellwise_distance: p must be >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        double d = std::fabs(f.value(static_cast<int>(i)) - g.value(static_cast<int>(i)));
        if (std::isinf(p))
            acc = std::max(acc, d);
        else
            acc += std::pow(d, p);
    }
    return std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
}

}  // namespace wstab

#include "wstab/module_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wstab/error.hpp"

namespace wstab {

std::string to_string(Decoration d) {
    switch (d) {
    case Decoration::oo: return "oo";
    case Decoration::oc: return "oc";
    case Decoration::co: return "co";
    case Decoration::cc: return "cc";
    }
    return "oc";
}

Decoration parse_decoration(const std::string& s) {
    if (s == "oo") return Decoration::oo;
    if (s == "oc") return Decoration::oc;
    if (s == "co") return Decoration::co;
    if (s == "cc") return Decoration::cc;
    throw InputError("unknown interval decoration '" + s + "'");
}

IntervalModule::IntervalModule(std::vector<Interval> iv) : intervals(std::move(iv)) {
    for (const auto& x : intervals) {
        if (!(x.birth <= x.death) || !std::isfinite(x.birth))
            throw InputError("interval module: invalid interval");
    }
}

PersistenceDiagram IntervalModule::to_diagram(int dim) const {
    std::vector<DiagramPoint> pts;
    pts.reserve(intervals.size());
    for (const auto& x : intervals) pts.push_back({dim, x.birth, x.death});
    return PersistenceDiagram(std::move(pts));
}

IntervalModule IntervalModule::from_diagram(const PersistenceDiagram& d, Decoration deco) {
    IntervalModule m;
    for (const auto& pt : d.points) m.intervals.push_back({pt.birth, pt.death, deco});
    return m;
}

IntervalModule IntervalModule::operator+(const IntervalModule& o) const {
    IntervalModule m = *this;
    m.intervals.insert(m.intervals.end(), o.intervals.begin(), o.intervals.end());
    return m;
}

double module_norm(const IntervalModule& M, double p) { return norm(M.to_diagram(), p); }

namespace {

void check_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw InputError("interpolation: t outside [0,1]");
}

void check_finite(const IntervalModule& M) {
    for (const auto& x : M.intervals)
        if (x.infinite()) throw InputError("interpolation: an infinite interval cannot be interpolated to zero");
}

}  // namespace

IntervalModule death_birth_interpolation(const IntervalModule& M, double t) {
    check_t(t);
    check_finite(M);
    IntervalModule out = M;
    for (auto& x : out.intervals) x.death = t == 0.0 ? x.death : x.birth + (1.0 - t) * (x.death - x.birth);
    return out;
}

IntervalModule birth_death_interpolation(const IntervalModule& M, double t) {
    check_t(t);
    check_finite(M);
    IntervalModule out = M;
    for (auto& x : out.intervals) {
        if (t == 0.0) continue;
        x.birth = t == 1.0 ? x.death : (1.0 - t) * x.birth + t * x.death;
    }
    return out;
}

InterpolatingObject matching_to_interpolating_object(const IntervalModule& A, const IntervalModule& B,
                                                     const Matching& m) {
    std::vector<int> ac(A.size(), 0), bc(B.size(), 0);
    InterpolatingObject obj;
    auto push = [](IntervalModule& M, double b, double d) { M.intervals.push_back({b, d, Decoration::oc}); };
    for (const auto& e : m.edges) {
        if (e.x < -1 || e.x >= static_cast<int>(A.size()) || e.y < -1 || e.y >= static_cast<int>(B.size()) ||
            (e.x < 0 && e.y < 0))
            throw InputError("interpolating object: matching edge out of range");
        Interval a, b;
        if (e.x >= 0) {
            ++ac[static_cast<std::size_t>(e.x)];
            a = A.intervals[static_cast<std::size_t>(e.x)];
        }
        if (e.y >= 0) {
            ++bc[static_cast<std::size_t>(e.y)];
            b = B.intervals[static_cast<std::size_t>(e.y)];
        }
        if (e.x < 0) {
            if (b.infinite()) throw InputError("interpolating object: infinite interval matched to the diagonal");
            double mid = (b.birth + b.death) / 2.0;
            a = {mid, mid, Decoration::oc};
        }
        if (e.y < 0) {
            if (a.infinite()) throw InputError("interpolating object: infinite interval matched to the diagonal");
            double mid = (a.birth + a.death) / 2.0;
            b = {mid, mid, Decoration::oc};
        }
        if (a.infinite() != b.infinite())
            throw InputError("interpolating object: infinite interval matched to a finite one");

        push(obj.C, std::max(a.birth, b.birth), std::max(a.death, b.death));
        if (a.death < b.death) push(obj.ker_phi, a.death, b.death);
        if (a.death > b.death) push(obj.ker_psi, b.death, a.death);
        if (a.birth < b.birth) push(obj.coker_phi, a.birth, b.birth);
        if (b.birth < a.birth) push(obj.coker_psi, b.birth, a.birth);
    }
    for (int c : ac)
        if (c != 1) throw InputError("interpolating object: an interval of A is not matched exactly once");
    for (int c : bc)
        if (c != 1) throw InputError("interpolating object: an interval of B is not matched exactly once");
    return obj;
}

double interpolating_cost(const InterpolatingObject& obj, double p) {
    return module_norm(obj.ker_phi + obj.coker_phi + obj.ker_psi + obj.coker_psi, p);
}

IntervalModule approximate(const IntervalModule& M, double eps, double p) {
    if (!(eps > 0.0)) throw InputError("approximate: eps must be positive");
    if (!(p >= 1.0)) throw InputError("approximate: p must be >= 1");
    std::vector<std::size_t> idx(M.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return M.intervals[a].length() > M.intervals[b].length();
    });
    // cost of sending one interval to the diagonal, to the p-th power
    auto tail_term = [&](const Interval& x) {
        double h = x.length() / 2.0;
        return std::isinf(p) ? h : 2.0 * std::pow(h, p);
    };
    const double budget = std::isinf(p) ? eps : std::pow(eps, p);
    double tail = 0.0;
    std::size_t keep = idx.size();
    while (keep > 0) {
        const Interval& x = M.intervals[idx[keep - 1]];
        if (x.infinite()) break;
        double next = std::isinf(p) ? std::max(tail, tail_term(x)) : tail + tail_term(x);
        if (!(next < budget)) break;
        tail = next;
        --keep;
    }
    std::vector<std::size_t> kept(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(keep));
    std::sort(kept.begin(), kept.end());
    IntervalModule out;
    for (std::size_t i : kept) out.intervals.push_back(M.intervals[i]);
    return out;
}

Presentation presentation_of(const IntervalModule& M) {
    Presentation p;
    for (std::size_t i = 0; i < M.size(); ++i) {
        const auto& x = M.intervals[i];
        p.generator_births.push_back(x.birth);
        if (!x.infinite()) {
            p.relation_values.push_back(x.death);
            p.columns.push_back({static_cast<int>(i)});
        }
    }
    return p;
}

Presentation build_extension(const IntervalModule& A, const IntervalModule& C,
                             const std::vector<std::vector<int>>& gamma) {
    if (gamma.size() != C.size()) throw InputError("build_extension: gamma needs one entry per interval of C");
    Presentation p = presentation_of(A);
    const int na = static_cast<int>(A.size());
    for (std::size_t k = 0; k < C.size(); ++k) p.generator_births.push_back(C.intervals[k].birth);
    for (std::size_t k = 0; k < C.size(); ++k) {
        const auto& c = C.intervals[k];
        if (c.infinite()) {
            if (!gamma[k].empty()) throw InputError("build_extension: gamma entry on an infinite interval of C");
            continue;
        }
        std::vector<int> col{na + static_cast<int>(k)};
        for (int g : gamma[k]) {
            if (g < 0 || g >= na) throw InputError("build_extension: gamma references an unknown generator of A");
            if (A.intervals[static_cast<std::size_t>(g)].birth > c.death)
                throw InputError("build_extension: gamma entry hits a generator of A born after the relation");
            col.push_back(g);
        }
        p.relation_values.push_back(c.death);
        p.columns.push_back(std::move(col));
    }
    return p;
}

RearrangementResult rearrangement_oracle(const std::vector<double>& a, const std::vector<double>& b, double p) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InputError("rearrangement: lists differ in length");
    if (n > 8) throw InputError("rearrangement: n must be at most 8");
    if (!(p >= 1.0) || std::isinf(p)) throw InputError("rearrangement: p must be finite and >= 1");
    for (std::size_t i = 1; i < n; ++i) {
        if (a[i] > a[i - 1]) throw InputError("rearrangement: a must be descending");
        if (b[i] < b[i - 1]) throw InputError("rearrangement: b must be ascending");
    }
    if (n > 0 && a[0] > b[0]) throw InputError("rearrangement: requires a_1 <= b_1");

    auto cost = [&](const std::vector<int>& perm) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::pow(b[i] - a[static_cast<std::size_t>(perm[i])], p);
        return s;
    };
    RearrangementResult res;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    res.identity_cost = cost(perm);
    res.max_cost = res.identity_cost;
    res.argmax = perm;
    while (std::next_permutation(perm.begin(), perm.end())) {
        double c = cost(perm);
        if (c > res.max_cost) {
            res.max_cost = c;
            res.argmax = perm;
        }
    }
    res.identity_is_max = res.identity_cost >= res.max_cost * (1.0 - 1e-12);
    return res;
}

}  // namespace wstab

#pragma once

#include <string>
#include <vector>

#include "wstab/diagram_metrics.hpp"
#include "wstab/persistence.hpp"

namespace wstab {

/// Open/closed flags of the two endpoints. Metric code ignores them.
enum class Decoration { oo, oc, co, cc };

std::string to_string(Decoration d);
Decoration parse_decoration(const std::string& s);

struct Interval {
    double birth = 0.0;
    double death = inf;
    Decoration deco = Decoration::oc;

    double length() const { return death - birth; }
    bool infinite() const { return death == inf; }
};

struct IntervalModule {
    std::vector<Interval> intervals;

    IntervalModule() = default;
    explicit IntervalModule(std::vector<Interval> iv);

    std::size_t size() const { return intervals.size(); }
    bool empty() const { return intervals.empty(); }

    /// All intervals become points of one dimension.
    PersistenceDiagram to_diagram(int dim = 0) const;
    static IntervalModule from_diagram(const PersistenceDiagram& d, Decoration deco = Decoration::oc);
    /// Direct sum.
    IntervalModule operator+(const IntervalModule& o) const;
};

double module_norm(const IntervalModule& M, double p);

/// (b,d) -> (b, b + (1-t)(d-b)).
IntervalModule death_birth_interpolation(const IntervalModule& M, double t);

/// (b,d) -> ((1-t)b + td, d).
IntervalModule birth_death_interpolation(const IntervalModule& M, double t);

/// The span C -> A, C -> B induced by a matching, realised on barcodes.
struct InterpolatingObject {
    IntervalModule C;
    IntervalModule ker_phi, coker_phi, ker_psi, coker_psi;
};

/// Matching edges index A.intervals (x) and B.intervals (y); dim is ignored.
/// A diagonal mate is the midpoint of the interval it absorbs.
InterpolatingObject matching_to_interpolating_object(const IntervalModule& A, const IntervalModule& B,
                                                     const Matching& m);

/// ||ker phi + coker phi + ker psi + coker psi||_p.
double interpolating_cost(const InterpolatingObject& obj, double p);

/// Drops the shortest intervals while their diagonal cost stays below eps.
IntervalModule approximate(const IntervalModule& M, double eps, double p);

/// Presentation of an interval module: one generator per interval, one
/// relation per finite interval.
Presentation presentation_of(const IntervalModule& M);

/// Presentation of the extension B of C by A. gamma[k] lists the
/// generators of A hit by the relation of C's k-th interval (must be empty
/// for an infinite interval).
Presentation build_extension(const IntervalModule& A, const IntervalModule& C,
                             const std::vector<std::vector<int>>& gamma);

struct RearrangementResult {
    double max_cost = 0.0;
    std::vector<int> argmax;  // argmax[i] = index of a matched to b_i
    double identity_cost = 0.0;
    bool identity_is_max = false;
};

/// Brute force over all n! matchings of sum (b_i - a_{M(i)})^p. Requires
/// a descending, b ascending, a_1 <= b_1, n <= 8.
RearrangementResult rearrangement_oracle(const std::vector<double>& a, const std::vector<double>& b, double p);

}  // namespace wstab

#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "wstab/filtered_complex.hpp"

namespace wstab {

inline constexpr double inf = std::numeric_limits<double>::infinity();

struct PersistencePairing {
    std::vector<std::pair<int, int>> pairs;  // (creator, destroyer)
    std::vector<int> essential;
};

struct DiagramPoint {
    int dim = 0;
    double birth = 0.0;
    double death = inf;

    bool essential() const { return death == inf; }
    double length() const { return death - birth; }
    auto operator<=>(const DiagramPoint&) const = default;
};

/// Graded multiset of (dim, birth, death). Kept in canonical order
/// (dim, birth, death) by every function that returns one.
struct PersistenceDiagram {
    std::vector<DiagramPoint> points;

    PersistenceDiagram() = default;
    explicit PersistenceDiagram(std::vector<DiagramPoint> pts);

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
    int max_dim() const;
    void canonicalize();
    /// Points of one dimension only.
    PersistenceDiagram in_dim(int dim) const;
    /// Drop points with birth == death.
    PersistenceDiagram without_ephemeral() const;
    /// Drop points with death == inf.
    PersistenceDiagram finite_part() const;

    bool operator==(const PersistenceDiagram& o) const { return points == o.points; }
};

/// Graded presentation over Z/2. columns[r] lists the generator indices hit by
/// relation r.
struct Presentation {
    std::vector<double> generator_births;
    std::vector<double> relation_values;
    std::vector<std::vector<int>> columns;
};

/// Column reduction result, with the reduced columns R and the recorded
/// column operations V, both indexed by cell id and holding cell ids.
struct Reduction {
    FiltrationOrder order;
    std::vector<int> position;             // cell id -> index in order
    std::vector<std::vector<int>> r;       // reduced boundary columns
    std::vector<std::vector<int>> v;       // V columns; V[i] contains i
    PersistencePairing pairing;
};

/// Standard column reduction in total_order(complex, tiebreak).
Reduction reduce_full(const FilteredComplex& complex, const TieBreak& tiebreak = tiebreak_by_id);

PersistencePairing reduce(const FilteredComplex& complex, const TieBreak& tiebreak = tiebreak_by_id);

PersistenceDiagram diagram(const PersistencePairing& pairing, const FilteredComplex& complex,
                           bool keep_ephemeral = false);

/// reduce followed by diagram.
PersistenceDiagram persistence_diagram(const FilteredComplex& complex, bool keep_ephemeral = false);

/// Elder-rule reduction of a graded presentation. Bars are (birth, value]
/// with generator index pivots chosen youngest-first.
PersistenceDiagram presentation_barcode(const Presentation& p, int dim = 0);

/// Presentation of H_dim read off a reduction: generators are the positive
/// dim-cells (their cycles V), relations are the boundaries of the
/// (dim+1)-cells written in that cycle basis.
Presentation presentation_from_reduction(const Reduction& red, const FilteredComplex& complex, int dim);

/// Betti number of the alpha-sublevel complex in dimension dim by direct
/// rank computation (rank Z_dim - rank B_dim), independent of reduce.
int sublevel_betti(const FilteredComplex& complex, int dim, double alpha);

/// Betti number read from a diagram: points with birth <= alpha < death.
int diagram_betti(const PersistenceDiagram& dgm, int dim, double alpha);

}  // namespace wstab

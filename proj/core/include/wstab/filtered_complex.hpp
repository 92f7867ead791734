#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wstab {

/// A cell of a finite CW-type complex. Boundary coefficients live in Z/2,
/// so the boundary is just the list of codimension-1 faces.
struct Cell {
    int id = 0;
    int dim = 0;
    std::vector<int> boundary;
};

struct Violation {
    enum class Kind {
        monotonicity,        // value(face) > value(cell)
        duplicate_boundary,  // face listed more than once
        face_dimension,      // face dim != cell dim - 1
        unknown_face,        // boundary id out of range
        boundary_not_cycle,  // boundary of boundary is nonzero mod 2
    };
    Kind kind;
    int cell;
    int face;  // -1 when not applicable

    std::string describe() const;
    bool operator==(const Violation&) const = default;
};

/// Finite complex with a real value per cell. Cell ids are dense 0..n-1 and
/// the cell structure is shared between complexes built from one another
/// (interpolate, with_values), so rebuilding the values is cheap.
class FilteredComplex {
public:
    FilteredComplex() : cells_(std::make_shared<const std::vector<Cell>>()) {}

    /// Cells may be given in any order but their ids must be exactly 0..n-1.
    FilteredComplex(std::vector<Cell> cells, std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    const Cell& cell(int id) const { return (*cells_)[static_cast<std::size_t>(id)]; }
    const std::vector<Cell>& cells() const { return *cells_; }
    double value(int id) const { return values_[static_cast<std::size_t>(id)]; }
    std::span<const double> values() const { return values_; }
    int max_dim() const;

    /// Same cells, new values.
    FilteredComplex with_values(std::vector<double> values) const;

    /// True when both complexes have identical cell structure.
    bool same_structure(const FilteredComplex& other) const;

private:
    std::shared_ptr<const std::vector<Cell>> cells_;
    std::vector<double> values_;
};

/// Every violated invariant (monotonicity, mod-2 boundary sanity). Empty
/// means the complex is a valid filtration.
std::vector<Violation> validate(const FilteredComplex& complex);

/// Order on cells of equal value and equal dimension. Must be a strict weak
/// order that is total on distinct ids.
using TieBreak = std::function<bool(const Cell&, const Cell&)>;

/// Default tiebreak: ascending id.
bool tiebreak_by_id(const Cell& a, const Cell& b);

struct FiltrationOrder {
    std::vector<int> order;  // cell ids, filtration order
};

/// Sort by (value, dim, tiebreak). Faces precede cofaces because a face has
/// no larger value and strictly smaller dimension. Throws InputError if the
/// complex is not monotone.
FiltrationOrder total_order(const FilteredComplex& complex, const TieBreak& tiebreak = tiebreak_by_id);

/// Cellwise (1-t) f + t g. Throws InputError on mismatched structure or t
/// outside [0,1].
FilteredComplex interpolate(const FilteredComplex& f, const FilteredComplex& g, double t);

/// Sorted, duplicate-free t in (0,1) at which two cells that are not equal
/// under both f and g take equal interpolated values.
std::vector<double> crossing_times(const FilteredComplex& f, const FilteredComplex& g);

/// Cellwise l_p distance (sum over cells); p = infinity gives the max.
double cellwise_distance(const FilteredComplex& f, const FilteredComplex& g, double p);

}  // namespace wstab

#pragma once

#include <iosfwd>
#include <string>

#include "wstab/builders.hpp"
#include "wstab/filtered_complex.hpp"
#include "wstab/module_algebra.hpp"
#include "wstab/persistence.hpp"

namespace wstab {

// Readers throw InputError naming the source and the 1-based line.
// Writers print floats with 17 significant digits and "inf" for infinity,
// so write followed by read is bit-exact.

std::string format_double(double x);
double parse_double(const std::string& token);

/// cell <id> dim=<d> value=<v> boundary=<i,j,...>   ('#' starts a comment)
FilteredComplex read_filtration(std::istream& in, const std::string& source = "<input>");
void write_filtration(std::ostream& out, const FilteredComplex& f);

/// <dim> <birth> <death|inf>
PersistenceDiagram read_diagram(std::istream& in, const std::string& source = "<input>");
void write_diagram(std::ostream& out, const PersistenceDiagram& d);

/// <dim> <birth> <death|inf> [oo|oc|co|cc]; dim is read and discarded.
IntervalModule read_intervals(std::istream& in, const std::string& source = "<input>");
void write_intervals(std::ostream& out, const IntervalModule& m);

/// One simplex per line, vertex ids separated by spaces or commas. The
/// result is closed under faces.
SimplicialComplex read_simplicial_complex(std::istream& in, const std::string& source = "<input>");
void write_simplicial_complex(std::ostream& out, const SimplicialComplex& k);

/// One point per row, comma separated. Also used for vertex embeddings.
PointCloud read_point_cloud(std::istream& in, const std::string& source = "<input>");
void write_point_cloud(std::ostream& out, const PointCloud& x);

/// ASCII PGM (P2) or a CSV grid (one image row per line), detected by the
/// first token.
GrayImage read_image(std::istream& in, const std::string& source = "<input>");

/// Opens a file, throwing InputError when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace wstab

#pragma once

#include <cstddef>
#include <vector>

#include "wstab/filtered_complex.hpp"
#include "wstab/persistence.hpp"

namespace wstab {

/// d-dimensional grayscale image, row-major (last axis fastest).
struct GrayImage {
    std::vector<std::size_t> shape;
    std::vector<double> values;

    GrayImage() = default;
    GrayImage(std::vector<std::size_t> shape, std::vector<double> values);
    std::size_t dim() const { return shape.size(); }
};

struct PointCloud {
    std::vector<std::vector<double>> points;

    PointCloud() = default;
    explicit PointCloud(std::vector<std::vector<double>> pts);
    std::size_t size() const { return points.size(); }
    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

double euclidean(const std::vector<double>& a, const std::vector<double>& b);

/// Abstract simplicial complex. Simplices are sorted vertex lists, stored by
/// dimension then lexicographically; the list is closed under faces.
struct SimplicialComplex {
    std::vector<std::vector<int>> simplices;

    /// All faces of the given simplices.
    static SimplicialComplex closure(const std::vector<std::vector<int>>& generators);
    int vertex_count() const;
    /// Max number of simplices that contain a single vertex.
    int max_vertex_star() const;
};

struct VertexEmbedding {
    SimplicialComplex complex;
    std::vector<std::vector<double>> coords;  // one per vertex
};

/// A filtration together with the vertex list of each cell id.
struct SimplexFiltration {
    FilteredComplex complex;
    std::vector<std::vector<int>> simplices;
};

/// Pixels are top cells; lower cells take the min over their cofaces.
FilteredComplex cubical_top(const GrayImage& img);

/// Pixels are vertices; higher cells take the max over their vertices.
FilteredComplex cubical_vertex(const GrayImage& img);

SimplexFiltration lower_star_simplices(const SimplicialComplex& K, const std::vector<double>& vertex_values);
FilteredComplex lower_star(const SimplicialComplex& K, const std::vector<double>& vertex_values);

struct RipsOptions {
    int max_dim = 1;          // homology dimension of interest; cells up to max_dim+1
    double max_radius = inf;  // edges longer than this are left out
    bool full = false;        // every simplex on the vertex set, |X| <= 20
};

SimplexFiltration rips_simplices(const PointCloud& X, const RipsOptions& opt);
FilteredComplex rips(const PointCloud& X, int max_dim, double max_radius = inf);

/// Lower star of <v, coords>. v must have unit length.
FilteredComplex height_filtration(const VertexEmbedding& emb, const std::vector<double>& direction);

}  // namespace wstab

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wstab/builders.hpp"
#include "wstab/module_algebra.hpp"
#include "wstab/persistence.hpp"

namespace wstab {

using Rng = std::mt19937_64;

/// Independent stream per (seed, trial).
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

// ---- generators ---------------------------------------------------------

/// Closure of random simplices (dims 1..3) on 3..8 vertices, at most
/// max_cells simplices.
SimplicialComplex random_simplicial_complex(Rng& rng, std::size_t max_cells);

/// Uniform vertex values, max over faces, then per-cell jitter that is zero
/// half the time. Always monotone.
FilteredComplex random_monotone(const FilteredComplex& structure, Rng& rng);

GrayImage random_image(Rng& rng, std::size_t max_side);

/// n finite points (dims in [0, max_dim]) plus `essential` essential points
/// in dimension 0.
PersistenceDiagram random_diagram(Rng& rng, int n, int max_dim = 0, int essential = 0);

IntervalModule random_interval_module(Rng& rng, int n, bool dyadic = false);

// ---- verifiers ----------------------------------------------------------

struct TrialRecord {
    std::size_t trial = 0;
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool ok = true;
};

/// lhs = W_p(Dgm f, Dgm g), rhs = ||f - g||_p over cells.
TrialRecord verify_cellular(const FilteredComplex& f, const FilteredComplex& g, double p);

struct PiecewiseCheck {
    std::vector<double> breakpoints;    // 0, crossing times, 1
    std::vector<TrialRecord> segments;  // one per segment
    double telescoped = 0.0;            // sum of segment rhs
    double total = 0.0;                 // ||f - g||_p
};

PiecewiseCheck verify_piecewise(const FilteredComplex& f, const FilteredComplex& g, double p);

// ---- named constructions ------------------------------------------------

/// Path complex with N peaks of height r separated by valleys of height 0;
/// Dgm_0 holds N bars (0, r) and one essential class.
FilteredComplex teepee_function(int N, double r, double spacing);

/// C rectangles on a sphere of radius r around a center vertex (index 0).
/// Built as C+1 copies of the triangle (center, p, q) with |pq| = r - eps,
/// rotated about the axis through the center parallel to pq so that
/// consecutive copies span rectangles with diagonal r + eps_prime.
PointCloud sphere_rectangles(int C, double r, double eps, double eps_prime);

/// eps_prime that makes the rectangles of sphere_rectangles span the given
/// total angle.
double sphere_rectangles_eps_prime(int C, double r, double eps, double span);

/// Center at index 0 plus n points on an Archimedean spiral.
PointCloud spiral_cloud(int n);

/// {(0, a)} and {(0, a - r)} in dimension 0.
std::pair<PersistenceDiagram, PersistenceDiagram> landscape_pair(double a, double r);

/// H_1 points of `before` with persistence at least min_persistence that
/// do not reappear unchanged in `after`.
int changed_deaths(const PersistenceDiagram& before, const PersistenceDiagram& after, double min_persistence = 0.0);

// ---- suites -------------------------------------------------------------

struct StabilityReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    double tolerance = 1e-9;
    std::vector<TrialRecord> records;
    double min_slack = 0.0;
    bool pass = true;
    std::vector<std::string> notes;

    void finalize();
    std::string to_text() const;
    std::string to_csv() const;
};

std::vector<std::string> suite_names();

/// Runs a named suite. Trials run in parallel; records are ordered by trial.
StabilityReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

}  // namespace wstab

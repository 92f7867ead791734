#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wstab/wstab.hpp"

namespace wstab {

namespace {

template <class T, class F>
T load(const std::string& path, F reader) {
    std::istringstream in(read_file(path));
    return reader(in, path);
}

FilteredComplex load_filtration(const std::string& p) {
    return load<FilteredComplex>(p, [](std::istream& in, const std::string& s) { return read_filtration(in, s); });
}
PersistenceDiagram load_diagram(const std::string& p) {
    return load<PersistenceDiagram>(p, [](std::istream& in, const std::string& s) { return read_diagram(in, s); });
}
PointCloud load_cloud(const std::string& p) {
    return load<PointCloud>(p, [](std::istream& in, const std::string& s) { return read_point_cloud(in, s); });
}
SimplicialComplex load_complex(const std::string& p) {
    return load<SimplicialComplex>(p,
                                   [](std::istream& in, const std::string& s) { return read_simplicial_complex(in, s); });
}
GrayImage load_image(const std::string& p) {
    return load<GrayImage>(p, [](std::istream& in, const std::string& s) { return read_image(in, s); });
}

VertexEmbedding load_embedding(const std::string& coords, const std::string& complex) {
    VertexEmbedding e;
    e.complex = load_complex(complex);
    e.coords = load_cloud(coords).points;
    return e;
}

std::vector<double> parse_vector(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_double(tok));
    return v;
}

double exponent(const std::string& s, const char* name) {
    double v = parse_double(s);
    if (!(v >= 1.0)) throw InputError(std::string("--") + name + " must be >= 1 or inf");
    return v;
}

SphereScheme parse_scheme(const std::string& s) {
    if (s == "uniform-grid") return SphereScheme::uniform_grid;
    if (s == "fibonacci") return SphereScheme::fibonacci;
    if (s == "random") return SphereScheme::random;
    throw InputError("unknown scheme '" + s + "' (uniform-grid, fibonacci, random)");
}

void print_point(std::ostream& out, const DiagramPoint& pt) {
    out << format_double(pt.birth) << " " << format_double(pt.death);
}

// Endpoints of both diagrams in one dimension, used as the default grid.
std::vector<double> endpoint_grid(const PersistenceDiagram& X, const PersistenceDiagram* Y, int dim) {
    std::vector<double> g;
    for (const auto* D : {&X, Y}) {
        if (!D) continue;
        for (const auto& pt : D->points)
            if (pt.dim == dim) {
                g.push_back(pt.birth);
                if (!pt.essential()) g.push_back(pt.death);
            }
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::vector<double> parse_grid(const std::string& spec) {
    // lo:hi:n
    auto a = spec.find(':'), b = spec.rfind(':');
    if (a == std::string::npos || a == b) throw InputError("--grid expects lo:hi:n");
    double lo = parse_double(spec.substr(0, a)), hi = parse_double(spec.substr(a + 1, b - a - 1));
    int n = std::stoi(spec.substr(b + 1));
    if (n < 1 || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo) throw InputError("--grid: need lo <= hi, n >= 1");
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return g;
}

struct Options {
    // build
    std::string image, cloud, coords, complex, direction;
    int max_dim = 1;
    std::string max_radius = "inf";
    // dgm
    std::string filtration;
    bool keep_ephemeral = false;
    int dim = -1;
    // dist / pdist / pht / summary
    std::string p = "2", q;
    bool witness = false;
    std::string a, b;
    std::string coords_b;
    int dirs = 64;
    std::string scheme = "uniform-grid";
    std::uint64_t seed = 0;
    bool bound = false;
    std::string grid;
    std::string horizon;
    int levels = 0;
    // lab
    std::string suite;
    std::size_t trials = 100;
    std::string out_path;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wasserstein stability toolkit for persistence diagrams", "wstab"};
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "Emit a filtration in the cell text format");
    build->require_subcommand(1);
    auto* b_top = build->add_subcommand("cubical-top", "Pixels as top cells (min over cofaces)");
    b_top->add_option("image", o.image, "PGM (P2) or CSV grid")->required();
    auto* b_vert = build->add_subcommand("cubical-vertex", "Pixels as vertices (max over vertices)");
    b_vert->add_option("image", o.image, "PGM (P2) or CSV grid")->required();
    auto* b_rips = build->add_subcommand("rips", "Vietoris-Rips filtration of a CSV point cloud");
    b_rips->add_option("cloud", o.cloud, "CSV point cloud")->required();
    b_rips->add_option("--max-dim", o.max_dim, "Highest homology dimension of interest")->capture_default_str();
    b_rips->add_option("--max-radius", o.max_radius, "Leave out longer edges")->capture_default_str();
    auto* b_height = build->add_subcommand("height", "Height filtration of an embedded complex");
    b_height->add_option("coords", o.coords, "CSV vertex coordinates")->required();
    b_height->add_option("complex", o.complex, "Simplices, one per line")->required();
    b_height->add_option("--direction", o.direction, "Unit vector, comma separated")->required();

    auto* dgm = app.add_subcommand("dgm", "Persistence diagram of a filtration");
    dgm->add_option("filtration", o.filtration, "Cell text format")->required();
    dgm->add_flag("--keep-ephemeral", o.keep_ephemeral, "Keep points with birth == death");
    dgm->add_option("--dim", o.dim, "Only this homology dimension");

    auto* dist = app.add_subcommand("dist", "Wasserstein distance between two diagrams");
    dist->add_option("--p", o.p, "Matching exponent (number or inf)")->capture_default_str();
    dist->add_option("--q", o.q, "Ground norm on the plane (defaults to p)");
    dist->add_flag("--witness", o.witness, "Also print an optimal matching");
    dist->add_option("A", o.a, "Diagram")->required();
    dist->add_option("B", o.b, "Diagram")->required();

    auto* pdist = app.add_subcommand("pdist", "Distance between two point clouds");
    pdist->require_subcommand(1);
    auto* pd_w = pdist->add_subcommand("wasserstein", "Optimal bijection cost (equal sizes)");
    auto* pd_h = pdist->add_subcommand("hausdorff", "p-Hausdorff (minimum-cost correspondence)");
    for (auto* s : {pd_w, pd_h}) {
        s->add_option("--p", o.p, "Exponent (number or inf)")->capture_default_str();
        s->add_option("X", o.a, "CSV point cloud")->required();
        s->add_option("Y", o.b, "CSV point cloud")->required();
    }

    auto* pht = app.add_subcommand("pht", "Sampled persistent homology transform distance");
    pht->add_option("--p", o.p, "Exponent")->capture_default_str();
    pht->add_option("--dirs", o.dirs, "Number of directions")->capture_default_str();
    pht->add_option("--scheme", o.scheme, "uniform-grid, fibonacci or random")->capture_default_str();
    pht->add_option("--seed", o.seed, "Seed for the random scheme")->capture_default_str();
    pht->add_flag("--bound", o.bound, "Also print the stability bound");
    pht->add_option("embA", o.coords, "CSV vertex coordinates")->required();
    pht->add_option("embB", o.coords_b, "CSV vertex coordinates")->required();
    pht->add_option("complex", o.complex, "Simplices, one per line")->required();

    auto* summary = app.add_subcommand("summary", "Functional summaries and their distances");
    summary->require_subcommand(1);
    auto* s_land = summary->add_subcommand("landscape", "Breakpoint CSV, or L_q distance with a second diagram");
    auto* s_rank = summary->add_subcommand("rank", "Rank function CSV, or weighted L_q distance");
    auto* s_betti = summary->add_subcommand("betti", "Betti curve CSV, or l_q distance of sampled curves");
    for (auto* s : {s_land, s_rank, s_betti}) {
        s->add_option("--q", o.q, "Exponent (number or inf)");
        s->add_option("X", o.a, "Diagram")->required();
        s->add_option("Y", o.b, "Diagram");
    }
    s_land->add_option("--levels", o.levels, "Number of levels (0: all)");
    s_land->add_option("--horizon", o.horizon, "Where essential bars are cut off");
    for (auto* s : {s_rank, s_betti}) s->add_option("--dim", o.dim, "Homology dimension (default 0)");
    s_betti->add_option("--grid", o.grid, "Sample grid lo:hi:n (default: all endpoints)");

    auto* lab = app.add_subcommand("lab", "Run a randomized stability suite");
    std::string names;
    for (auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    lab->add_option("suite", o.suite, "One of: " + names)->required();
    lab->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
    lab->add_option("--seed", o.seed, "Seed")->capture_default_str();
    lab->add_option("--out", o.out_path, "Write the per-trial CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "wstab: " << e.what() << "\n";
        return 1;
    }

    try {
        if (build->parsed()) {
            FilteredComplex f;
            if (b_top->parsed()) f = cubical_top(load_image(o.image));
            if (b_vert->parsed()) f = cubical_vertex(load_image(o.image));
            if (b_rips->parsed()) {
                if (o.max_dim < 0) throw InputError("--max-dim must be non-negative");
                f = rips(load_cloud(o.cloud), o.max_dim, parse_double(o.max_radius));
            }
            if (b_height->parsed()) f = height_filtration(load_embedding(o.coords, o.complex), parse_vector(o.direction));
            write_filtration(out, f);
        } else if (dgm->parsed()) {
            auto d = persistence_diagram(load_filtration(o.filtration), o.keep_ephemeral);
            write_diagram(out, o.dim >= 0 ? d.in_dim(o.dim) : d);
        } else if (dist->parsed()) {
            MetricParams mp{exponent(o.p, "p"), std::nullopt};
            if (!o.q.empty()) mp.q = exponent(o.q, "q");
            auto A = load_diagram(o.a), B = load_diagram(o.b);
            auto res = wasserstein(A, B, mp);
            out << format_double(res.cost) << "\n";
            if (o.witness) {
                auto edges = res.witness.edges;
                auto key = [&](const MatchEdge& e) {
                    DiagramPoint x = e.x >= 0 ? A.points[static_cast<std::size_t>(e.x)] : DiagramPoint{e.dim, inf, inf};
                    DiagramPoint y = e.y >= 0 ? B.points[static_cast<std::size_t>(e.y)] : DiagramPoint{e.dim, inf, inf};
                    return std::make_pair(x, y);
                };
                std::sort(edges.begin(), edges.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
                for (const auto& e : edges) {
                    out << e.dim << " ";
                    if (e.x >= 0)
                        print_point(out, A.points[static_cast<std::size_t>(e.x)]);
                    else
                        out << "diagonal";
                    out << " -> ";
                    if (e.y >= 0)
                        print_point(out, B.points[static_cast<std::size_t>(e.y)]);
                    else
                        out << "diagonal";
                    out << "\n";
                }
            }
        } else if (pdist->parsed()) {
            double p = exponent(o.p, "p");
            auto X = load_cloud(o.a), Y = load_cloud(o.b);
            out << format_double(pd_w->parsed() ? pointset_wasserstein(X, Y, p) : p_hausdorff(X, Y, p)) << "\n";
        } else if (pht->parsed()) {
            double p = exponent(o.p, "p");
            auto f = load_embedding(o.coords, o.complex), g = load_embedding(o.coords_b, o.complex);
            if (f.coords.empty()) throw InputError("empty embedding");
            int d = static_cast<int>(f.coords.front().size());
            auto sample = sphere_sample(d, o.dirs, parse_scheme(o.scheme), o.seed);
            out << format_double(pht_distance(f, g, p, sample)) << "\n";
            if (o.bound) out << format_double(pht_bound(f, g, p)) << "\n";
        } else if (summary->parsed()) {
            double q = o.q.empty() ? 2.0 : exponent(o.q, "q");
            auto X = load_diagram(o.a);
            std::optional<PersistenceDiagram> Y;
            if (!o.b.empty()) Y = load_diagram(o.b);
            const int dim = o.dim >= 0 ? o.dim : 0;
            if (s_land->parsed()) {
                LandscapeOptions lo;
                lo.max_level = o.levels;
                if (!o.horizon.empty()) lo.horizon = parse_double(o.horizon);
                if (Y) {
                    if (!lo.horizon) lo.horizon = std::max(default_horizon(X), default_horizon(*Y));
                    out << format_double(landscape_distance(landscape(X, lo), landscape(*Y, lo), q)) << "\n";
                } else {
                    auto L = landscape(X, lo);
                    out << "level,t,value\n";
                    for (std::size_t k = 0; k < L.depth(); ++k)
                        for (auto& [t, v] : L.levels[k])
                            out << k + 1 << "," << format_double(t) << "," << format_double(v) << "\n";
                }
            } else if (s_rank->parsed()) {
                RankFunction r1(X, dim);
                if (Y) {
                    out << format_double(rank_distance(r1, RankFunction(*Y, dim), q)) << "\n";
                } else {
                    auto g = endpoint_grid(X, nullptr, dim);
                    out << "a,b,rank\n";
                    for (std::size_t i = 0; i < g.size(); ++i)
                        for (std::size_t j = i; j < g.size(); ++j)
                            out << format_double(g[i]) << "," << format_double(g[j]) << "," << r1(g[i], g[j]) << "\n";
                }
            } else {
                auto grid = o.grid.empty() ? endpoint_grid(X, Y ? &*Y : nullptr, dim) : parse_grid(o.grid);
                auto cx = betti_curve(X.in_dim(dim), grid);
                if (Y) {
                    auto cy = betti_curve(Y->in_dim(dim), grid);
                    double acc = 0.0;
                    for (std::size_t i = 0; i < grid.size(); ++i) {
                        double d = std::fabs(cx[i] - cy[i]);
                        acc = std::isinf(q) ? std::max(acc, d) : acc + std::pow(d, q);
                    }
                    out << format_double(std::isinf(q) ? acc : std::pow(acc, 1.0 / q)) << "\n";
                } else {
                    out << "t,betti\n";
                    for (std::size_t i = 0; i < grid.size(); ++i)
                        out << format_double(grid[i]) << "," << format_double(cx[i]) << "\n";
                }
            }
        } else if (lab->parsed()) {
            auto rep = run_suite(o.suite, o.trials, o.seed);
            out << rep.to_text();
            if (o.out_path.empty()) {
                out << rep.to_csv();
            } else {
                std::ofstream f(o.out_path);
                if (!f) throw InputError("cannot write '" + o.out_path + "'");
                f << rep.to_csv();
            }
            return rep.pass ? 0 : 2;
        }
    } catch (const InputError& e) {
        err << "wstab: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        err << "wstab: internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "wstab: internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace wstab

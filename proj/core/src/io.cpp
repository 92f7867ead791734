#include "wstab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "wstab/error.hpp"

namespace wstab {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
    throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (seps.find(c) != std::string::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Splits on a single separator and keeps empty fields.
std::vector<std::string> split_fields(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    for (auto& f : out) {
        auto b = f.find_first_not_of(" \t\r");
        auto e = f.find_last_not_of(" \t\r");
        f = b == std::string::npos ? std::string{} : f.substr(b, e - b + 1);
    }
    return out;
}

int parse_int(const std::string& t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) throw InputError("not an integer: '" + t + "'");
    return v;
}

template <class F>
auto at_line(const std::string& source, std::size_t line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        fail(source, line, e.what());
    }
}

}  // namespace

std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << x;
    return os.str();
}

double parse_double(const std::string& token) {
    if (token == "inf" || token == "+inf") return inf;
    if (token == "-inf") return -inf;
    double v = 0.0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || std::isnan(v))
        throw InputError("not a number: '" + token + "'");
    return v;
}

FilteredComplex read_filtration(std::istream& in, const std::string& source) {
    std::vector<Cell> cells;
    std::vector<std::pair<int, double>> values;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = strip_comment(raw);
        if (line.empty()) continue;
        at_line(source, lineno, [&] {
            auto tok = split(line, " \t");
            if (tok.empty() || tok[0] != "cell") throw InputError("expected 'cell'");
            if (tok.size() < 2) throw InputError("missing cell id");
            Cell c;
            c.id = parse_int(tok[1]);
            bool has_dim = false, has_value = false;
            double value = 0.0;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                auto eq = tok[i].find('=');
                if (eq == std::string::npos) throw InputError("expected key=value, got '" + tok[i] + "'");
                auto key = tok[i].substr(0, eq), val = tok[i].substr(eq + 1);
                if (key == "dim") {
                    c.dim = parse_int(val);
                    has_dim = true;
                } else if (key == "value") {
                    value = parse_double(val);
                    has_value = true;
                } else if (key == "boundary") {
                    for (auto& f : split(val, ",")) c.boundary.push_back(parse_int(f));
                } else {
                    throw InputError("unknown key '" + key + "'");
                }
            }
            if (!has_dim) throw InputError("missing dim=");
            if (!has_value) throw InputError("missing value=");
            if (!std::isfinite(value)) throw InputError("cell values must be finite");
            values.emplace_back(c.id, value);
            cells.push_back(std::move(c));
            return 0;
        });
    }
    std::vector<double> vals(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        int id = values[i].first;
        if (id < 0 || static_cast<std::size_t>(id) >= cells.size())
            throw InputError(source + ": cell ids must be exactly 0.." + std::to_string(cells.size() - 1));
        vals[static_cast<std::size_t>(id)] = values[i].second;
    }
    try {
        return FilteredComplex(std::move(cells), std::move(vals));
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    }
}

void write_filtration(std::ostream& out, const FilteredComplex& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Cell& c = f.cell(static_cast<int>(i));
        out << "cell " << c.id << " dim=" << c.dim << " value=" << format_double(f.value(c.id)) << " boundary=";
        for (std::size_t k = 0; k < c.boundary.size(); ++k) out << (k ? "," : "") << c.boundary[k];
        out << "\n";
    }
}

namespace {

struct IntervalLine {
    int dim;
    double birth, death;
    std::optional<Decoration> deco;
};

std::vector<IntervalLine> read_interval_lines(std::istream& in, const std::string& source, bool allow_deco) {
    std::vector<IntervalLine> out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = strip_comment(raw);
        if (line.empty()) continue;
        out.push_back(at_line(source, lineno, [&] {
            auto tok = split(line, " \t,");
            if (tok.size() < 3 || tok.size() > (allow_deco ? 4u : 3u))
                throw InputError(allow_deco ? "expected '<dim> <birth> <death|inf> [deco]'"
                                            : "expected '<dim> <birth> <death|inf>'");
            IntervalLine l{parse_int(tok[0]), parse_double(tok[1]), parse_double(tok[2]), std::nullopt};
            if (l.dim < 0) throw InputError("negative dimension");
            if (!std::isfinite(l.birth)) throw InputError("birth must be finite");
            if (l.death < l.birth) throw InputError("death before birth");
            if (tok.size() == 4) l.deco = parse_decoration(tok[3]);
            return l;
        }));
    }
    return out;
}

}  // namespace

PersistenceDiagram read_diagram(std::istream& in, const std::string& source) {
    std::vector<DiagramPoint> pts;
    for (auto& l : read_interval_lines(in, source, false)) pts.push_back({l.dim, l.birth, l.death});
    return PersistenceDiagram(std::move(pts));
}

void write_diagram(std::ostream& out, const PersistenceDiagram& d) {
    PersistenceDiagram c = d;
    c.canonicalize();
    for (const auto& pt : c.points)
        out << pt.dim << " " << format_double(pt.birth) << " " << format_double(pt.death) << "\n";
}

IntervalModule read_intervals(std::istream& in, const std::string& source) {
    IntervalModule m;
    for (auto& l : read_interval_lines(in, source, true))
        m.intervals.push_back({l.birth, l.death, l.deco.value_or(Decoration::oc)});
    return m;
}

void write_intervals(std::ostream& out, const IntervalModule& m) {
    for (const auto& iv : m.intervals)
        out << 0 << " " << format_double(iv.birth) << " " << format_double(iv.death) << " " << to_string(iv.deco)
            << "\n";
}

SimplicialComplex read_simplicial_complex(std::istream& in, const std::string& source) {
    std::vector<std::vector<int>> gens;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = strip_comment(raw);
        if (line.empty()) continue;
        gens.push_back(at_line(source, lineno, [&] {
            std::vector<int> s;
            for (auto& t : split(line, " \t,")) {
                int v = parse_int(t);
                if (v < 0) throw InputError("negative vertex id");
                s.push_back(v);
            }
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("repeated vertex in simplex");
            return s;
        }));
    }
    return SimplicialComplex::closure(gens);
}

void write_simplicial_complex(std::ostream& out, const SimplicialComplex& k) {
    for (const auto& s : k.simplices) {
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
        out << "\n";
    }
}

PointCloud read_point_cloud(std::istream& in, const std::string& source) {
    std::vector<std::vector<double>> pts;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = strip_comment(raw);
        if (line.empty()) continue;
        pts.push_back(at_line(source, lineno, [&] {
            std::vector<double> p;
            for (auto& f : split_fields(line, ',')) {
                double v = parse_double(f);
                if (!std::isfinite(v)) throw InputError("coordinates must be finite");
                p.push_back(v);
            }
            if (!pts.empty() && p.size() != pts.front().size())
                throw InputError("expected " + std::to_string(pts.front().size()) + " coordinates, got " +
                                 std::to_string(p.size()));
            return p;
        }));
    }
    return PointCloud(std::move(pts));
}

void write_point_cloud(std::ostream& out, const PointCloud& x) {
    for (const auto& p : x.points) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << format_double(p[i]);
        out << "\n";
    }
}

GrayImage read_image(std::istream& in, const std::string& source) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = strip_comment(raw);
        if (!line.empty()) lines.emplace_back(lineno, line);
    }
    if (lines.empty()) throw InputError(source + ": empty image");

    if (lines.front().second.rfind("P2", 0) == 0) {
        std::vector<std::pair<std::size_t, std::string>> tokens;
        for (auto& [n, l] : lines)
            for (auto& t : split(l, " \t")) tokens.emplace_back(n, t);
        if (tokens.size() < 4) throw InputError(source + ": truncated PGM header");
        auto header = [&](std::size_t i) {
            return at_line(source, tokens[i].first, [&] {
                int v = parse_int(tokens[i].second);
                if (v <= 0) throw InputError("PGM header values must be positive");
                return v;
            });
        };
        std::size_t w = static_cast<std::size_t>(header(1)), h = static_cast<std::size_t>(header(2));
        double maxval = header(3);
        if (tokens.size() != 4 + w * h)
            throw InputError(source + ": expected " + std::to_string(w * h) + " pixels, got " +
                             std::to_string(tokens.size() - 4));
        std::vector<double> vals;
        for (std::size_t i = 4; i < tokens.size(); ++i)
            vals.push_back(at_line(source, tokens[i].first, [&] {
                int v = parse_int(tokens[i].second);
                if (v < 0 || v > maxval) throw InputError("pixel outside [0, maxval]");
                return static_cast<double>(v);
            }));
        return GrayImage({h, w}, std::move(vals));
    }

    std::vector<double> vals;
    std::size_t width = 0;
    for (auto& [n, l] : lines) {
        auto row = at_line(source, n, [&] {
            std::vector<double> r;
            for (auto& f : split_fields(l, ',')) {
                double v = parse_double(f);
                if (!std::isfinite(v)) throw InputError("pixel values must be finite");
                r.push_back(v);
            }
            if (width && r.size() != width)
                throw InputError("expected " + std::to_string(width) + " columns, got " + std::to_string(r.size()));
            return r;
        });
        width = row.size();
        vals.insert(vals.end(), row.begin(), row.end());
    }
    return GrayImage({lines.size(), width}, std::move(vals));
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace wstab

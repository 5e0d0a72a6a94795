#pragma once

// CSV and JSON ingestion/emission for graphs, point clouds, diagrams,
// filtrations and images.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "distances.hpp"
#include "errors.hpp"
#include "filtration.hpp"
#include "lgraph.hpp"
#include "persistence.hpp"
#include "vectorize.hpp"

namespace mrips::io {

using Row = std::vector<std::string>;

struct CsvTable {
    std::optional<Row> header;
    std::vector<Row> rows;
    std::vector<std::size_t> line_numbers;  // source line of each row
};

namespace detail {

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline Row split(std::string_view line)
{
    Row out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace detail

inline std::optional<double> try_parse_number(std::string_view token)
{
    const std::string t = detail::lower(std::string(token));
    if (t == "inf" || t == "+inf" || t == "infinity")
        return kInf;
    if (t.empty())
        return std::nullopt;
    double v = 0.0;
    const char* first = t.data();
    if (*first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || std::isnan(v))
        return std::nullopt;
    return v;
}

inline double parse_number(std::string_view token, std::size_t line)
{
    const auto v = try_parse_number(token);
    mrips::detail::require(v.has_value(), "line " + std::to_string(line) + ": not a number: '" + std::string(token) + "'");
    return *v;
}

inline bool is_numeric_row(const Row& r)
{
    return std::all_of(r.begin(), r.end(), [](const std::string& t) { return try_parse_number(t).has_value(); });
}

// Comma-separated; blank lines and lines starting with '#' are skipped. The
// first row is a header when any of its fields is non-numeric.
inline CsvTable read_csv(std::istream& in)
{
    CsvTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = detail::trim(line);
        if (s.empty() || s.front() == '#')
            continue;
        Row r = detail::split(s);
        if (!t.header && t.rows.empty() && !is_numeric_row(r))
            t.header = std::move(r);
        else {
            t.rows.push_back(std::move(r));
            t.line_numbers.push_back(lineno);
        }
    }
    return t;
}

inline CsvTable read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    mrips::detail::require(in.good(), "cannot open '" + path + "'");
    return read_csv(in);
}

enum class InputFormat { edges, points, matrix };

inline std::string to_string(InputFormat f)
{
    switch (f) {
    case InputFormat::edges: return "edges";
    case InputFormat::points: return "points";
    case InputFormat::matrix: return "matrix";
    }
    return "?";
}

inline InputFormat parse_format(const std::string& s)
{
    const std::string l = detail::lower(s);
    if (l == "edges")
        return InputFormat::edges;
    if (l == "points")
        return InputFormat::points;
    if (l == "matrix")
        return InputFormat::matrix;
    throw InvalidInput("unknown input format '" + s + "' (expected edges, points or matrix)");
}

// Header `src,dst,weight` means an edge list; any other header means a point
// cloud. Headerless numeric tables are distance matrices when square with a
// zero diagonal or when they contain `inf`, and point clouds otherwise.
inline InputFormat infer_format(const CsvTable& t)
{
    if (t.header) {
        Row h;
        for (const auto& x : *t.header)
            h.push_back(detail::lower(x));
        if (h == Row{"src", "dst", "weight"})
            return InputFormat::edges;
        return InputFormat::points;
    }
    bool any_inf = false;
    for (const auto& r : t.rows)
        for (const auto& x : r)
            any_inf = any_inf || std::isinf(try_parse_number(x).value_or(0.0));
    if (any_inf)
        return InputFormat::matrix;
    bool square = !t.rows.empty();
    for (std::size_t i = 0; i < t.rows.size() && square; ++i)
        square = t.rows[i].size() == t.rows.size() && try_parse_number(t.rows[i][i]).value_or(1.0) == 0.0;
    return square ? InputFormat::matrix : InputFormat::points;
}

namespace detail {

// Vertex names: all non-negative integers -> used as indices; otherwise
// assigned in order of first appearance.
class VertexNames {
public:
    explicit VertexNames(const std::vector<std::string>& all)
    {
        numeric_ = std::all_of(all.begin(), all.end(), [](const std::string& s) {
            return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        });
        for (const auto& s : all) {
            if (numeric_) {
                count_ = std::max<std::size_t>(count_, std::stoul(s) + 1);
            } else if (index_.emplace(s, static_cast<Vertex>(names_.size())).second) {
                names_.push_back(s);
            }
        }
        if (!numeric_)
            count_ = names_.size();
    }
    Vertex operator()(const std::string& s) const { return numeric_ ? static_cast<Vertex>(std::stoul(s)) : index_.at(s); }
    std::size_t size() const { return count_; }
    std::vector<std::string> labels() const { return names_; }

private:
    bool numeric_ = true;
    std::size_t count_ = 0;
    std::map<std::string, Vertex> index_;
    std::vector<std::string> names_;
};

inline void require_width(const CsvTable& t, std::size_t width, const std::string& what)
{
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        mrips::detail::require(t.rows[i].size() == width, "line " + std::to_string(t.line_numbers[i]) + ": " + what + " rows need " +
                                                             std::to_string(width) + " fields");
}

} // namespace detail

struct NamedDigraph {
    WeightedDigraph graph;
    std::vector<std::string> labels;  // empty when vertices are integer indices
};

// Edge list `src,dst,weight`, optionally with a vertex table `vertex,weight`
// giving diagonal weights (and possibly isolated vertices).
inline NamedDigraph read_edge_list(const CsvTable& edges, const CsvTable* vertices = nullptr)
{
    detail::require_width(edges, 3, "edge list");
    if (vertices)
        detail::require_width(*vertices, 2, "vertex table");
    std::vector<std::string> names;
    for (const auto& r : edges.rows) {
        names.push_back(r[0]);
        names.push_back(r[1]);
    }
    if (vertices)
        for (const auto& r : vertices->rows)
            names.push_back(r[0]);
    const detail::VertexNames idx(names);
    NamedDigraph out;
    out.graph.n = idx.size();
    out.labels = idx.labels();
    for (std::size_t i = 0; i < edges.rows.size(); ++i) {
        const auto& r = edges.rows[i];
        out.graph.edges.push_back({idx(r[0]), idx(r[1]), parse_number(r[2], edges.line_numbers[i])});
    }
    if (vertices && !vertices->rows.empty()) {
        out.graph.vertex_weights.assign(out.graph.n, 0.0);
        for (std::size_t i = 0; i < vertices->rows.size(); ++i)
            out.graph.vertex_weights[idx(vertices->rows[i][0])] = parse_number(vertices->rows[i][1], vertices->line_numbers[i]);
    }
    out.graph.validate();
    return out;
}

inline PointCloud read_points(const CsvTable& t)
{
    mrips::detail::require(!t.rows.empty(), "point cloud has no rows");
    PointCloud out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        mrips::detail::require(t.rows[i].size() == t.rows.front().size(),
                               "line " + std::to_string(t.line_numbers[i]) + ": inconsistent point dimension");
        Point p;
        for (const auto& x : t.rows[i]) {
            p.push_back(parse_number(x, t.line_numbers[i]));
            mrips::detail::require(std::isfinite(p.back()), "line " + std::to_string(t.line_numbers[i]) + ": coordinates must be finite");
        }
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<std::vector<double>> read_matrix(const CsvTable& t)
{
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        mrips::detail::require(t.rows[i].size() == t.rows.size(), "line " + std::to_string(t.line_numbers[i]) + ": distance matrix must be square");
        std::vector<double> row;
        for (const auto& x : t.rows[i]) {
            row.push_back(parse_number(x, t.line_numbers[i]));
            mrips::detail::require(row.back() >= 0.0, "line " + std::to_string(t.line_numbers[i]) + ": matrix entries must be non-negative");
        }
        out.push_back(std::move(row));
    }
    mrips::detail::require(!out.empty(), "distance matrix is empty");
    return out;
}

// One value per vertex, taken from the last column.
inline std::vector<double> read_vertex_values(const CsvTable& t)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        mrips::detail::require(!t.rows[i].empty(), "empty row");
        out.push_back(parse_number(t.rows[i].back(), t.line_numbers[i]));
        mrips::detail::require(out.back() >= 0.0, "line " + std::to_string(t.line_numbers[i]) + ": values must be non-negative");
    }
    return out;
}

// Any of the three graph dialects as a scalar L-graph.
inline LGraph read_graph(const CsvTable& t, std::optional<InputFormat> format, LatticeDescriptor descriptor,
                         Metric metric = Metric::euclidean, const CsvTable* vertices = nullptr)
{
    const InputFormat f = format.value_or(infer_format(t));
    switch (f) {
    case InputFormat::edges: {
        auto named = read_edge_list(t, vertices);
        auto g = from_weighted_digraph(named.graph, descriptor);
        g.set_labels(named.labels);
        return g;
    }
    case InputFormat::points:
        return from_point_cloud(read_points(t), metric, descriptor);
    case InputFormat::matrix:
        return LGraph::from_matrix(read_matrix(t), descriptor);
    }
    throw InvalidInput("unknown input format");
}

// Shortest representation that parses back to the same double; `inf` for
// infinity.
inline std::string format_number(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline void write_diagram(std::ostream& out, const PersistenceDiagram& d)
{
    out << "dim,birth,death\n";
    for (const auto& p : d.points())
        out << p.dim << ',' << format_number(p.birth) << ',' << format_number(p.death) << '\n';
}

inline PersistenceDiagram read_diagram(const CsvTable& t)
{
    detail::require_width(t, 3, "diagram");
    std::vector<PersistencePoint> pts;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        const std::size_t line = t.line_numbers[i];
        const double dim = parse_number(r[0], line);
        mrips::detail::require(dim >= 0 && dim == std::floor(dim) && std::isfinite(dim), "line " + std::to_string(line) + ": bad dimension");
        PersistencePoint p{static_cast<std::size_t>(dim), parse_number(r[1], line), parse_number(r[2], line)};
        mrips::detail::require(std::isfinite(p.birth) && p.birth <= p.death, "line " + std::to_string(line) + ": need finite birth <= death");
        pts.push_back(p);
    }
    return PersistenceDiagram(std::move(pts));
}

inline void write_filtration(std::ostream& out, const Filtration& f)
{
    out << "dim,grade";
    for (std::size_t k = 0; k <= f.max_dim(); ++k)
        out << ",v" << k;
    out << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << f.dim(i) << ',' << format_number(f.grade(i));
        for (Vertex v : f.vertices(i))
            out << ',' << v;
        out << '\n';
    }
}

inline void write_filtration(std::ostream& out, const Bifiltration& f)
{
    out << "dim,grade_t,grade_s";
    for (std::size_t k = 0; k <= f.max_dim(); ++k)
        out << ",v" << k;
    out << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << f.dim(i) << ',' << format_number(f.grade(i)[0]) << ',' << format_number(f.grade(i)[1]);
        for (Vertex v : f.vertices(i))
            out << ',' << v;
        out << '\n';
    }
}

inline void write_points(std::ostream& out, const PointCloud& pts)
{
    const std::size_t dim = pts.empty() ? 0 : pts.front().size();
    for (std::size_t k = 0; k < dim; ++k)
        out << (k ? "," : "") << 'x' << k;
    out << '\n';
    for (const auto& p : pts) {
        for (std::size_t k = 0; k < p.size(); ++k)
            out << (k ? "," : "") << format_number(p[k]);
        out << '\n';
    }
}

inline void write_edge_list(std::ostream& out, const WeightedDigraph& g)
{
    out << "src,dst,weight\n";
    for (const auto& e : g.edges)
        out << e.src << ',' << e.dst << ',' << format_number(e.weight) << '\n';
}

// JSON numbers cannot be infinite; infinity is emitted as the string "inf".
inline nlohmann::json number_json(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

inline nlohmann::json grade_json(const Grade& g)
{
    if (g.dims() == 1)
        return number_json(g[0]);
    auto arr = nlohmann::json::array();
    for (double c : g.coords())
        arr.push_back(number_json(c));
    return arr;
}

inline nlohmann::json correspondence_json(const Correspondence& c, const std::vector<std::string>& labels1 = {},
                                          const std::vector<std::string>& labels2 = {})
{
    auto arr = nlohmann::json::array();
    for (const auto& [a, b] : c.pairs) {
        nlohmann::json x = labels1.empty() ? nlohmann::json(a) : nlohmann::json(labels1[a]);
        nlohmann::json y = labels2.empty() ? nlohmann::json(b) : nlohmann::json(labels2[b]);
        arr.push_back({x, y});
    }
    return arr;
}

inline nlohmann::json image_json(const PersistenceImage& img)
{
    nlohmann::json j;
    j["dim"] = img.dim;
    j["resolution"] = {img.rows, img.cols};
    j["sigma"] = img.sigma;
    j["ranges"] = {{"birth", {img.birth_range.lo, img.birth_range.hi}}, {"persistence", {img.persistence_range.lo, img.persistence_range.hi}}};
    j["weight"] = to_string(img.weight);
    j["values"] = img.values;
    j["essential_points"] = img.essential_points;
    return j;
}

inline void write_image_csv(std::ostream& out, const PersistenceImage& img)
{
    for (std::size_t r = 0; r < img.rows; ++r) {
        for (std::size_t c = 0; c < img.cols; ++c)
            out << (c ? "," : "") << format_number(img.at(r, c));
        out << '\n';
    }
}

} // namespace mrips::io

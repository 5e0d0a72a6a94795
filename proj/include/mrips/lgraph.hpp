#pragma once

// L-graphs: functions V x V -> L stored as dense matrices of Grades.
//
// No symmetry or triangle inequality is assumed. Missing directed edges are
// encoded as infinity.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace mrips {

using Vertex = std::uint32_t;
using Point = std::vector<double>;
using PointCloud = std::vector<Point>;

struct WeightedEdge {
    Vertex src = 0;
    Vertex dst = 0;
    double weight = 0.0;
};

struct WeightedDigraph {
    std::size_t n = 0;
    std::vector<WeightedEdge> edges;
    std::vector<double> vertex_weights;  // empty, or one per vertex

    void validate() const
    {
        std::set<std::pair<Vertex, Vertex>> seen;
        for (const auto& e : edges) {
            detail::require(e.src < n && e.dst < n, "edge endpoint out of range");
            detail::require(e.src != e.dst, "self-loops are not edges; use vertex weights");
            detail::require(std::isfinite(e.weight), "edge weights must be finite");
            detail::require(e.weight >= 0.0, "edge weights must be non-negative");
            detail::require(seen.emplace(e.src, e.dst).second, "duplicate edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
        }
        detail::require(vertex_weights.empty() || vertex_weights.size() == n, "vertex weight count must match vertex count");
        for (double w : vertex_weights)
            detail::require(std::isfinite(w) && w >= 0.0, "vertex weights must be finite and non-negative");
    }
};

enum class Metric { euclidean, chebyshev, manhattan };

class LGraph {
public:
    LGraph() = default;
    LGraph(LatticeDescriptor descriptor, std::size_t n, const Grade& fill)
        : descriptor_(descriptor), n_(n), weights_(n * n, fill)
    {
        descriptor_.validate();
        detail::require(descriptor_.conforms(fill), "fill grade does not conform to the lattice");
    }
    LGraph(LatticeDescriptor descriptor, std::size_t n) : LGraph(descriptor, n, Grade::zero(descriptor.dims)) {}

    // Scalar graph from a square matrix.
    static LGraph from_matrix(const std::vector<std::vector<double>>& rows, LatticeDescriptor descriptor = LatticeDescriptor::scalar(kInf))
    {
        detail::require(descriptor.is_scalar(), "from_matrix builds scalar graphs");
        LGraph g(descriptor, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            detail::require(rows[i].size() == rows.size(), "distance matrix must be square");
            for (std::size_t j = 0; j < rows.size(); ++j)
                g.set(i, j, Grade(rows[i][j]));
        }
        return g;
    }

    std::size_t size() const { return n_; }
    const LatticeDescriptor& descriptor() const { return descriptor_; }

    const Grade& operator()(std::size_t i, std::size_t j) const { return weights_[i * n_ + j]; }
    double scalar(std::size_t i, std::size_t j) const { return weights_[i * n_ + j][0]; }

    void set(std::size_t i, std::size_t j, const Grade& g)
    {
        detail::require(i < n_ && j < n_, "vertex index out of range");
        detail::require(descriptor_.conforms(g), "grade does not conform to the lattice (wrong arity or negative)");
        weights_[i * n_ + j] = g;
    }

    // Same weights under different products; p and q are sweepable.
    LGraph with_exponents(double p, double q) const
    {
        LGraph out = *this;
        out.descriptor_.product_p = p;
        out.descriptor_.interleave_q = q;
        out.descriptor_.validate();
        return out;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels)
    {
        detail::require(labels.empty() || labels.size() == n_, "label count must match vertex count");
        labels_ = std::move(labels);
    }

    friend bool operator==(const LGraph& a, const LGraph& b)
    {
        return a.descriptor_ == b.descriptor_ && a.n_ == b.n_ && a.weights_ == b.weights_;
    }

private:
    LatticeDescriptor descriptor_{};
    std::size_t n_ = 0;
    std::vector<Grade> weights_;
    std::vector<std::string> labels_;
};

inline LGraph from_weighted_digraph(const WeightedDigraph& g, LatticeDescriptor descriptor = LatticeDescriptor::scalar(kInf))
{
    g.validate();
    detail::require(descriptor.is_scalar(), "weighted digraphs induce scalar graphs");
    LGraph out(descriptor, g.n, Grade(kInf));
    for (std::size_t v = 0; v < g.n; ++v)
        out.set(v, v, Grade(g.vertex_weights.empty() ? 0.0 : g.vertex_weights[v]));
    for (const auto& e : g.edges)
        out.set(e.src, e.dst, Grade(e.weight));
    return out;
}

inline double point_distance(const Point& a, const Point& b, Metric metric = Metric::euclidean)
{
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = std::abs(a[k] - b[k]);
        switch (metric) {
        case Metric::euclidean: acc += diff * diff; break;
        case Metric::chebyshev: acc = std::max(acc, diff); break;
        case Metric::manhattan: acc += diff; break;
        }
    }
    return metric == Metric::euclidean ? std::sqrt(acc) : acc;
}

inline LGraph from_point_cloud(const PointCloud& points, Metric metric = Metric::euclidean,
                               LatticeDescriptor descriptor = LatticeDescriptor::scalar(kInf))
{
    detail::require(!points.empty(), "point cloud is empty");
    detail::require(descriptor.is_scalar(), "point clouds induce scalar graphs");
    const std::size_t dim = points.front().size();
    for (const auto& p : points) {
        detail::require(p.size() == dim, "points have inconsistent dimensions");
        for (double x : p)
            detail::require(std::isfinite(x), "point coordinates must be finite");
    }
    LGraph out(descriptor, points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d = point_distance(points[i], points[j], metric);
            out.set(i, j, Grade(d));
            out.set(j, i, Grade(d));
        }
    return out;
}

// f^*G(x, x') = G(f(x), f(x')).
inline LGraph pullback(const LGraph& g, std::span<const Vertex> f)
{
    for (Vertex v : f)
        detail::require(v < g.size(), "pullback map hits vertex " + std::to_string(v) + " outside the graph");
    LGraph out(g.descriptor(), f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        for (std::size_t y = 0; y < f.size(); ++y)
            out.set(x, y, g(f[x], f[y]));
    return out;
}

// G_gamma(v, v') = (d(v, v'), gamma(v)) over [0,inf]^2 with (max, +_q).
inline LGraph sublevel_graph(const LGraph& d, std::span<const double> gamma, double q = 1.0)
{
    detail::require(d.descriptor().is_scalar(), "sublevel graph needs a scalar distance graph");
    detail::require(gamma.size() == d.size(), "gamma must give one value per vertex");
    for (std::size_t v = 0; v < d.size(); ++v) {
        detail::require(d.scalar(v, v) == 0.0, "distance graph must have 0-diagonal");
        detail::require(gamma[v] >= 0.0, "gamma values must lie in [0, inf]");
    }
    LGraph out(LatticeDescriptor::product(2, kInf, q), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            out.set(i, j, Grade{d.scalar(i, j), gamma[i]});
    out.set_labels(d.labels());
    return out;
}

inline bool has_e_diagonal(const LGraph& g)
{
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!g(v, v).is_zero())
            return false;
    return true;
}

} // namespace mrips

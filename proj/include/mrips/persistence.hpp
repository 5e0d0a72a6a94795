#pragma once

// Persistent homology over Z/2 of (Delta-set) filtrations.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "filtration.hpp"
#include "lattice.hpp"
#include "lgraph.hpp"

namespace mrips {

using Index = std::uint32_t;
using Column = std::vector<Index>;  // ascending row positions

struct BoundaryMatrix {
    std::vector<Column> columns;
    std::vector<std::uint8_t> dims;

    std::size_t size() const { return columns.size(); }
};

struct PersistencePoint {
    std::size_t dim = 0;
    double birth = 0.0;
    double death = kInf;

    bool is_essential() const { return std::isinf(death); }
    double persistence() const { return death - birth; }

    friend bool operator==(const PersistencePoint&, const PersistencePoint&) = default;
    friend bool operator<(const PersistencePoint& a, const PersistencePoint& b)
    {
        return std::tie(a.dim, a.birth, a.death) < std::tie(b.dim, b.birth, b.death);
    }
};

class PersistenceDiagram {
public:
    PersistenceDiagram() = default;
    explicit PersistenceDiagram(std::vector<PersistencePoint> points) : points_(std::move(points))
    {
        std::sort(points_.begin(), points_.end());
    }

    const std::vector<PersistencePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    PersistenceDiagram in_dim(std::size_t dim) const
    {
        std::vector<PersistencePoint> out;
        for (const auto& p : points_)
            if (p.dim == dim)
                out.push_back(p);
        return PersistenceDiagram(std::move(out));
    }

    // Disjoint union.
    PersistenceDiagram merged(const PersistenceDiagram& other) const
    {
        auto all = points_;
        all.insert(all.end(), other.points_.begin(), other.points_.end());
        return PersistenceDiagram(std::move(all));
    }

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

private:
    std::vector<PersistencePoint> points_;
};

namespace detail {

// Position lookup by (dimension, tuple code).
class FaceIndex {
public:
    explicit FaceIndex(const Filtration& f) : m_(std::max<std::size_t>(f.vertex_count(), 1))
    {
        std::size_t top = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            top = std::max(top, f.dim(i));
            for (Vertex v : f.vertices(i))
                require(v < m_, "filtration vertex out of range");
        }
        check_key_range(m_, top);
        by_dim_.resize(top + 1);
        for (std::size_t i = 0; i < f.size(); ++i)
            by_dim_[f.dim(i)].push_back({tuple_key(f.vertices(i), m_), static_cast<Index>(i)});
        for (auto& v : by_dim_)
            std::sort(v.begin(), v.end());
    }

    std::optional<Index> find(std::span<const Vertex> y) const
    {
        const std::size_t d = y.size() - 1;
        if (d >= by_dim_.size())
            return std::nullopt;
        const auto& v = by_dim_[d];
        const std::pair<std::uint64_t, Index> probe{tuple_key(y, m_), 0};
        auto it = std::lower_bound(v.begin(), v.end(), probe,
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it == v.end() || it->first != probe.first)
            return std::nullopt;
        return it->second;
    }

private:
    std::size_t m_;
    std::vector<std::vector<std::pair<std::uint64_t, Index>>> by_dim_;
};

// a <- a + b over Z/2.
inline void add_column(Column& a, const Column& b, Column& scratch)
{
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
    a.swap(scratch);
}

template <class Value>
BoundaryMatrix boundary_matrix_impl(const BasicFiltration<Value>& f, bool check_order)
{
    require(f.size() < std::numeric_limits<Index>::max(), "filtration too large for 32-bit positions");
    FaceIndex index(f);
    BoundaryMatrix m;
    m.columns.resize(f.size());
    m.dims.resize(f.size());
    Simplex face_tuple;
    for (std::size_t j = 0; j < f.size(); ++j) {
        auto y = f.vertices(j);
        const std::size_t k = y.size() - 1;
        m.dims[j] = static_cast<std::uint8_t>(k);
        require(is_nondegenerate(y), "filtration contains a degenerate simplex");
        if (k == 0)
            continue;
        Column& col = m.columns[j];
        for (std::size_t i = 0; i <= k; ++i) {
            if (i > 0 && i < k && y[i - 1] == y[i + 1])
                continue;  // degenerate face
            face_tuple = face(y, i);
            auto pos = index.find(face_tuple);
            require(pos.has_value(), "filtration is not closed under faces");
            require(!check_order || *pos < j, "filtration order puts a face after its coface");
            col.push_back(*pos);
        }
        std::sort(col.begin(), col.end());
        // Cancel repeated faces mod 2.
        Column reduced;
        for (std::size_t r = 0; r < col.size();) {
            std::size_t s = r;
            while (s < col.size() && col[s] == col[r])
                ++s;
            if ((s - r) % 2 == 1)
                reduced.push_back(col[r]);
            r = s;
        }
        col.swap(reduced);
    }
    return m;
}

// Column reduction with clearing, dimensions processed top-down. Returns
// low(j) for every column (or -1 for a zero column).
inline std::vector<std::int64_t> reduce_with_clearing(BoundaryMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<std::int64_t> pivot_col(n, -1);  // row -> column owning it as pivot
    std::vector<std::int64_t> low(n, -1);
    std::vector<bool> cleared(n, false);
    std::size_t top = 0;
    for (auto d : m.dims)
        top = std::max<std::size_t>(top, d);
    Column scratch;
    for (std::size_t d = top; d >= 1; --d) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.dims[j] != d)
                continue;
            Column& col = m.columns[j];
            if (cleared[j]) {
                col.clear();
                continue;
            }
            while (!col.empty() && pivot_col[col.back()] != -1)
                add_column(col, m.columns[static_cast<std::size_t>(pivot_col[col.back()])], scratch);
            if (!col.empty()) {
                pivot_col[col.back()] = static_cast<std::int64_t>(j);
                low[j] = col.back();
                cleared[col.back()] = true;
            }
        }
    }
    return low;
}

} // namespace detail

// Z/2 boundary of the normalized complex: column j lists the positions of the
// non-degenerate codimension-1 faces of simplex j.
inline BoundaryMatrix boundary_matrix(const Filtration& f)
{
    for (std::size_t i = 1; i < f.size(); ++i)
        detail::require(f.grade(i - 1) <= f.grade(i), "filtration is not sorted by grade");
    return detail::boundary_matrix_impl(f, true);
}

struct ReductionOptions {
    bool keep_zero_length = false;
};

inline PersistenceDiagram reduce_and_extract(BoundaryMatrix m, std::span<const double> grades, std::size_t max_dim,
                                             ReductionOptions options = {})
{
    detail::require(grades.size() == m.size(), "grade count must match the boundary matrix");
    const auto low = detail::reduce_with_clearing(m);
    std::vector<bool> paired(m.size(), false);
    std::vector<PersistencePoint> points;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (low[j] < 0)
            continue;
        const auto i = static_cast<std::size_t>(low[j]);
        paired[i] = paired[j] = true;
        if (m.dims[i] > max_dim)
            continue;
        if (grades[i] < grades[j] || options.keep_zero_length)
            points.push_back({m.dims[i], grades[i], grades[j]});
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!paired[i] && m.dims[i] <= max_dim)
            points.push_back({m.dims[i], grades[i], kInf});
    return PersistenceDiagram(std::move(points));
}

inline PersistenceDiagram persistence_diagram(const Filtration& f, ReductionOptions options = {})
{
    return reduce_and_extract(boundary_matrix(f), f.grades(), f.max_dim(), options);
}

inline PersistenceDiagram persistence_diagram(const LGraph& g, std::size_t max_dim, std::optional<double> threshold = std::nullopt,
                                              std::size_t cap = simplex_cap_from_env())
{
    return persistence_diagram(build_filtration(g, max_dim, threshold, cap));
}

// Betti numbers b_0..b_max_dim of the subcomplex of simplices whose bigrade is <= grade.
inline std::vector<std::size_t> betti_at(const Bifiltration& bf, const Grade& grade)
{
    Filtration sub(bf.vertex_count(), bf.max_dim());
    for (std::size_t i = 0; i < bf.size(); ++i)
        if (leq(bf.grade(i), grade))
            sub.push_back(bf.vertices(i), 0.0);
    // bf is ordered by dimension, so faces precede cofaces.
    BoundaryMatrix m = detail::boundary_matrix_impl(sub, true);
    const auto diagram = reduce_and_extract(std::move(m), sub.grades(), bf.max_dim());
    std::vector<std::size_t> betti(bf.max_dim() + 1, 0);
    for (const auto& p : diagram.points())
        if (p.is_essential())
            ++betti[p.dim];
    return betti;
}

inline std::vector<std::size_t> betti_at(const LGraph& g, const Grade& grade, std::size_t max_dim,
                                         std::size_t cap = simplex_cap_from_env())
{
    return betti_at(build_bifiltration(g, max_dim, cap), grade);
}

namespace detail {

// Kuhn's augmenting paths; adjacency from left to right nodes.
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(const std::vector<std::vector<std::size_t>>& adj, std::size_t right)
        : adj_(adj), match_right_(right, npos) {}

    std::size_t max_matching()
    {
        std::size_t size = 0;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            visited_.assign(match_right_.size(), false);
            if (augment(u))
                ++size;
        }
        return size;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool augment(std::size_t u)
    {
        for (std::size_t v : adj_[u]) {
            if (visited_[v])
                continue;
            visited_[v] = true;
            if (match_right_[v] == npos || augment(match_right_[v])) {
                match_right_[v] = u;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> match_right_;
    std::vector<bool> visited_;
};

inline double linf(const PersistencePoint& a, const PersistencePoint& b)
{
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Bottleneck distance between finite point sets.
inline double bottleneck_finite(const std::vector<PersistencePoint>& a, const std::vector<PersistencePoint>& b)
{
    const std::size_t n = a.size(), m = b.size();
    if (n + m == 0)
        return 0.0;
    std::vector<double> candidates{0.0};
    for (const auto& p : a)
        candidates.push_back(p.persistence() / 2);
    for (const auto& q : b)
        candidates.push_back(q.persistence() / 2);
    for (const auto& p : a)
        for (const auto& q : b)
            candidates.push_back(linf(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Left: a_0..a_{n-1}, then diagonal copies of b. Right: b_0..b_{m-1}, then diagonal copies of a.
    auto feasible = [&](double eps) {
        std::vector<std::vector<std::size_t>> adj(n + m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                if (linf(a[i], b[j]) <= eps)
                    adj[i].push_back(j);
            if (a[i].persistence() / 2 <= eps)
                adj[i].push_back(m + i);
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (b[j].persistence() / 2 <= eps)
                adj[n + j].push_back(j);
            for (std::size_t i = 0; i < n; ++i)
                adj[n + j].push_back(m + i);
        }
        BipartiteMatcher matcher(adj, n + m);
        return matcher.max_matching() == n + m;
    };

    std::size_t lo = 0, hi = candidates.size() - 1;  // the largest candidate is always feasible
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (feasible(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

} // namespace detail

// Exact bottleneck distance in one homological dimension. Essential classes
// are matched only with essential classes; unequal counts give infinity.
inline double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2, std::size_t dim)
{
    std::vector<PersistencePoint> fin1, fin2;
    std::vector<double> ess1, ess2;
    for (const auto& p : d1.points())
        if (p.dim == dim)
            (p.is_essential() ? ess1.push_back(p.birth) : fin1.push_back(p));
    for (const auto& p : d2.points())
        if (p.dim == dim)
            (p.is_essential() ? ess2.push_back(p.birth) : fin2.push_back(p));
    if (ess1.size() != ess2.size())
        return kInf;
    std::sort(ess1.begin(), ess1.end());
    std::sort(ess2.begin(), ess2.end());
    double essential = 0.0;
    for (std::size_t i = 0; i < ess1.size(); ++i)
        essential = std::max(essential, std::abs(ess1[i] - ess2[i]));
    return std::max(essential, detail::bottleneck_finite(fin1, fin2));
}

} // namespace mrips

#pragma once

// Brute-force reference computations, kept independent of the filtration and
// reduction code they are used to check:
//   - Vietoris-Rips persistence of a point cloud on subsets (not tuples)
//   - Betti numbers of the sublevel Rips complex at one bigrade
//   - membership in the Cho nerve at grade t, as an exact LP feasibility test

#include <gmpxx.h>

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
#include "lattice.hpp"
#include "lgraph.hpp"
#include "persistence.hpp"

namespace mrips::oracle {

inline constexpr std::size_t kVrOracleMaxPoints = 12;
inline constexpr std::size_t kSublevelOracleMaxVertices = 10;
inline constexpr std::size_t kChoOracleMaxDim = 6;

namespace detail {

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

struct Cell {
    std::vector<std::size_t> vertices;
    double value;
};

// Dense Z/2 boundary of a simplicial complex given as sorted cells.
inline std::vector<std::vector<bool>> dense_boundary(const std::vector<Cell>& cells)
{
    const std::size_t n = cells.size();
    std::vector<std::vector<bool>> cols(n, std::vector<bool>(n, false));
    for (std::size_t j = 0; j < n; ++j) {
        const auto& s = cells[j].vertices;
        if (s.size() < 2)
            continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> f;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop)
                    f.push_back(s[k]);
            for (std::size_t i = 0; i < n; ++i)
                if (cells[i].vertices == f) {
                    cols[j][i] = true;
                    break;
                }
        }
    }
    return cols;
}

inline std::optional<std::size_t> lowest_one(const std::vector<bool>& col)
{
    for (std::size_t i = col.size(); i-- > 0;)
        if (col[i])
            return i;
    return std::nullopt;
}

// Plain left-to-right reduction, no optimizations.
inline std::vector<PersistencePoint> standard_persistence(const std::vector<Cell>& cells, std::size_t max_dim)
{
    auto cols = dense_boundary(cells);
    const std::size_t n = cells.size();
    std::vector<std::optional<std::size_t>> low(n);
    for (std::size_t j = 0; j < n; ++j) {
        while (true) {
            low[j] = lowest_one(cols[j]);
            if (!low[j])
                break;
            std::optional<std::size_t> other;
            for (std::size_t k = 0; k < j; ++k)
                if (low[k] == low[j]) {
                    other = k;
                    break;
                }
            if (!other)
                break;
            for (std::size_t i = 0; i < n; ++i)
                cols[j][i] = cols[j][i] != cols[*other][i];
        }
    }
    std::vector<bool> is_birth_of_pair(n, false), is_death(n, false);
    std::vector<PersistencePoint> out;
    for (std::size_t j = 0; j < n; ++j)
        if (low[j]) {
            is_birth_of_pair[*low[j]] = true;
            is_death[j] = true;
            const std::size_t d = cells[*low[j]].vertices.size() - 1;
            if (d <= max_dim && cells[*low[j]].value < cells[j].value)
                out.push_back({d, cells[*low[j]].value, cells[j].value});
        }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t d = cells[i].vertices.size() - 1;
        if (!is_birth_of_pair[i] && !is_death[i] && d <= max_dim)
            out.push_back({d, cells[i].value, kInf});
    }
    return out;
}

// Rank over Z/2 by Gaussian elimination on rows.
inline std::size_t z2_rank(std::vector<std::vector<bool>> rows)
{
    std::size_t rank = 0;
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c])
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = 0; k < width; ++k)
                    rows[r][k] = rows[r][k] != rows[rank][k];
        ++rank;
    }
    return rank;
}

} // namespace detail

// Persistence of the Vietoris-Rips simplicial complex of a point cloud
// (Euclidean), dimensions 0..max_dim.
inline PersistenceDiagram vr_oracle(const PointCloud& points, std::size_t max_dim = 1)
{
    mrips::detail::require(!points.empty(), "point cloud is empty");
    if (points.size() > kVrOracleMaxPoints)
        throw ResourceLimit("vr_oracle handles at most " + std::to_string(kVrOracleMaxPoints) + " points");
    const std::size_t n = points.size();
    std::vector<detail::Cell> cells;
    for (std::size_t k = 1; k <= std::min(n, max_dim + 2); ++k)
        for (auto& s : detail::subsets(n, k)) {
            double diam = 0.0;
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b)
                    diam = std::max(diam, point_distance(points[s[a]], points[s[b]]));
            cells.push_back({s, diam});
        }
    std::stable_sort(cells.begin(), cells.end(), [](const detail::Cell& a, const detail::Cell& b) {
        return std::tie(a.value, a.vertices) < std::tie(b.value, b.vertices);
    });
    std::stable_sort(cells.begin(), cells.end(), [](const detail::Cell& a, const detail::Cell& b) {
        if (a.value != b.value)
            return a.value < b.value;
        return a.vertices.size() < b.vertices.size();
    });
    return PersistenceDiagram(detail::standard_persistence(cells, max_dim));
}

// Betti numbers of Rips(gamma^{-1}[0, s])_t for a finite metric d.
inline std::vector<std::size_t> sublevel_rips_oracle(const LGraph& d, std::span<const double> gamma, double t, double s,
                                                     std::size_t max_dim)
{
    mrips::detail::require(d.descriptor().is_scalar(), "sublevel_rips_oracle needs a scalar metric");
    mrips::detail::require(gamma.size() == d.size(), "gamma must give one value per vertex");
    if (d.size() > kSublevelOracleMaxVertices)
        throw ResourceLimit("sublevel_rips_oracle handles at most " + std::to_string(kSublevelOracleMaxVertices) + " vertices");
    std::vector<std::size_t> alive;
    for (std::size_t v = 0; v < d.size(); ++v)
        if (gamma[v] <= s)
            alive.push_back(v);
    // simplices[k] = k-simplices as vertex subsets of `alive`
    std::vector<std::vector<std::vector<std::size_t>>> simplices(max_dim + 2);
    for (std::size_t k = 0; k <= max_dim + 1; ++k)
        for (auto& idx : detail::subsets(alive.size(), k + 1)) {
            bool ok = true;
            for (std::size_t a = 0; a < idx.size() && ok; ++a)
                for (std::size_t b = a + 1; b < idx.size() && ok; ++b)
                    ok = d.scalar(alive[idx[a]], alive[idx[b]]) <= t;
            if (ok)
                simplices[k].push_back(idx);
        }
    // rank of the boundary map C_k -> C_{k-1}
    auto boundary_rank = [&](std::size_t k) -> std::size_t {
        if (k == 0 || simplices[k].empty() || simplices[k - 1].empty())
            return 0;
        std::vector<std::vector<bool>> rows;
        for (const auto& s_k : simplices[k]) {
            std::vector<bool> row(simplices[k - 1].size(), false);
            for (std::size_t drop = 0; drop < s_k.size(); ++drop) {
                std::vector<std::size_t> f;
                for (std::size_t a = 0; a < s_k.size(); ++a)
                    if (a != drop)
                        f.push_back(s_k[a]);
                auto it = std::find(simplices[k - 1].begin(), simplices[k - 1].end(), f);
                row[static_cast<std::size_t>(it - simplices[k - 1].begin())] = true;
            }
            rows.push_back(std::move(row));
        }
        return detail::z2_rank(std::move(rows));
    };
    std::vector<std::size_t> betti(max_dim + 1);
    for (std::size_t k = 0; k <= max_dim; ++k)
        betti[k] = simplices[k].size() - boundary_rank(k) - boundary_rank(k + 1);
    return betti;
}

namespace detail {

inline mpq_class exact_power(double x, double p)
{
    if (p == std::floor(p) && p <= 64) {
        const mpq_class base(x);
        mpq_class out(1);
        for (int i = 0; i < static_cast<int>(p); ++i)
            out *= base;
        return out;
    }
    // Non-integer exponents: the rounded double power is taken as exact.
    return mpq_class(std::pow(x, p));
}

// Row r reads: sum_k a[r][k] s_k >= b[r].
struct LinearSystem {
    std::vector<std::vector<int>> a;
    std::vector<mpq_class> b;
};

inline long long integer_determinant(std::vector<std::vector<long long>> m)
{
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

template <class T>
std::vector<T> solve_square(std::vector<std::vector<T>> m, std::vector<T> rhs)
{
    using std::abs;
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(m[i][k]) > abs(m[piv][k]))
                piv = i;
        std::swap(m[k], m[piv]);
        std::swap(rhs[k], rhs[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const T factor = m[i][k] / m[k][k];
            if (factor == 0)
                continue;
            for (std::size_t j = k; j < n; ++j)
                m[i][j] -= factor * m[k][j];
            rhs[i] -= factor * rhs[k];
        }
    }
    std::vector<T> x(n);
    for (std::size_t k = n; k-- > 0;) {
        T acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j)
            acc -= m[k][j] * x[j];
        x[k] = acc / m[k][k];
    }
    return x;
}

// Non-empty iff some basic solution (n tight, independent rows) is feasible;
// the region is bounded, so this is exact.
inline bool polytope_nonempty(const LinearSystem& sys, std::size_t n)
{
    if (n == 0) {
        for (const auto& b : sys.b)
            if (b > 0)
                return false;
        return true;
    }
    const std::size_t rows = sys.a.size();
    std::vector<double> b_approx(rows);
    double scale = 1.0;
    for (std::size_t r = 0; r < rows; ++r) {
        b_approx[r] = sys.b[r].get_d();
        scale = std::max(scale, std::abs(b_approx[r]));
    }
    for (const auto& choice : subsets(rows, n)) {
        std::vector<std::vector<long long>> ai(n, std::vector<long long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                ai[i][k] = sys.a[choice[i]][k];
        if (integer_determinant(ai) == 0)
            continue;
        std::vector<std::vector<long double>> ad(n, std::vector<long double>(n));
        std::vector<long double> bd(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k)
                ad[i][k] = static_cast<long double>(ai[i][k]);
            bd[i] = b_approx[choice[i]];
        }
        const auto xd = solve_square(ad, bd);
        bool clearly_infeasible = false;
        for (std::size_t r = 0; r < rows && !clearly_infeasible; ++r) {
            long double lhs = 0;
            for (std::size_t k = 0; k < n; ++k)
                lhs += sys.a[r][k] * xd[k];
            clearly_infeasible = lhs < b_approx[r] - 1e-9L * scale;
        }
        if (clearly_infeasible)
            continue;
        std::vector<std::vector<mpq_class>> aq(n, std::vector<mpq_class>(n));
        std::vector<mpq_class> bq(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k)
                aq[i][k] = static_cast<long>(ai[i][k]);
            bq[i] = sys.b[choice[i]];
        }
        const auto xq = solve_square(aq, bq);
        bool feasible = true;
        for (std::size_t r = 0; r < rows && feasible; ++r) {
            mpq_class lhs = 0;
            for (std::size_t k = 0; k < n; ++k)
                lhs += sys.a[r][k] * xq[k];
            feasible = lhs >= sys.b[r];
        }
        if (feasible)
            return true;
    }
    return false;
}

} // namespace detail

// Is y in the Cho nerve N^t of a scalar graph under the p-sum? Feasibility of
//   sum_{i<k<=j} s_k >= G(v_i,v_j)^p  (all i <= j),  sum_k s_k <= t^p,  s >= 0
// in the variables s_k = r_k^p.
inline bool cho_membership(const LGraph& g, std::span<const Vertex> y, double t, double p)
{
    mrips::detail::require(g.descriptor().is_scalar(), "cho_membership needs a scalar graph");
    mrips::detail::require(p >= 1.0 && std::isfinite(p), "cho_membership needs a finite p >= 1");
    mrips::detail::require(t >= 0.0, "grade must be non-negative");
    mrips::detail::require(!y.empty(), "empty tuple");
    for (Vertex v : y)
        mrips::detail::require(v < g.size(), "simplex vertex out of range");
    const std::size_t n = y.size() - 1;
    if (n > kChoOracleMaxDim)
        throw ResourceLimit("cho_membership handles simplices of dimension at most " + std::to_string(kChoOracleMaxDim));

    // The empty product is e = 0.
    for (Vertex v : y) {
        const double w = g.scalar(v, v);
        if (w > 0.0 && !(std::isinf(w) && std::isinf(t)))
            return false;
    }

    detail::LinearSystem sys;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<int> row(n, 0);
        row[k] = 1;
        sys.a.push_back(row);
        sys.b.emplace_back(0);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            const double w = g.scalar(y[i], y[j]);
            if (std::isinf(w)) {
                if (std::isinf(t))
                    continue;
                return false;
            }
            std::vector<int> row(n, 0);
            for (std::size_t k = i; k < j; ++k)
                row[k] = 1;  // s_{k+1} in 1-based terms
            sys.a.push_back(row);
            sys.b.push_back(detail::exact_power(w, p));
        }
    if (std::isinf(t))
        return true;
    sys.a.emplace_back(n, -1);
    sys.b.push_back(-detail::exact_power(t, p));
    return detail::polytope_nonempty(sys, n);
}

} // namespace mrips::oracle

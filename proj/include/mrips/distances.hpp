#pragma once

// Graph distance between L-graphs on one vertex set, and the generalized
// network distance between L-graphs on different vertex sets.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "lgraph.hpp"

namespace mrips {

namespace detail {

inline void check_same_vertex_set(const LGraph& g, const LGraph& h)
{
    require(g.size() == h.size(), "graphs have different vertex counts (" + std::to_string(g.size()) + " vs " + std::to_string(h.size()) + ")");
    require(g.descriptor().dims == h.descriptor().dims, "graphs live in different lattices");
}

} // namespace detail

// sup over (v, v') of the least c with H(v,v') <= G(v,v') +_q c.
inline Grade directed_graph_distance(const LGraph& g, const LGraph& h, double q)
{
    detail::check_same_vertex_set(g, h);
    Grade out = Grade::zero(g.descriptor().dims);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out = join(out, left_adjoint(g(i, j), h(i, j), q));
    return out;
}

inline Grade graph_distance(const LGraph& g, const LGraph& h, double q)
{
    return join(directed_graph_distance(g, h, q), directed_graph_distance(h, g, q));
}

struct Correspondence {
    std::vector<std::pair<Vertex, Vertex>> pairs;

    std::vector<Vertex> first() const
    {
        std::vector<Vertex> out;
        for (const auto& [a, b] : pairs)
            out.push_back(a);
        return out;
    }
    std::vector<Vertex> second() const
    {
        std::vector<Vertex> out;
        for (const auto& [a, b] : pairs)
            out.push_back(b);
        return out;
    }

    bool is_valid(std::size_t n1, std::size_t n2) const
    {
        std::vector<bool> hit1(n1, false), hit2(n2, false);
        for (const auto& [a, b] : pairs) {
            if (a >= n1 || b >= n2)
                return false;
            hit1[a] = hit2[b] = true;
        }
        return std::all_of(hit1.begin(), hit1.end(), [](bool x) { return x; }) &&
               std::all_of(hit2.begin(), hit2.end(), [](bool x) { return x; });
    }

    friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

// Distortion of C: graph distance between the two pullbacks to C. Computed
// pairwise without materializing the pullback graphs.
inline Grade distortion(const Correspondence& c, const LGraph& g1, const LGraph& g2, double q)
{
    detail::require(c.is_valid(g1.size(), g2.size()), "relation is not a correspondence (projections must be surjective)");
    detail::require(g1.descriptor().dims == g2.descriptor().dims, "graphs live in different lattices");
    Grade out = Grade::zero(g1.descriptor().dims);
    for (const auto& [a1, a2] : c.pairs)
        for (const auto& [b1, b2] : c.pairs) {
            out = join(out, left_adjoint(g1(a1, b1), g2(a2, b2), q));
            out = join(out, left_adjoint(g2(a2, b2), g1(a1, b1), q));
        }
    return out;
}

inline constexpr std::size_t kDefaultCorrespondenceCap = 20;

namespace detail {

inline void check_grid(std::size_t n1, std::size_t n2, std::size_t cap)
{
    require(n1 > 0 && n2 > 0, "correspondences need non-empty vertex sets");
    if (n1 * n2 > cap || n1 * n2 > 62)
        throw ResourceLimit("correspondence grid " + std::to_string(n1) + "x" + std::to_string(n2) + " exceeds the exhaustive cap of " +
                            std::to_string(cap) + " cells; enable sampling for an upper bound");
}

inline bool mask_is_surjective(std::uint64_t mask, std::size_t n1, std::size_t n2)
{
    std::uint64_t rows = 0, cols = 0;
    for (std::size_t cell = 0; cell < n1 * n2; ++cell)
        if (mask >> cell & 1u) {
            rows |= std::uint64_t{1} << (cell / n2);
            cols |= std::uint64_t{1} << (cell % n2);
        }
    return rows == (std::uint64_t{1} << n1) - 1 && cols == (std::uint64_t{1} << n2) - 1;
}

inline Correspondence from_mask(std::uint64_t mask, std::size_t n1, std::size_t n2)
{
    Correspondence c;
    for (std::size_t cell = 0; cell < n1 * n2; ++cell)
        if (mask >> cell & 1u)
            c.pairs.emplace_back(static_cast<Vertex>(cell / n2), static_cast<Vertex>(cell % n2));
    return c;
}

} // namespace detail

// Every subset of V1 x V2 with surjective projections, ordered by bitmask.
inline std::vector<Correspondence> enumerate_correspondences(std::size_t n1, std::size_t n2, std::size_t cap = kDefaultCorrespondenceCap)
{
    detail::check_grid(n1, n2, cap);
    std::vector<Correspondence> out;
    const std::uint64_t limit = std::uint64_t{1} << (n1 * n2);
    for (std::uint64_t mask = 1; mask < limit; ++mask)
        if (detail::mask_is_surjective(mask, n1, n2))
            out.push_back(detail::from_mask(mask, n1, n2));
    return out;
}

struct NetworkDistanceOptions {
    std::size_t cap = kDefaultCorrespondenceCap;
    bool allow_sampling = false;  // above the cap, return a local-search upper bound
    std::uint64_t seed = 0;
    std::size_t restarts = 64;
};

struct NetworkDistanceResult {
    double value = kInf;
    Correspondence argmin;
    Grade distortion;
    bool exact = true;
};

namespace detail {

// cost[c][c'] = sup-coordinate of the per-pair contribution to the distortion.
inline std::vector<double> pair_costs(const LGraph& g1, const LGraph& g2, double q)
{
    const std::size_t n1 = g1.size(), n2 = g2.size(), cells = n1 * n2;
    std::vector<double> cost(cells * cells);
    for (std::size_t c = 0; c < cells; ++c)
        for (std::size_t d = 0; d < cells; ++d) {
            const Grade& x = g1(c / n2, d / n2);
            const Grade& y = g2(c % n2, d % n2);
            cost[c * cells + d] = std::max(left_adjoint(x, y, q).sup_coordinate(), left_adjoint(y, x, q).sup_coordinate());
        }
    return cost;
}

inline double mask_cost(const std::vector<std::size_t>& cells_in, const std::vector<double>& cost, std::size_t cells, double stop_above)
{
    double worst = 0.0;
    for (std::size_t a : cells_in)
        for (std::size_t b : cells_in) {
            worst = std::max(worst, cost[a * cells + b]);
            if (worst > stop_above)
                return worst;
        }
    return worst;
}

inline NetworkDistanceResult sampled_network_distance(const LGraph& g1, const LGraph& g2, double q, const NetworkDistanceOptions& opt)
{
    const std::size_t n1 = g1.size(), n2 = g2.size(), cells = n1 * n2;
    const auto cost = pair_costs(g1, g2, q);
    std::mt19937_64 rng(opt.seed);
    auto eval = [&](const std::vector<bool>& in) {
        std::vector<std::size_t> list;
        for (std::size_t c = 0; c < cells; ++c)
            if (in[c])
                list.push_back(c);
        return mask_cost(list, cost, cells, kInf);
    };
    auto surjective = [&](const std::vector<bool>& in) {
        std::vector<bool> r(n1, false), s(n2, false);
        for (std::size_t c = 0; c < cells; ++c)
            if (in[c])
                r[c / n2] = s[c % n2] = true;
        return std::all_of(r.begin(), r.end(), [](bool x) { return x; }) && std::all_of(s.begin(), s.end(), [](bool x) { return x; });
    };
    double best = kInf;
    std::vector<bool> best_in;
    for (std::size_t restart = 0; restart < std::max<std::size_t>(opt.restarts, 1); ++restart) {
        std::vector<bool> in(cells, false);
        for (std::size_t a = 0; a < n1; ++a)
            in[a * n2 + rng() % n2] = true;
        for (std::size_t b = 0; b < n2; ++b)
            in[(rng() % n1) * n2 + b] = true;
        double current = eval(in);
        for (bool improved = true; improved;) {
            improved = false;
            for (std::size_t c = 0; c < cells; ++c) {
                in[c] = !in[c];
                if (surjective(in)) {
                    const double v = eval(in);
                    if (v < current) {
                        current = v;
                        improved = true;
                        continue;
                    }
                }
                in[c] = !in[c];
            }
        }
        if (current < best) {
            best = current;
            best_in = in;
        }
    }
    NetworkDistanceResult out;
    out.value = best;
    out.exact = false;
    for (std::size_t c = 0; c < cells; ++c)
        if (best_in[c])
            out.argmin.pairs.emplace_back(static_cast<Vertex>(c / n2), static_cast<Vertex>(c % n2));
    out.distortion = distortion(out.argmin, g1, g2, q);
    return out;
}

} // namespace detail

// min over correspondences C of the sup-coordinate of distortion(C).
inline NetworkDistanceResult network_distance(const LGraph& g1, const LGraph& g2, double q, const NetworkDistanceOptions& opt = {})
{
    detail::require(g1.descriptor().dims == g2.descriptor().dims, "graphs live in different lattices");
    detail::require(g1.size() > 0 && g2.size() > 0, "graphs must have vertices");
    const std::size_t n1 = g1.size(), n2 = g2.size(), cells = n1 * n2;
    if (cells > opt.cap || cells > 62) {
        if (opt.allow_sampling)
            return detail::sampled_network_distance(g1, g2, q, opt);
        detail::check_grid(n1, n2, opt.cap);
    }
    const auto cost = detail::pair_costs(g1, g2, q);
    double best = kInf;
    std::uint64_t best_mask = 0;
    std::vector<std::size_t> cells_in;
    const std::uint64_t limit = std::uint64_t{1} << cells;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        if (!detail::mask_is_surjective(mask, n1, n2))
            continue;
        cells_in.clear();
        for (std::size_t c = 0; c < cells; ++c)
            if (mask >> c & 1u)
                cells_in.push_back(c);
        const double v = detail::mask_cost(cells_in, cost, cells, best);
        if (best_mask == 0 || v < best) {
            best = v;
            best_mask = mask;
        }
    }
    NetworkDistanceResult out;
    out.value = best;
    out.argmin = detail::from_mask(best_mask, n1, n2);
    out.distortion = distortion(out.argmin, g1, g2, q);
    return out;
}

} // namespace mrips

#pragma once

// Seeded data generators: directed random geometric graphs on the flat torus
// with Pareto-distributed radii, and orbits of the linked twist map.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lgraph.hpp"

namespace mrips {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Euclidean distance on [0,1)^d with opposite faces identified.
inline double torus_distance(std::span<const double> a, std::span<const double> b)
{
    detail::require(a.size() == b.size(), "points have different dimensions");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double delta = std::abs(a[i] - b[i]);
        const double wrapped = std::min(delta, 1.0 - delta);
        acc += wrapped * wrapped;
    }
    return std::sqrt(acc);
}

// Truncated Pareto law with density proportional to r^{-alpha} on [r0, 1/2].
struct ParetoRadius {
    double alpha;
    double r0;

    double cdf(double r) const
    {
        if (r <= r0)
            return 0.0;
        if (r >= 0.5)
            return 1.0;
        const double e = 1.0 - alpha;
        return (std::pow(r0, e) - std::pow(r, e)) / (std::pow(r0, e) - std::pow(0.5, e));
    }

    // Inverse CDF at u in [0, 1).
    double quantile(double u) const
    {
        const double e = 1.0 - alpha;
        const double lo = std::pow(r0, e), hi = std::pow(0.5, e);
        const double r = std::pow(lo - u * (lo - hi), 1.0 / e);
        return std::clamp(r, r0, 0.5);
    }
};

// n^{-1/d}, replaced by 1/4 when that is not below 1/2 (tiny n).
inline double default_drgg_r0(std::size_t n, std::size_t d)
{
    const double r = std::pow(static_cast<double>(n), -1.0 / static_cast<double>(d));
    return r < 0.5 ? r : 0.25;
}

struct DrggParams {
    std::size_t n = 100;
    double alpha = 6.0;
    std::size_t d = 2;
    double r0 = -1.0;  // negative: use default_drgg_r0(n, d)
    std::uint64_t seed = 0;

    double effective_r0() const { return r0 < 0.0 ? default_drgg_r0(n, d) : r0; }

    void validate() const
    {
        detail::require(n >= 1, "drgg needs n >= 1");
        detail::require(d >= 1, "drgg needs d >= 1");
        detail::require(alpha > static_cast<double>(d) + 1.0, "drgg needs alpha > d + 1");
        const double r = effective_r0();
        detail::require(r > 0.0 && r < 0.5, "drgg needs 0 < r0 < 1/2");
    }
};

struct DrggSample {
    PointCloud points;
    std::vector<double> radii;
    WeightedDigraph graph;
};

// Full sample including the latent points and radii.
inline DrggSample drgg_sample(const DrggParams& params)
{
    params.validate();
    Rng rng(params.seed);
    DrggSample out;
    out.points.assign(params.n, Point(params.d));
    for (auto& p : out.points)
        for (auto& x : p)
            x = rng.uniform();
    const ParetoRadius law{params.alpha, params.effective_r0()};
    out.radii.resize(params.n);
    for (auto& r : out.radii)
        r = law.quantile(rng.uniform());
    out.graph.n = params.n;
    for (std::size_t u = 0; u < params.n; ++u)
        for (std::size_t v = 0; v < params.n; ++v) {
            if (u == v)
                continue;
            const double dist = torus_distance(out.points[u], out.points[v]);
            if (dist <= out.radii[v])
                out.graph.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), dist});
        }
    return out;
}

inline WeightedDigraph drgg(const DrggParams& params)
{
    return drgg_sample(params).graph;
}

inline constexpr std::size_t kDefaultTwistIterations = 100;

// Orbit of (x0, y0) under the linked twist map, start included
// (iterations + 1 points).
inline PointCloud linked_twist_from(double r, std::size_t iterations, double x0, double y0)
{
    detail::require(r > 0.0, "twist parameter r must be positive");
    detail::require(iterations >= 1, "twist needs at least one iteration");
    detail::require(x0 >= 0.0 && x0 < 1.0 && y0 >= 0.0 && y0 < 1.0, "twist start must lie in [0,1)^2");
    auto wrap = [](double v) {
        v -= std::floor(v);
        return v >= 1.0 ? 0.0 : v;
    };
    PointCloud out;
    out.reserve(iterations + 1);
    double x = x0, y = y0;
    out.push_back({x, y});
    for (std::size_t i = 0; i < iterations; ++i) {
        x = wrap(x + r * y * (1.0 - y));
        y = wrap(y + r * x * (1.0 - x));
        out.push_back({x, y});
    }
    return out;
}

inline PointCloud linked_twist(double r, std::size_t iterations = kDefaultTwistIterations, std::uint64_t seed = 0)
{
    Rng rng(seed);
    const double x0 = rng.uniform();
    const double y0 = rng.uniform();
    return linked_twist_from(r, iterations, x0, y0);
}

} // namespace mrips

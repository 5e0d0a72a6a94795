#pragma once

// Seeded random instances and brute-force helpers shared by the test suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <mrips/mrips.hpp>

namespace mrips::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    bool chance(double prob) { return uniform() < prob; }
    // Small integers make many ties, which is where ordering bugs hide.
    double small_int(int lo, int hi) { return static_cast<double>(lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1)))); }
    std::mt19937_64& engine() { return rng_; }

    // 0-diagonal directed graph; off-diagonal entries random, some infinite.
    LGraph scalar_graph(std::size_t n, double p, double inf_prob = 0.0, bool integer_weights = false)
    {
        LGraph g(LatticeDescriptor::scalar(p, 1.0), n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    g.set(i, j, Grade(chance(inf_prob) ? kInf : (integer_weights ? small_int(1, 5) : uniform(0.1, 5.0))));
        return g;
    }

    LGraph symmetric_graph(std::size_t n, double p, bool integer_weights = false)
    {
        LGraph g(LatticeDescriptor::scalar(p, 1.0), n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double w = integer_weights ? small_int(1, 5) : uniform(0.1, 5.0);
                g.set(i, j, Grade(w));
                g.set(j, i, Grade(w));
            }
        return g;
    }

    PointCloud cloud(std::size_t n, std::size_t dim, bool on_grid = false)
    {
        PointCloud pts(n, Point(dim));
        for (auto& p : pts)
            for (auto& x : p)
                x = on_grid ? small_int(0, 4) : uniform();
        return pts;
    }

    std::vector<double> gamma(std::size_t n, bool integer_values = false)
    {
        std::vector<double> out(n);
        for (auto& x : out)
            x = integer_values ? small_int(0, 4) : uniform(0.0, 2.0);
        return out;
    }

    // Random tuple of the given length with no adjacent repeats.
    Simplex tuple(std::size_t n, std::size_t length)
    {
        Simplex y;
        while (y.size() < length) {
            const auto v = static_cast<Vertex>(index(n));
            if (y.empty() || y.back() != v)
                y.push_back(v);
        }
        return y;
    }

private:
    std::mt19937_64 rng_;
};

// Scalar metric graph from integer-valued random points (Chebyshev keeps it exact).
inline LGraph random_metric(Gen& gen, std::size_t n, Metric metric = Metric::chebyshev)
{
    return from_point_cloud(gen.cloud(n, 2, true), metric);
}

// max over all non-empty subsequences of the chain value: the definition of
// the filtration value, without the recurrence.
inline Grade brute_force_value(const LGraph& g, std::span<const Vertex> y)
{
    const std::size_t n = y.size();
    Grade best = Grade::zero(g.descriptor().dims);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u)
                sub.push_back(y[i]);
        // chain value, written out: constant tuples give the diagonal, otherwise
        // the product over adjacent distinct pairs
        bool constant = true;
        Grade acc = Grade::zero(g.descriptor().dims);
        for (std::size_t i = 1; i < sub.size(); ++i)
            if (sub[i - 1] != sub[i]) {
                constant = false;
                acc = psum(acc, g(sub[i - 1], sub[i]), g.descriptor().product_p);
            }
        best = join(best, constant ? g(sub[0], sub[0]) : acc);
    }
    return best;
}

// All tuples of the given length with no adjacent repeats.
inline std::vector<Simplex> all_tuples(std::size_t n, std::size_t length)
{
    std::vector<Simplex> out;
    Simplex cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = 0; v < n; ++v)
            if (cur.empty() || cur.back() != v) {
                cur.push_back(v);
                self(self);
                cur.pop_back();
            }
    };
    rec(rec);
    return out;
}

inline bool near(double a, double b, double rel = 1e-9)
{
    if (a == b)
        return true;
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace mrips::testing

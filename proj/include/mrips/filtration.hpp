#pragma once

// Monoidal Rips filtrations of L-graphs.
//
// Simplices are vertex tuples with no two adjacent entries equal (the
// degenerate ones are dropped, leaving a Delta set with the same homology).
// The grade of a tuple y is the join of the chain product over every
// order-preserving subsequence of y. It is computed by the recurrence
//
//     f(y) = join( f(d_0 y), ..., f(d_n y), chain(y) )
//
// where a face d_i y that acquires an adjacent repeat takes the grade of
// its collapsed tuple.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "lgraph.hpp"

namespace mrips {

using Simplex = std::vector<Vertex>;

inline constexpr std::size_t kDefaultSimplexCap = 50'000'000;

// Cap from MRIPS_SIMPLEX_CAP when set, else the default.
inline std::size_t simplex_cap_from_env()
{
    if (const char* env = std::getenv("MRIPS_SIMPLEX_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultSimplexCap;
}

inline bool is_nondegenerate(std::span<const Vertex> y)
{
    for (std::size_t i = 1; i < y.size(); ++i)
        if (y[i - 1] == y[i])
            return false;
    return !y.empty();
}

// d_i: omit entry i.
inline Simplex face(std::span<const Vertex> y, std::size_t i)
{
    Simplex out;
    out.reserve(y.size() - 1);
    for (std::size_t k = 0; k < y.size(); ++k)
        if (k != i)
            out.push_back(y[k]);
    return out;
}

inline Simplex collapse_repeats(std::span<const Vertex> y)
{
    Simplex out;
    for (Vertex v : y)
        if (out.empty() || out.back() != v)
            out.push_back(v);
    return out;
}

// L(y): G(v,v) for a constant tuple, otherwise the product of G over the
// adjacent pairs that differ.
inline Grade chain_value(const LGraph& g, std::span<const Vertex> y)
{
    detail::require(!y.empty(), "empty tuple");
    for (Vertex v : y)
        detail::require(v < g.size(), "simplex vertex out of range");
    const double p = g.descriptor().product_p;
    Grade acc = Grade::zero(g.descriptor().dims);
    bool constant = true;
    for (std::size_t i = 1; i < y.size(); ++i) {
        if (y[i - 1] == y[i])
            continue;
        constant = false;
        acc = psum(acc, g(y[i - 1], y[i]), p);
    }
    return constant ? g(y[0], y[0]) : acc;
}

inline double chain_value_scalar(const LGraph& g, std::span<const Vertex> y)
{
    const double p = g.descriptor().product_p;
    double acc = 0.0;
    bool constant = true;
    for (std::size_t i = 1; i < y.size(); ++i) {
        if (y[i - 1] == y[i])
            continue;
        constant = false;
        acc = psum(acc, g.scalar(y[i - 1], y[i]), p);
    }
    return constant ? g.scalar(y[0], y[0]) : acc;
}

// One step of the recurrence: join of the codimension-1 face grades and L(y).
inline Grade filtration_value(const LGraph& g, std::span<const Vertex> y, std::span<const Grade> face_values)
{
    if (y.size() > 1 && face_values.size() != y.size())
        throw std::logic_error("filtration_value: expected " + std::to_string(y.size()) + " face values, got " + std::to_string(face_values.size()));
    Grade out = chain_value(g, y);
    for (const Grade& f : face_values)
        out = join(out, f);
    return out;
}

// Minimal bigrade of y in the bifiltration of a (max, +_q) product graph:
// the join of every G(v_i, v_i) and every G(v_i, v_j), i < j, v_i != v_j.
inline Grade bigrade_value(const LGraph& g, std::span<const Vertex> y)
{
    detail::require(!g.descriptor().is_scalar(), "bigrade_value needs a product lattice");
    detail::require(g.descriptor().product_p == kInf, "minimal bigrades are only computed for the max product (p = inf)");
    detail::require(!y.empty(), "empty tuple");
    Grade out = Grade::zero(g.descriptor().dims);
    for (std::size_t i = 0; i < y.size(); ++i) {
        detail::require(y[i] < g.size(), "simplex vertex out of range");
        out = join(out, g(y[i], y[i]));
        for (std::size_t j = i + 1; j < y.size(); ++j)
            if (y[i] != y[j])
                out = join(out, g(y[i], y[j]));
    }
    return out;
}

// A list of simplices with grades, flat storage. Value is double for scalar
// filtrations and Grade for multigraded ones.
template <class Value>
class BasicFiltration {
public:
    BasicFiltration() = default;
    BasicFiltration(std::size_t vertex_count, std::size_t max_dim) : vertex_count_(vertex_count), max_dim_(max_dim) {}

    std::size_t size() const { return grades_.size(); }
    bool empty() const { return grades_.empty(); }
    std::size_t dim(std::size_t i) const { return dims_[i]; }
    std::span<const Vertex> vertices(std::size_t i) const { return {vertex_data_.data() + offsets_[i], dims_[i] + 1u}; }
    const Value& grade(std::size_t i) const { return grades_[i]; }
    std::span<const Value> grades() const { return grades_; }

    // Homology is meaningful through max_dim; simplices go up to max_dim + 1.
    std::size_t max_dim() const { return max_dim_; }
    std::size_t vertex_count() const { return vertex_count_; }
    const std::optional<double>& threshold() const { return threshold_; }
    void set_threshold(std::optional<double> t) { threshold_ = t; }

    void push_back(std::span<const Vertex> y, const Value& grade)
    {
        detail::require(!y.empty() && y.size() <= 256, "simplex size out of range");
        offsets_.push_back(vertex_data_.size());
        dims_.push_back(static_cast<std::uint8_t>(y.size() - 1));
        vertex_data_.insert(vertex_data_.end(), y.begin(), y.end());
        grades_.push_back(grade);
    }

    void reserve(std::size_t n)
    {
        offsets_.reserve(n);
        dims_.reserve(n);
        grades_.reserve(n);
    }

    std::size_t count_in_dim(std::size_t d) const
    {
        return static_cast<std::size_t>(std::count(dims_.begin(), dims_.end(), d));
    }

private:
    std::size_t vertex_count_ = 0;
    std::size_t max_dim_ = 0;
    std::optional<double> threshold_;
    std::vector<Vertex> vertex_data_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint8_t> dims_;
    std::vector<Value> grades_;
};

using Filtration = BasicFiltration<double>;
using Bifiltration = BasicFiltration<Grade>;

namespace detail {

// Base-m integer code of a tuple; order-preserving for tuples of equal length.
inline std::uint64_t tuple_key(std::span<const Vertex> y, std::uint64_t m)
{
    std::uint64_t key = 0;
    for (Vertex v : y)
        key = key * m + v;
    return key;
}

template <class Value>
struct Layer {
    std::size_t dim = 0;
    std::vector<std::uint64_t> keys;  // ascending
    std::vector<Vertex> vertices;     // (dim+1) per simplex
    std::vector<Value> values;

    std::size_t size() const { return keys.size(); }
    std::span<const Vertex> simplex(std::size_t i) const { return {vertices.data() + i * (dim + 1), dim + 1}; }
    std::optional<std::size_t> find(std::uint64_t key) const
    {
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it == keys.end() || *it != key)
            return std::nullopt;
        return static_cast<std::size_t>(it - keys.begin());
    }
};

inline void check_key_range(std::size_t m, std::size_t top_dim)
{
    long double range = 1.0L;
    for (std::size_t k = 0; k <= top_dim; ++k)
        range *= static_cast<long double>(m);
    if (range >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
        throw ResourceLimit("vertex count " + std::to_string(m) + " too large for dimension " + std::to_string(top_dim));
}

// Enumerate all admitted non-degenerate tuples of dimension 0..top_dim.
// `admit` must be down-closed: if a grade is rejected, so is every larger one.
template <class Value, class ChainFn, class JoinFn, class AdmitFn>
std::vector<Layer<Value>> enumerate_layers(std::size_t m, std::size_t top_dim, ChainFn chain, JoinFn join_fn,
                                           AdmitFn admit, std::size_t cap)
{
    check_key_range(m, top_dim);
    std::vector<Layer<Value>> layers(top_dim + 1);
    std::size_t total = 0;
    auto count_one = [&] {
        if (++total > cap)
            throw ResourceLimit("filtration exceeds the simplex cap of " + std::to_string(cap) + " simplices");
    };

    Layer<Value>& base = layers[0];
    for (Vertex v = 0; v < m; ++v) {
        const Vertex y[1] = {v};
        Value val = chain(std::span<const Vertex>(y, 1));
        if (!admit(val))
            continue;
        count_one();
        base.keys.push_back(v);
        base.vertices.push_back(v);
        base.values.push_back(val);
    }

    Simplex y, f;
    for (std::size_t k = 1; k <= top_dim; ++k) {
        const Layer<Value>& prev = layers[k - 1];
        Layer<Value>& cur = layers[k];
        cur.dim = k;
        y.resize(k + 1);
        for (std::size_t idx = 0; idx < prev.size(); ++idx) {
            auto head = prev.simplex(idx);
            std::copy(head.begin(), head.end(), y.begin());
            for (Vertex w = 0; w < m; ++w) {
                if (w == y[k - 1])
                    continue;
                y[k] = w;
                // d_k y is the prefix, already known to be admitted.
                Value val = join_fn(chain(std::span<const Vertex>(y)), prev.values[idx]);
                bool present = true;
                for (std::size_t i = 0; i < k && present; ++i) {
                    const bool collapses = i > 0 && y[i - 1] == y[i + 1];
                    f.clear();
                    for (std::size_t j = 0; j <= k; ++j)
                        if (j != i && !(collapses && j == i + 1))
                            f.push_back(y[j]);
                    const Layer<Value>& target = layers[f.size() - 1];
                    auto pos = target.find(tuple_key(f, m));
                    if (!pos) {
                        present = false;
                        break;
                    }
                    val = join_fn(val, target.values[*pos]);
                }
                if (!present || !admit(val))
                    continue;
                count_one();
                cur.keys.push_back(tuple_key(y, m));
                cur.vertices.insert(cur.vertices.end(), y.begin(), y.end());
                cur.values.push_back(val);
            }
        }
    }
    return layers;
}

template <class Value, class Less>
BasicFiltration<Value> assemble(const std::vector<Layer<Value>>& layers, std::size_t m, std::size_t max_dim, Less less)
{
    struct Ref {
        std::uint32_t dim;
        std::size_t index;
    };
    std::vector<Ref> refs;
    std::size_t total = 0;
    for (const auto& layer : layers)
        total += layer.size();
    refs.reserve(total);
    for (const auto& layer : layers)
        for (std::size_t i = 0; i < layer.size(); ++i)
            refs.push_back({static_cast<std::uint32_t>(layer.dim), i});
    std::stable_sort(refs.begin(), refs.end(), [&](const Ref& a, const Ref& b) {
        const Value& ga = layers[a.dim].values[a.index];
        const Value& gb = layers[b.dim].values[b.index];
        if (less(ga, gb))
            return true;
        if (less(gb, ga))
            return false;
        if (a.dim != b.dim)
            return a.dim < b.dim;
        return layers[a.dim].keys[a.index] < layers[b.dim].keys[b.index];
    });
    BasicFiltration<Value> out(m, max_dim);
    out.reserve(refs.size());
    for (const Ref& r : refs)
        out.push_back(layers[r.dim].simplex(r.index), layers[r.dim].values[r.index]);
    return out;
}

} // namespace detail

// Scalar p-Rips filtration with simplices through dimension max_dim + 1,
// sorted by (grade, dimension, lexicographic vertices). Without a threshold
// only simplices of finite grade are kept.
inline Filtration build_filtration(const LGraph& g, std::size_t max_dim, std::optional<double> threshold = std::nullopt,
                                   std::size_t cap = simplex_cap_from_env())
{
    detail::require(g.descriptor().is_scalar(), "sorted filtrations need a scalar lattice; use slice_filtration for product lattices");
    detail::require(g.size() > 0, "graph has no vertices");
    auto chain = [&g](std::span<const Vertex> y) { return chain_value_scalar(g, y); };
    auto join_fn = [](double a, double b) { return std::max(a, b); };
    auto admit = [&threshold](double v) { return threshold ? v <= *threshold : v < kInf; };
    auto layers = detail::enumerate_layers<double>(g.size(), max_dim + 1, chain, join_fn, admit, cap);
    Filtration out = detail::assemble(layers, g.size(), max_dim, std::less<double>{});
    out.set_threshold(threshold);
    return out;
}

// All finite-grade simplices of a product-lattice graph with their minimal
// grades, ordered by (dimension, lexicographic vertices).
inline Bifiltration build_bifiltration(const LGraph& g, std::size_t max_dim, std::size_t cap = simplex_cap_from_env())
{
    detail::require(!g.descriptor().is_scalar(), "bifiltrations need a product lattice");
    detail::require(g.descriptor().product_p == kInf, "multigraded filtrations are only built for the max product (p = inf)");
    detail::require(g.size() > 0, "graph has no vertices");
    auto chain = [&g](std::span<const Vertex> y) { return chain_value(g, y); };
    auto join_fn = [](const Grade& a, const Grade& b) { return join(a, b); };
    auto admit = [](const Grade& v) { return v.is_finite(); };
    auto layers = detail::enumerate_layers<Grade>(g.size(), max_dim + 1, chain, join_fn, admit, cap);
    // Grades are only partially ordered; order purely by dimension then vertices.
    return detail::assemble(layers, g.size(), max_dim, [](const Grade&, const Grade&) { return false; });
}

// Restriction of a bifiltration to the line t -> (t, t) + offset: a simplex
// with bigrade (b0, b1) enters at max(b0 - offset0, b1 - offset1).
inline Filtration slice_filtration(const Bifiltration& bf, std::span<const double> offset)
{
    detail::require(offset.size() == 2, "slice offset must be a pair");
    struct Entry {
        double grade;
        std::size_t index;
    };
    std::vector<Entry> entries;
    entries.reserve(bf.size());
    for (std::size_t i = 0; i < bf.size(); ++i) {
        const Grade& b = bf.grade(i);
        detail::require(b.dims() == 2, "slice_filtration expects bigrades");
        entries.push_back({std::max(b[0] - offset[0], b[1] - offset[1]), i});
    }
    // bf is ordered by (dim, lex), so a stable sort by grade yields (grade, dim, lex).
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.grade < b.grade; });
    Filtration out(bf.vertex_count(), bf.max_dim());
    out.reserve(entries.size());
    for (const auto& e : entries)
        out.push_back(bf.vertices(e.index), e.grade);
    return out;
}

inline Filtration slice_filtration(const LGraph& g, std::span<const double> offset, std::size_t max_dim,
                                   std::size_t cap = simplex_cap_from_env())
{
    return slice_filtration(build_bifiltration(g, max_dim, cap), offset);
}

} // namespace mrips

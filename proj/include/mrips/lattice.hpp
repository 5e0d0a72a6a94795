#pragma once

// Grading lattices [0,inf]^d with p-sum products.
//
// A Grade is a point of [0,inf]^d under the product order. Two commutative
// products act on it coordinatewise: the filtration product (a p-sum) and
// the interleaving product (a q-sum, q <= p). Infinity is stored exactly.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>

#include "errors.hpp"

namespace mrips {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kMaxGradeDims = 8;

class Grade {
public:
    Grade() = default;
    explicit Grade(double value) : dims_(1) { coords_[0] = value; }
    Grade(std::initializer_list<double> values) : dims_(values.size())
    {
        detail::require(dims_ >= 1 && dims_ <= kMaxGradeDims, "grade must have 1.." + std::to_string(kMaxGradeDims) + " coordinates");
        std::copy(values.begin(), values.end(), coords_.begin());
    }

    static Grade filled(std::size_t dims, double value)
    {
        detail::require(dims >= 1 && dims <= kMaxGradeDims, "grade must have 1.." + std::to_string(kMaxGradeDims) + " coordinates");
        Grade g;
        g.dims_ = dims;
        std::fill_n(g.coords_.begin(), dims, value);
        return g;
    }
    static Grade zero(std::size_t dims) { return filled(dims, 0.0); }

    std::size_t dims() const { return dims_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }
    std::span<const double> coords() const { return {coords_.data(), dims_}; }

    bool is_finite() const
    {
        return std::all_of(coords_.begin(), coords_.begin() + dims_, [](double c) { return std::isfinite(c); });
    }
    bool is_zero() const
    {
        return std::all_of(coords_.begin(), coords_.begin() + dims_, [](double c) { return c == 0.0; });
    }
    // Projection [0,inf]^d -> [0,inf], (t_1..t_d) -> max t_i.
    double sup_coordinate() const { return *std::max_element(coords_.begin(), coords_.begin() + dims_); }

    friend bool operator==(const Grade& a, const Grade& b)
    {
        return a.dims_ == b.dims_ && std::equal(a.coords_.begin(), a.coords_.begin() + a.dims_, b.coords_.begin());
    }

private:
    std::size_t dims_ = 1;
    std::array<double, kMaxGradeDims> coords_{};
};

// Product order.
inline bool leq(const Grade& a, const Grade& b)
{
    if (a.dims() != b.dims())
        return false;
    for (std::size_t i = 0; i < a.dims(); ++i)
        if (!(a[i] <= b[i]))
            return false;
    return true;
}

struct LatticeDescriptor {
    std::size_t dims = 1;     // 1 is the scalar lattice [0,inf]
    double product_p = kInf;  // filtration product: +_p
    double interleave_q = 1;  // interleaving product: +_q

    static LatticeDescriptor scalar(double p, double q = 1.0) { return {1, p, q}; }
    static LatticeDescriptor product(std::size_t d, double p, double q = 1.0) { return {d, p, q}; }

    bool is_scalar() const { return dims == 1; }

    void validate() const
    {
        detail::require(dims >= 1 && dims <= kMaxGradeDims, "lattice dimension must be in 1.." + std::to_string(kMaxGradeDims));
        detail::require(product_p >= 1.0, "product exponent p must be >= 1");
        detail::require(interleave_q >= 1.0, "interleaving exponent q must be >= 1");
        detail::require(interleave_q <= product_p, "interleaving exponent q must not exceed p");
    }

    bool conforms(const Grade& g) const
    {
        if (g.dims() != dims)
            return false;
        return std::all_of(g.coords().begin(), g.coords().end(), [](double c) { return c >= 0.0; });
    }

    friend bool operator==(const LatticeDescriptor&, const LatticeDescriptor&) = default;
};

namespace detail {

inline void check_exponent(double p)
{
    require(p >= 1.0, "exponent must lie in [1, inf], got " + std::to_string(p));
}

inline void check_same_dims(const Grade& a, const Grade& b)
{
    require(a.dims() == b.dims(), "grades have different dimensions");
}

} // namespace detail

// a +_p b = (a^p + b^p)^(1/p); max for p = inf.
inline double psum(double a, double b, double p)
{
    detail::check_exponent(p);
    if (std::isinf(a) || std::isinf(b))
        return kInf;
    if (p == kInf)
        return std::max(a, b);
    if (p == 1.0)
        return a + b;
    if (a == 0.0)
        return b;
    if (b == 0.0)
        return a;
    if (p == 2.0)
        return std::hypot(a, b);
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi * std::pow(1.0 + std::pow(lo / hi, p), 1.0 / p);
}

inline Grade psum(const Grade& a, const Grade& b, double p)
{
    detail::check_same_dims(a, b);
    Grade out = a;
    for (std::size_t i = 0; i < a.dims(); ++i)
        out[i] = psum(a[i], b[i], p);
    return out;
}

// t^{(x)k} = k^(1/p) t.
inline double kfold(double t, std::size_t k, double p)
{
    detail::check_exponent(p);
    detail::require(k >= 1, "k-fold product needs k >= 1");
    if (p == kInf || k == 1 || std::isinf(t))
        return t;
    if (p == 1.0)
        return static_cast<double>(k) * t;
    return std::pow(static_cast<double>(k), 1.0 / p) * t;
}

inline Grade kfold(const Grade& t, std::size_t k, double p)
{
    Grade out = t;
    for (std::size_t i = 0; i < t.dims(); ++i)
        out[i] = kfold(t[i], k, p);
    return out;
}

// Least c with s <= t +_q c, i.e. max{0, s^q - t^q}^(1/q).
inline double left_adjoint(double t, double s, double q)
{
    detail::check_exponent(q);
    if (s <= t)
        return 0.0;
    if (t == 0.0 || std::isinf(s) || q == kInf)
        return s;
    if (q == 1.0)
        return s - t;
    if (q == 2.0)
        return std::sqrt((s - t) * (s + t));
    return s * std::pow(1.0 - std::pow(t / s, q), 1.0 / q);
}

inline Grade left_adjoint(const Grade& t, const Grade& s, double q)
{
    detail::check_same_dims(t, s);
    Grade out = t;
    for (std::size_t i = 0; i < t.dims(); ++i)
        out[i] = left_adjoint(t[i], s[i], q);
    return out;
}

inline Grade join(const Grade& a, const Grade& b)
{
    detail::check_same_dims(a, b);
    Grade out = a;
    for (std::size_t i = 0; i < a.dims(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

} // namespace mrips

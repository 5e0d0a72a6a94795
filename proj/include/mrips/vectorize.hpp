#pragma once

// Persistence images: diagram points (birth, persistence) smeared with
// weighted Gaussians and integrated exactly over each pixel.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "persistence.hpp"

namespace mrips {

enum class ImageWeight { linear, constant };

inline std::string to_string(ImageWeight w)
{
    return w == ImageWeight::linear ? "linear" : "constant";
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    friend bool operator==(const Range&, const Range&) = default;
};

struct ImageParams {
    std::size_t dim = 0;
    std::size_t rows = 20;  // persistence axis, increasing with the row index
    std::size_t cols = 20;  // birth axis
    double sigma = 0.03;
    bool sigma_is_variance = false;  // by default sigma is the standard deviation
    Range birth_range;
    Range persistence_range;
    ImageWeight weight = ImageWeight::linear;
};

// Row-major grid. One-dimensional images have rows == 1.
struct PersistenceImage {
    std::size_t dim = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    double sigma = 0.0;
    Range birth_range;
    Range persistence_range;
    ImageWeight weight = ImageWeight::constant;
    std::vector<double> values;
    std::size_t essential_points = 0;  // essential classes not painted into this image

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double total() const
    {
        double s = 0.0;
        for (double v : values)
            s += v;
        return s;
    }
};

namespace detail {

inline void check_range(const Range& r, const char* what)
{
    require(std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo < r.hi, std::string(what) + " range must be finite with lo < hi");
}

inline double standard_deviation(double sigma, bool is_variance)
{
    require(sigma > 0.0 && std::isfinite(sigma), "sigma must be positive");
    return is_variance ? std::sqrt(sigma) : sigma;
}

// Gaussian mass of N(mu, sd^2) in each of `bins` equal cells of `range`.
inline std::vector<double> cell_masses(double mu, double sd, const Range& range, std::size_t bins)
{
    std::vector<double> out(bins);
    const double width = (range.hi - range.lo) / static_cast<double>(bins);
    const double scale = 1.0 / (sd * std::sqrt(2.0));
    double prev = std::erf((range.lo - mu) * scale);
    for (std::size_t i = 0; i < bins; ++i) {
        const double edge = i + 1 == bins ? range.hi : range.lo + width * static_cast<double>(i + 1);
        const double cur = std::erf((edge - mu) * scale);
        out[i] = 0.5 * (cur - prev);
        prev = cur;
    }
    return out;
}

inline double point_weight(ImageWeight w, double persistence, const Range& persistence_range)
{
    if (w == ImageWeight::constant)
        return 1.0;
    return persistence / persistence_range.hi;
}

} // namespace detail

// Finite points of dimension params.dim. Essential points are counted in
// essential_points; paint them with essential_image.
inline PersistenceImage persistence_image(const PersistenceDiagram& d, const ImageParams& params)
{
    detail::require(params.rows > 0 && params.cols > 0, "image resolution must be positive");
    detail::check_range(params.birth_range, "birth");
    detail::check_range(params.persistence_range, "persistence");
    if (params.weight == ImageWeight::linear)
        detail::require(params.persistence_range.hi > 0.0, "linear weight needs a positive persistence range maximum");
    const double sd = detail::standard_deviation(params.sigma, params.sigma_is_variance);

    PersistenceImage img;
    img.dim = params.dim;
    img.rows = params.rows;
    img.cols = params.cols;
    img.sigma = params.sigma;
    img.birth_range = params.birth_range;
    img.persistence_range = params.persistence_range;
    img.weight = params.weight;
    img.values.assign(params.rows * params.cols, 0.0);
    for (const auto& p : d.points()) {
        if (p.dim != params.dim)
            continue;
        if (p.is_essential()) {
            ++img.essential_points;
            continue;
        }
        const double pers = p.persistence();
        const double w = detail::point_weight(params.weight, pers, params.persistence_range);
        if (w == 0.0)
            continue;
        const auto along_birth = detail::cell_masses(p.birth, sd, params.birth_range, params.cols);
        const auto along_pers = detail::cell_masses(pers, sd, params.persistence_range, params.rows);
        for (std::size_t r = 0; r < params.rows; ++r)
            for (std::size_t c = 0; c < params.cols; ++c)
                img.values[r * params.cols + c] += w * along_pers[r] * along_birth[c];
    }
    return img;
}

// 1-D image over persistence of the finite points (for point-cloud H0, where
// every birth is 0, this is an image over deaths).
inline PersistenceImage persistence_line_image(const PersistenceDiagram& d, std::size_t dim, std::size_t bins, double sigma,
                                               Range persistence_range, ImageWeight weight = ImageWeight::linear,
                                               bool sigma_is_variance = false)
{
    detail::require(bins > 0, "image resolution must be positive");
    detail::check_range(persistence_range, "persistence");
    if (weight == ImageWeight::linear)
        detail::require(persistence_range.hi > 0.0, "linear weight needs a positive persistence range maximum");
    const double sd = detail::standard_deviation(sigma, sigma_is_variance);
    PersistenceImage img;
    img.dim = dim;
    img.rows = 1;
    img.cols = bins;
    img.sigma = sigma;
    img.persistence_range = persistence_range;
    img.weight = weight;
    img.values.assign(bins, 0.0);
    for (const auto& p : d.points()) {
        if (p.dim != dim)
            continue;
        if (p.is_essential()) {
            ++img.essential_points;
            continue;
        }
        const double w = detail::point_weight(weight, p.persistence(), persistence_range);
        const auto mass = detail::cell_masses(p.persistence(), sd, persistence_range, bins);
        for (std::size_t c = 0; c < bins; ++c)
            img.values[c] += w * mass[c];
    }
    return img;
}

// 1-D image over births of the essential points, constant weight.
inline PersistenceImage essential_image(const PersistenceDiagram& d, std::size_t dim, std::size_t bins, double sigma, Range birth_range,
                                        bool sigma_is_variance = false)
{
    detail::require(bins > 0, "image resolution must be positive");
    detail::check_range(birth_range, "birth");
    const double sd = detail::standard_deviation(sigma, sigma_is_variance);
    PersistenceImage img;
    img.dim = dim;
    img.rows = 1;
    img.cols = bins;
    img.sigma = sigma;
    img.birth_range = birth_range;
    img.weight = ImageWeight::constant;
    img.values.assign(bins, 0.0);
    for (const auto& p : d.points()) {
        if (p.dim != dim || !p.is_essential())
            continue;
        const auto mass = detail::cell_masses(p.birth, sd, birth_range, bins);
        for (std::size_t c = 0; c < bins; ++c)
            img.values[c] += mass[c];
    }
    return img;
}

// Row-major flattening, images in the given order.
inline std::vector<double> concat_features(std::span<const PersistenceImage> images)
{
    std::vector<double> out;
    for (const auto& img : images)
        out.insert(out.end(), img.values.begin(), img.values.end());
    return out;
}

} // namespace mrips

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "support.hpp"

using namespace mrips;

namespace {

ImageParams unit_params(std::size_t dim, std::size_t res)
{
    ImageParams p;
    p.dim = dim;
    p.rows = p.cols = res;
    p.sigma = 0.05;
    p.birth_range = {0.0, 1.0};
    p.persistence_range = {0.0, 1.0};
    return p;
}

} // namespace

TEST(PersistenceImage, EmptyDiagramIsZero)
{
    const auto img = persistence_image(PersistenceDiagram{}, unit_params(1, 10));
    EXPECT_EQ(img.values.size(), 100u);
    EXPECT_EQ(img.total(), 0.0);
    EXPECT_EQ(persistence_line_image(PersistenceDiagram{}, 0, 10, 0.05, {0, 1}).total(), 0.0);
    EXPECT_EQ(essential_image(PersistenceDiagram{}, 0, 10, 0.05, {0, 1}).total(), 0.0);
}

TEST(PersistenceImage, CentredPointCarriesItsWeight)
{
    auto params = unit_params(1, 40);
    params.weight = ImageWeight::constant;
    params.sigma = 0.01;
    const PersistenceDiagram d({{1, 0.5, 1.0}});
    const auto img = persistence_image(d, params);
    EXPECT_NEAR(img.total(), 1.0, 1e-9);
    // cells 19 and 20 span 2.5 standard deviations either side of 0.5 on each axis
    EXPECT_NEAR(img.at(19, 19) + img.at(19, 20) + img.at(20, 19) + img.at(20, 20), std::pow(std::erf(2.5 / std::sqrt(2.0)), 2), 1e-9);

    params.weight = ImageWeight::linear;
    EXPECT_NEAR(persistence_image(d, params).total(), 0.5, 1e-9);
}

TEST(PersistenceImage, RowsArePersistence)
{
    auto params = unit_params(0, 10);
    params.sigma = 0.01;
    const auto img = persistence_image(PersistenceDiagram({{0, 0.05, 0.9}}), params);
    // birth 0.05 -> col 0; persistence 0.85 -> row 8
    std::size_t best = 0;
    for (std::size_t i = 1; i < img.values.size(); ++i)
        if (img.values[i] > img.values[best])
            best = i;
    EXPECT_EQ(best, 8u * 10u + 0u);
}

TEST(PersistenceImage, SigmaAsVariance)
{
    auto a = unit_params(1, 10), b = a;
    a.sigma = 0.04;
    b.sigma = 0.0016;
    b.sigma_is_variance = true;
    const PersistenceDiagram d({{1, 0.3, 0.7}});
    const auto x = persistence_image(d, a), y = persistence_image(d, b);
    for (std::size_t i = 0; i < x.values.size(); ++i)
        EXPECT_NEAR(x.values[i], y.values[i], 1e-15);
}

TEST(PersistenceImage, EssentialAndOtherDimensionsIgnored)
{
    const PersistenceDiagram d({{0, 0.0, kInf}, {1, 0.2, 0.4}, {0, 0.1, 0.3}});
    const auto img = persistence_image(d, unit_params(0, 8));
    EXPECT_EQ(img.essential_points, 1u);
    const auto only = persistence_image(PersistenceDiagram({{0, 0.1, 0.3}}), unit_params(0, 8));
    EXPECT_EQ(img.values, only.values);

    const auto ess = essential_image(d, 0, 10, 0.02, {0, 1});
    EXPECT_NEAR(ess.total(), 0.5, 1e-9);  // half the kernel falls below birth 0
}

TEST(PersistenceImage, NonNegativeAndAdditive)
{
    mrips::testing::Gen gen(71);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<PersistencePoint> a, b;
        for (int i = 0; i < 5; ++i) {
            const double x = gen.uniform(0, 1), y = x + gen.uniform(0, 1);
            (gen.chance(0.5) ? a : b).push_back({1, x, y});
        }
        std::vector<PersistencePoint> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        const auto params = unit_params(1, 12);
        const auto ia = persistence_image(PersistenceDiagram(a), params);
        const auto ib = persistence_image(PersistenceDiagram(b), params);
        const auto iab = persistence_image(PersistenceDiagram(ab), params);
        for (std::size_t i = 0; i < iab.values.size(); ++i) {
            EXPECT_GE(ia.values[i], 0.0);
            EXPECT_NEAR(iab.values[i], ia.values[i] + ib.values[i], 1e-12);
        }
    }
}

TEST(PersistenceImage, RejectsBadParameters)
{
    auto p = unit_params(0, 10);
    p.rows = 0;
    EXPECT_THROW(persistence_image(PersistenceDiagram{}, p), InvalidInput);
    p = unit_params(0, 10);
    p.sigma = 0.0;
    EXPECT_THROW(persistence_image(PersistenceDiagram{}, p), InvalidInput);
    p = unit_params(0, 10);
    p.birth_range = {1.0, 1.0};
    EXPECT_THROW(persistence_image(PersistenceDiagram{}, p), InvalidInput);
    p = unit_params(0, 10);
    p.persistence_range = {0.0, kInf};
    EXPECT_THROW(persistence_image(PersistenceDiagram{}, p), InvalidInput);
    EXPECT_THROW(persistence_line_image(PersistenceDiagram{}, 0, 0, 0.1, {0, 1}), InvalidInput);
}

TEST(ConcatFeatures, Lengths)
{
    const PersistenceDiagram d({{0, 0.0, 0.4}, {0, 0.0, kInf}, {1, 0.2, 0.5}});
    const std::array small{persistence_line_image(d, 0, 10, 0.05, {0, 1}), persistence_image(d, unit_params(1, 10)),
                           essential_image(d, 1, 10, 0.05, {0, 1})};
    EXPECT_EQ(concat_features(small).size(), 120u);
    const std::array big{persistence_image(d, unit_params(0, 20)), persistence_image(d, unit_params(1, 20))};
    const auto flat = concat_features(big);
    ASSERT_EQ(flat.size(), 800u);
    EXPECT_EQ(flat[400 + 3], big[1].values[3]);
}

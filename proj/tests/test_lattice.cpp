#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace mrips;
using mrips::testing::Gen;
using mrips::testing::near;

TEST(PSum, Examples)
{
    EXPECT_DOUBLE_EQ(psum(3.0, 4.0, 2.0), 5.0);
    EXPECT_EQ(psum(3.0, 4.0, kInf), 4.0);
    EXPECT_EQ(psum(2.0, kInf, 1.0), kInf);
    for (double p : {1.0, 1.5, 2.0, 7.0, kInf})
        EXPECT_EQ(psum(2.5, 0.0, p), 2.5);
    EXPECT_EQ(psum(0.0, 0.0, 3.0), 0.0);
}

TEST(PSum, HugeAndTinyValuesDoNotOverflow)
{
    EXPECT_TRUE(near(psum(1e200, 1e200, 3.0), std::cbrt(2.0) * 1e200, 1e-12));
    EXPECT_TRUE(near(psum(1e-200, 1e-200, 2.0), std::sqrt(2.0) * 1e-200, 1e-12));
}

TEST(PSum, RejectsExponentBelowOne)
{
    EXPECT_THROW(psum(1.0, 2.0, 0.5), InvalidInput);
    EXPECT_THROW(psum(1.0, 2.0, std::nan("")), InvalidInput);
}

TEST(PSum, GradesAreCoordinatewise)
{
    const Grade a{3.0, 1.0}, b{4.0, kInf};
    const Grade s = psum(a, b, 2.0);
    EXPECT_DOUBLE_EQ(s[0], 5.0);
    EXPECT_EQ(s[1], kInf);
    EXPECT_THROW(psum(Grade{1.0}, Grade{1.0, 2.0}, 2.0), InvalidInput);
}

TEST(KFold, Examples)
{
    EXPECT_EQ(kfold(3.0, 2, 1.0), 6.0);
    EXPECT_EQ(kfold(3.0, 5, kInf), 3.0);
    EXPECT_NEAR(kfold(2.0, 2, 2.0), 2.0 * std::sqrt(2.0), 1e-12);
    EXPECT_EQ(kfold(kInf, 3, 2.0), kInf);
    EXPECT_THROW(kfold(1.0, 0, 2.0), InvalidInput);
}

TEST(KFold, MatchesRepeatedSum)
{
    for (double p : {1.0, 2.0, 3.5})
        for (std::size_t k = 1; k < 6; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < k; ++i)
                acc = psum(acc, 1.7, p);
            EXPECT_TRUE(near(kfold(1.7, k, p), acc, 1e-12)) << p << " " << k;
        }
}

TEST(LeftAdjoint, Examples)
{
    EXPECT_EQ(left_adjoint(2.0, 5.0, 1.0), 3.0);
    EXPECT_DOUBLE_EQ(left_adjoint(3.0, 5.0, 2.0), 4.0);
    for (double q : {1.0, 2.0, 4.0, kInf})
        EXPECT_EQ(left_adjoint(5.0, 2.0, q), 0.0);
    EXPECT_EQ(left_adjoint(2.0, 5.0, kInf), 5.0);
    EXPECT_EQ(left_adjoint(kInf, kInf, 1.0), 0.0);
    EXPECT_EQ(left_adjoint(3.0, kInf, 2.0), kInf);
}

TEST(LeftAdjoint, InfinityQAgreesWithGridSearch)
{
    // least c on a fine grid with s <= max(t, c)
    for (double t : {0.0, 1.0, 2.0})
        for (double s : {0.5, 2.0, 5.0}) {
            double best = kInf;
            for (int i = 0; i <= 1000; ++i) {
                const double c = i * 0.01;
                if (s <= std::max(t, c)) {
                    best = c;
                    break;
                }
            }
            EXPECT_NEAR(left_adjoint(t, s, kInf), best, 1e-9) << t << " " << s;
        }
}

TEST(Join, Examples)
{
    EXPECT_EQ(join(Grade{1.0, 3.0}, Grade{2.0, 1.0}), (Grade{2.0, 3.0}));
    const Grade a{1.5, 0.5};
    EXPECT_EQ(join(a, a), a);
    EXPECT_EQ(join(Grade::zero(2), a), a);
}

TEST(Grade, OrderAndZero)
{
    EXPECT_TRUE(leq(Grade{1.0, 2.0}, Grade{1.0, 3.0}));
    EXPECT_FALSE(leq(Grade{1.0, 2.0}, Grade{0.5, 3.0}));
    EXPECT_TRUE(Grade::zero(3).is_zero());
    EXPECT_FALSE((Grade{0.0, kInf}).is_finite());
    EXPECT_EQ((Grade{1.0, kInf}).sup_coordinate(), kInf);
}

TEST(LatticeDescriptor, Validation)
{
    EXPECT_NO_THROW(LatticeDescriptor::scalar(2.0, 1.0).validate());
    EXPECT_NO_THROW(LatticeDescriptor::scalar(kInf, kInf).validate());
    EXPECT_THROW(LatticeDescriptor::scalar(1.0, 2.0).validate(), InvalidInput);
    EXPECT_THROW(LatticeDescriptor::scalar(0.5, 0.5).validate(), InvalidInput);
    EXPECT_THROW(LatticeDescriptor::product(0, kInf, 1.0).validate(), InvalidInput);
}

namespace {

const double kExponents[] = {1.0, 1.5, 2.0, 3.0, 10.0, kInf};

double sample(Gen& g)
{
    if (g.chance(0.05))
        return kInf;
    if (g.chance(0.05))
        return 0.0;
    return g.uniform(0.0, 10.0);
}

} // namespace

TEST(LatticeProperties, Functoriality)
{
    Gen g(1);
    for (int trial = 0; trial < 2000; ++trial) {
        const double p = kExponents[g.index(6)];
        const double a = sample(g), b = sample(g);
        const double a2 = a + g.uniform(0.0, 2.0), b2 = b + g.uniform(0.0, 2.0);
        EXPECT_LE(psum(a, b, p), psum(a2, b2, p) * (1 + 1e-12)) << a << " " << b << " " << p;
    }
}

TEST(LatticeProperties, NonDecreasing)
{
    Gen g(2);
    for (int trial = 0; trial < 2000; ++trial) {
        const double p = kExponents[g.index(6)];
        const double a = sample(g), b = sample(g);
        EXPECT_LE(a, psum(a, b, p));
    }
}

TEST(LatticeProperties, MinkowskiInequality)
{
    Gen g(3);
    for (int trial = 0; trial < 4000; ++trial) {
        double p = kExponents[g.index(6)], q = kExponents[g.index(6)];
        if (q > p)
            std::swap(p, q);
        const double s = sample(g), t = sample(g), s2 = sample(g), t2 = sample(g);
        const double lhs = psum(psum(s, t, q), psum(s2, t2, q), p);
        const double rhs = psum(psum(s, s2, p), psum(t, t2, p), q);
        EXPECT_LE(lhs, rhs * (1 + 1e-9)) << "p=" << p << " q=" << q;
    }
}

TEST(LatticeProperties, Adjunction)
{
    Gen g(4);
    for (int trial = 0; trial < 4000; ++trial) {
        const double q = kExponents[g.index(6)];
        const double t = sample(g), s = sample(g);
        const double lam = left_adjoint(t, s, q);
        // s <= t (+)_q lambda, and nothing noticeably smaller works
        EXPECT_LE(s, psum(t, lam, q) * (1 + 1e-9)) << t << " " << s << " " << q;
        if (lam > 0.0 && std::isfinite(lam)) {
            const double c = lam * (1 - 1e-6);
            EXPECT_GT(s, psum(t, c, q)) << t << " " << s << " " << q;
        }
        const double c = sample(g);
        if (lam <= c)
            EXPECT_LE(s, psum(t, c, q) * (1 + 1e-9));
    }
}

TEST(LatticeProperties, AssociativeAndCommutative)
{
    Gen g(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const double p = kExponents[g.index(6)];
        const double a = sample(g), b = sample(g), c = sample(g);
        EXPECT_EQ(psum(a, b, p), psum(b, a, p));
        const double l = psum(psum(a, b, p), c, p), r = psum(a, psum(b, c, p), p);
        if (p == kInf)
            EXPECT_EQ(l, r);
        else
            EXPECT_TRUE(near(l, r, 1e-12)) << l << " vs " << r;
    }
}

#include "koenigs/cantor.hpp"

#include <gtest/gtest.h>

#include <cmath>

using koenigs::CantorSet;
using koenigs::Tri;

// independent check: expansion of p/q in base 3 by long division, looking for a 1 digit,
// allowing the alternative expansion at a digit boundary
static bool ternary_member(long long p, long long q) {
    for (int i = 0; i < 200; ++i) {
        if (p == 0 || p == q) return true;
        long long t = 3 * p;
        long long d = t / q, rem = t % q;
        // on a boundary d/3 one of 0.(d-1)222.. and 0.d000.. avoids the digit 1
        if (rem == 0) return true;
        if (d == 1) return false;
        p = rem;
    }
    return true;
}

TEST(Cantor, TernaryKnownPoints) {
    CantorSet c = CantorSet::ternary();
    EXPECT_EQ(c.locate(0.25).member, Tri::yes);   // 0.0202...
    EXPECT_EQ(c.locate(0.75).member, Tri::yes);   // 0.2020...
    EXPECT_EQ(c.locate(0.5).member, Tri::no);     // 0.111...
    EXPECT_EQ(c.locate(0.0).member, Tri::yes);
    EXPECT_EQ(c.locate(1.0).member, Tri::yes);
    EXPECT_EQ(c.locate(1.5).member, Tri::no);
    EXPECT_EQ(c.locate(-0.1).member, Tri::no);
}

TEST(Cantor, DyadicAgreesWithLongDivision) {
    CantorSet c = CantorSet::ternary();
    for (int k = 1; k <= 12; ++k) {
        long long q = 1LL << k;
        for (long long p = 0; p <= q; ++p) {
            double y = static_cast<double>(p) / static_cast<double>(q);
            bool expect = ternary_member(p, q);
            EXPECT_EQ(c.contains(y), expect) << p << "/" << q;
        }
    }
}

TEST(Cantor, Accumulation) {
    CantorSet c = CantorSet::ternary();
    auto l = c.locate(0.25);
    EXPECT_TRUE(l.accumulates_left);
    EXPECT_TRUE(l.accumulates_right);
    auto z = c.locate(0.0);
    EXPECT_FALSE(z.accumulates_left);
    EXPECT_TRUE(z.accumulates_right);
    auto o = c.locate(1.0);
    EXPECT_TRUE(o.accumulates_left);
    EXPECT_FALSE(o.accumulates_right);
}

TEST(Cantor, GapsAndIntersection) {
    CantorSet c = CantorSet::ternary();
    auto g = c.gap_containing(0.5);
    ASSERT_TRUE(g.has_value());
    EXPECT_NEAR(g->first, 1.0 / 3, 1e-15);
    EXPECT_NEAR(g->second, 2.0 / 3, 1e-15);
    EXPECT_FALSE(c.gap_containing(0.25).has_value());
    EXPECT_FALSE(c.intersects(0.4, 0.6));
    EXPECT_TRUE(c.intersects(0.2, 0.3));
    EXPECT_TRUE(c.intersects(0.6, 2.0 / 3));
    EXPECT_EQ(c.gaps(2).size(), 3u);
    double m = c.interior_member();
    EXPECT_TRUE(m > 0 && m < 1 && c.locate(m).member == Tri::yes);
}

TEST(Cantor, GeneralPattern) {
    // radix 5 keeping {0, 2, 4}
    CantorSet c(-1, 1, 5, {0, 2, 4});
    EXPECT_TRUE(c.contains(-1));
    EXPECT_TRUE(c.contains(1));
    EXPECT_FALSE(c.contains(-1 + 2 * 0.3)); // first digit 1
    EXPECT_THROW(CantorSet(0, 1, 3, {0, 1, 2}), koenigs::ValidationError);
    EXPECT_THROW(CantorSet(0, 1, 3, {1}), koenigs::ValidationError);
}

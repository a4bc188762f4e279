#include "koenigs/hardy.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace koenigs;

namespace {

DefiningFunction battery(const std::string& name) {
    return DefiningFunction::from_file(std::string(KOENIGS_DATA_DIR) + "/" + name + ".json");
}

Membership member(cplx l, const CanonicalDomain& d, double p) { return hardy_membership(l, d, p).status; }

std::vector<cplx> real_grid(double lo, double hi, int n) {
    std::vector<cplx> g;
    for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
    return g;
}

} // namespace

TEST(Hardy, ConstantsEverywhere) {
    for (auto d : {CanonicalDomain::half_plane(), CanonicalDomain::upper(), CanonicalDomain::strip(),
                   CanonicalDomain::eta(1), CanonicalDomain::log(0.5, 0)})
        EXPECT_EQ(member(0, d, 2), Membership::member) << d.name();
}

TEST(Hardy, HalfPlane) {
    auto d = CanonicalDomain::half_plane();
    EXPECT_EQ(member(-1, d, 2), Membership::member);
    EXPECT_EQ(member(cplx(-1, 3), d, 1), Membership::non_member); // e^{-3iy} grows on the axis
    EXPECT_EQ(member(1, d, 2), Membership::non_member);
    auto r = hardy_membership(-1, d, 2);
    // e^{-z} has boundary modulus 1
    EXPECT_NEAR(r.log_mean, 0, 1e-6);
    // the circle means increase to the boundary value
    for (size_t i = 1; i < r.radial_log_means.size(); ++i)
        EXPECT_GE(r.radial_log_means[i], r.radial_log_means[i - 1] - 1e-9);
}

TEST(Hardy, UpperHalfPlane) {
    auto d = CanonicalDomain::upper();
    EXPECT_EQ(member(cplx(0, 1), d, 2), Membership::member);
    EXPECT_EQ(member(-1, d, 2), Membership::non_member);
    EXPECT_EQ(member(cplx(0, -1), d, 2), Membership::non_member);
}

TEST(Hardy, EtaDomainThreshold) {
    // |e^{lambda eta}| grows like |w|^{-lambda} at the boundary point at infinity
    auto d = CanonicalDomain::eta(1);
    EXPECT_EQ(member(-1.5, d, 1), Membership::non_member);
    EXPECT_EQ(member(-0.5, d, 1), Membership::member);
    EXPECT_EQ(member(-0.9, d, 1), Membership::member);
    EXPECT_EQ(member(0.5, d, 1), Membership::non_member);
}

TEST(Hardy, ScalingLaw) {
    EXPECT_EQ(member(-1, CanonicalDomain::half_plane(), 1), Membership::member);
    EXPECT_EQ(member(-0.5, CanonicalDomain::half_plane(), 2), Membership::member);
    auto eta = CanonicalDomain::eta(1);
    EXPECT_EQ(member(-0.9, eta, 1), Membership::member);
    EXPECT_EQ(member(-0.45, eta, 2), Membership::member);
    auto rep = scaling_law_check(eta, 1, 2, real_grid(-2, 0.5, 11));
    EXPECT_TRUE(rep.ok());
    EXPECT_GE(rep.checked, 6);
    auto strip = scaling_law_check(CanonicalDomain::strip(), 1, 3, real_grid(-1.6, 1.6, 9));
    EXPECT_TRUE(strip.ok());
    EXPECT_GE(strip.checked, 5);
}

TEST(Hardy, StripBand) {
    auto s = CanonicalDomain::strip();
    auto b1 = betsakos_band(s, 1), b2 = betsakos_band(s, 2);
    EXPECT_TRUE(b1.imaginary_axis_ok);
    EXPECT_TRUE(b2.imaginary_axis_ok);
    EXPECT_NEAR(b1.c1_est, b1.c2_est, 0.1 * b1.c2_est);
    // in lambda units the p = 2 band is half the p = 1 band
    EXPECT_NEAR((b2.c2_est / 2) / (b1.c2_est / 1), 0.5, 0.05);
    EXPECT_NEAR(b1.c2_est, 1.0, 0.1);
    EXPECT_LE(b1.c2_bracket.first, 1.0 + 1e-9);
    EXPECT_EQ(member(cplx(0, 5), s, 2), Membership::member);
    EXPECT_EQ(member(0.3, s, 2), Membership::member);
    EXPECT_EQ(member(0.8, s, 2), Membership::non_member);
}

TEST(Hardy, ConvexityAndMonotonicity) {
    std::vector<cplx> grid;
    for (double x : {-1.5, -0.9, -0.4, 0.0, 0.4, 0.9, 1.5})
        for (double y : {-2.0, 0.0, 2.0}) grid.push_back(cplx(x, y));
    EXPECT_TRUE(convexity_check(CanonicalDomain::strip(), 2, grid).ok());
    EXPECT_TRUE(p_monotonicity_check(CanonicalDomain::strip(), 1, 2, grid).ok());
    EXPECT_TRUE(p_monotonicity_check(CanonicalDomain::eta(1), 1, 3, real_grid(-2, 0, 9)).ok());
}

TEST(Hardy, DomainMonotonicity) {
    // a translate of the exponent 0.6 log domain contains the exponent 0.3 eta domain
    EtaMap inner{0.3}, outer{0.6};
    double b = kInf;
    for (int j = -40; j <= 48; ++j)
        for (double y : {std::pow(10.0, j / 8.0), -std::pow(10.0, j / 8.0)})
            b = std::min(b, inner.psi(y) - outer.psi(y));
    b = std::min(b, inner.psi(0) - outer.psi(0)) - 1;
    auto in = CanonicalDomain::eta(0.3), out = CanonicalDomain::log(0.6, b);
    ASSERT_TRUE(canonical_contains(out, in));
    EXPECT_FALSE(canonical_contains(in, out));
    EXPECT_TRUE(canonical_contains(CanonicalDomain::eta(1), CanonicalDomain::half_plane()));
    auto rep = domain_monotonicity_check(in, out, 1, real_grid(-3, 0, 7));
    EXPECT_TRUE(rep.ok());
    EXPECT_GT(rep.checked, 0);
    EXPECT_THROW(domain_monotonicity_check(out, in, 1, real_grid(-1, 0, 3)), ValidationError);
}

TEST(Hardy, LambdaInfinity) {
    auto strip = lambda_infty_region(battery("strip"));
    EXPECT_EQ(strip.contains(cplx(0, 4)), Tri::yes);
    EXPECT_EQ(strip.contains(cplx(0, -4)), Tri::yes);
    EXPECT_EQ(strip.contains(cplx(-1, 7)), Tri::yes); // half-strip: bounded I allows every slope
    EXPECT_EQ(strip.contains(cplx(1, 0)), Tri::no);
    auto rhp = lambda_infty_region(battery("right_half_plane"));
    EXPECT_EQ(rhp.contains(-2.0), Tri::yes);
    EXPECT_EQ(rhp.contains(cplx(-1, 1)), Tri::no);
    EXPECT_EQ(rhp.contains(cplx(0, 1)), Tri::no);
    EXPECT_EQ(rhp.contains(1.0), Tri::no);
    auto uhp = lambda_infty_region(battery("upper_half_plane"));
    EXPECT_EQ(uhp.contains(cplx(0, 3)), Tri::yes);
    EXPECT_EQ(uhp.contains(cplx(0, -3)), Tri::no);
    EXPECT_EQ(uhp.contains(-1.0), Tri::no);
    EXPECT_FALSE(rhp.describe().empty());
}

TEST(Hardy, LambdaInfinityMatchesSampling) {
    // bounded exponentials lie in every H^p
    auto d = CanonicalDomain::half_plane();
    auto f = canonical_region(d, {2.0}, {cplx(-1, 0), cplx(0, 1), cplx(-2, 0)});
    for (const Sample& s : f.p_samples.at(2.0))
        if (f.exact_infty.contains(s.lambda) == Tri::yes) EXPECT_EQ(s.status, Membership::member);
}

TEST(Hardy, Winding) {
    for (auto d : {CanonicalDomain::half_plane(), CanonicalDomain::upper(), CanonicalDomain::strip(),
                   CanonicalDomain::eta(1), CanonicalDomain::eta(0.5), CanonicalDomain::log(0.5, 2)})
        EXPECT_TRUE(d.winding_check()) << d.name();
}

TEST(Hardy, Parse) {
    EXPECT_EQ(CanonicalDomain::parse("strip").kind, CanonicalDomain::strip_pi);
    auto l = CanonicalDomain::parse("log:0.5,2");
    EXPECT_EQ(l.kind, CanonicalDomain::log_domain);
    EXPECT_DOUBLE_EQ(l.b, 2);
    EXPECT_EQ(CanonicalDomain::parse(l.name()).name(), l.name());
    EXPECT_THROW(CanonicalDomain::parse("disc"), ValidationError);
    EXPECT_THROW(CanonicalDomain::parse("log:1.5,0"), ValidationError);
    EXPECT_THROW(hardy_membership(-1, CanonicalDomain::strip(), 0.5), ValidationError);
}

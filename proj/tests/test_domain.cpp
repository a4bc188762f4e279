#include "koenigs/domain.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace koenigs;

namespace {

DefiningFunction load(const char* text) { return DefiningFunction::from_json_text(text); }

const char* kZero = R"J({"interval":["-inf","inf"],"pieces":[{"span":["-inf","inf"],"kind":"finite_analytic","expr":"0"}]})J";

// 1 on the ternary set in [0,1], 0 elsewhere
const char* kComb = R"J({"interval":["-inf","inf"],"pieces":[
  {"span":["-inf",0],"kind":"finite_analytic","expr":"0"},
  {"span":[0,1],"kind":"cantor_comb","carrier":{"base":[0,1],"radix":3,"digits":[0,2]},"on_value":1,"off_bound":0},
  {"span":[1,"inf"],"kind":"finite_analytic","expr":"0"}]})J";

// 1 on the ternary set, sin(1/((b-y)(y-a))) on each gap (a,b)
const char* kOscComb = R"J({"interval":[0,1],"pieces":[
  {"span":[0,1],"kind":"cantor_comb","carrier":{"base":[0,1]},"on_value":1,"off_bound":1,
   "profile":{"kind":"oscillate","center":0,"amplitude":1}}]})J";

const char* kSpike = R"J({"interval":["-inf","inf"],"pieces":[
  {"span":["-inf","inf"],"kind":"point_spike","c0":0,"value":1,"background":0}]})J";

const char* kOsc = R"J({"interval":[0,1],"pieces":[
  {"span":[0,1],"kind":"oscillatory","expr":"sin(1/((1-y)*y))",
   "limits":{"lo":{"liminf":-1,"limsup":1},"hi":{"liminf":-1,"limsup":1}}}]})J";

} // namespace

TEST(Domain, ContainsExamples) {
    auto z = load(kZero);
    EXPECT_TRUE(contains(z, {1, 0}));
    EXPECT_FALSE(contains(z, {-1, 0}));
    auto c = load(kComb);
    EXPECT_FALSE(contains(c, {0.5, 0.25})); // 1/4 is on the carrier
    EXPECT_TRUE(contains(c, {0.5, 0.5}));   // 1/2 lies in the middle gap
    EXPECT_TRUE(contains(c, {1.5, 0.25}));
    auto strip = load(R"J({"interval":[-1,1],"pieces":[{"span":[-1,1],"kind":"finite_analytic","expr":"0"}]})J");
    EXPECT_FALSE(contains(strip, {5, 1}));
}

TEST(Domain, ContainsIsRightTranslationMonotone) {
    auto c = load(kComb);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 2000; ++i) {
        std::complex<double> w(u(rng), u(rng));
        if (contains(c, w)) EXPECT_TRUE(contains(c, w + 0.37));
    }
}

TEST(Domain, LimitsConstant) {
    auto l = one_sided_limits(load(kZero), 0);
    EXPECT_EQ(l.left.liminf, 0);
    EXPECT_EQ(l.left.limsup, 0);
    EXPECT_EQ(l.right.liminf, 0);
    EXPECT_EQ(l.right.limsup, 0);
    EXPECT_EQ(l.quality(), Quality::exact);
}

TEST(Domain, LimitsOscillatoryEndpoint) {
    auto l = one_sided_limits(load(kOsc), 1);
    EXPECT_TRUE(l.left.present);
    EXPECT_FALSE(l.right.present);
    EXPECT_EQ(l.left.liminf, -1);
    EXPECT_EQ(l.left.limsup, 1);
}

TEST(Domain, LimitsLogDivergence) {
    auto f = load(R"J({"interval":[0,"inf"],"pieces":[{"span":[0,"inf"],"kind":"finite_analytic","expr":"-log(abs(y))"}]})J");
    auto l = one_sided_limits(f, 0);
    EXPECT_FALSE(l.left.present);
    EXPECT_EQ(l.right.liminf, kInf);
    EXPECT_EQ(l.right.limsup, kInf);
    EXPECT_EQ(l.right.quality, Quality::estimated);
}

TEST(Domain, EstimatorFlagsOscillation) {
    auto r = estimate_limit([](double t) { return std::sin(1 / t) / t; }, 0, Side::right, 1);
    EXPECT_EQ(r.quality, Quality::inconclusive);
    auto s = estimate_limit([](double t) { return 2 + t * t; }, 0, Side::left, 1);
    EXPECT_EQ(s.quality, Quality::estimated);
    EXPECT_NEAR(s.liminf, 2, 1e-12);
    auto d = estimate_limit([](double t) { return -1 / std::fabs(t); }, 0, Side::left, 1);
    EXPECT_EQ(d.liminf, -kInf);
}

TEST(Domain, InteriorLimitMatchesEvaluator) {
    auto f = load(R"J({"interval":[-3,3],"pieces":[{"span":[-3,3],"kind":"finite_analytic","expr":"y^3 - sin(5*y)"}]})J");
    const Piece& p = f.pieces()[0];
    for (double y : {-2.5, -1.0, 0.2, 1.7}) {
        auto est = estimate_limit([&](double t) { return p.value(t); }, y, Side::left, 0.5);
        EXPECT_EQ(est.quality, Quality::estimated);
        EXPECT_NEAR(est.liminf, f.value(y), 1e-9);
        auto l = one_sided_limits(f, y);
        EXPECT_EQ(l.right.liminf, f.value(y));
    }
}

TEST(Domain, UscCheck) {
    EXPECT_EQ(usc_check(load(kComb)).ok, Tri::yes);
    EXPECT_EQ(usc_check(load(kOsc)).ok, Tri::yes);
    EXPECT_EQ(usc_check(load(kOscComb)).ok, Tri::yes);
    auto bad = load(R"J({"interval":[-1,1],"pieces":[
      {"span":[-1,0],"kind":"finite_analytic","expr":"1+y"},
      {"span":[0,1],"kind":"finite_analytic","expr":"1-y"}],"points":[{"y":0,"value":0}]})J");
    EXPECT_EQ(usc_check(bad).ok, Tri::no);
    // default breakpoint value is the larger limsup
    auto good = load(R"J({"interval":[-1,1],"pieces":[
      {"span":[-1,0],"kind":"finite_analytic","expr":"1+y"},
      {"span":[0,1],"kind":"finite_analytic","expr":"2-y"}]})J");
    EXPECT_EQ(usc_check(good).ok, Tri::yes);
    EXPECT_NEAR(good.value(0), 2, 1e-9);
}

TEST(Domain, CombRegularization) {
    auto c = load(kComb);
    auto lo = lsc_regularization(c);
    auto ti = usc_of_lsc(c);
    EXPECT_EQ(c.value(0.25), 1);
    EXPECT_EQ(lo(0.25), 0);
    EXPECT_EQ(ti(0.25), 0);
    EXPECT_EQ(ti(0.0), 0);
    EXPECT_EQ(ti(1.0), 0);
    auto r = equals_regularized(c);
    EXPECT_EQ(r.equal, Tri::no);
    ASSERT_FALSE(r.witnesses.empty());
    for (double w : r.witnesses) EXPECT_GT(c.value(w), ti(w));
}

TEST(Domain, OscillatingCombRegularization) {
    auto c = load(kOscComb);
    auto lo = lsc_regularization(c);
    auto ti = usc_of_lsc(c);
    EXPECT_EQ(lo(0.25), -1);
    EXPECT_EQ(ti(0.25), 1);
    EXPECT_EQ(c.value(0.25), 1);
    EXPECT_EQ(equals_regularized(c).equal, Tri::yes);
}

TEST(Domain, SpikeRegularization) {
    auto s = load(kSpike);
    auto r = equals_regularized(s);
    EXPECT_EQ(r.equal, Tri::no);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0], 0);
    EXPECT_EQ(equals_regularized(load(kZero)).equal, Tri::yes);
}

TEST(Domain, RegularizationOrderAndIdempotence) {
    for (const char* text : {kComb, kOscComb, kSpike, kOsc}) {
        auto f = load(text);
        auto low = f.lsc_regularized();
        auto tilde = low.usc_regularized();
        auto low2 = low.lsc_regularized();
        auto tilde2 = tilde.usc_regularized();
        std::vector<double> ys = f.structure_points();
        for (int k = 1; k < 64; ++k) ys.push_back(f.bounded() ? f.lo() + (f.hi() - f.lo()) * k / 64.0 : -2 + 4.0 * k / 64);
        ys.push_back(0.25);
        for (double y : ys) {
            if (!f.in_interval(y)) continue;
            EXPECT_LE(low.value(y), tilde.value(y)) << y;
            EXPECT_LE(tilde.value(y), f.value(y)) << y;
            EXPECT_EQ(low2.value(y), low.value(y)) << y;
            EXPECT_EQ(tilde2.value(y), tilde.value(y)) << y;
        }
    }
}

TEST(Domain, ValidationPointers) {
    try {
        load(R"J({"interval":[0,1],"pieces":[{"span":[0,0.5],"kind":"finite_analytic","expr":"0"},
                                             {"span":[0.6,1],"kind":"finite_analytic","expr":"0"}]})J");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("/pieces/1/span/0"), std::string::npos);
    }
    EXPECT_THROW(load(R"J({"interval":[1,1],"pieces":[]})J"), ValidationError);
    EXPECT_THROW(load(R"J({"interval":["-inf","inf"],"pieces":[{"span":["-inf","inf"],"kind":"minus_infinity"}]})J"),
                 ValidationError);
    EXPECT_THROW(load(R"J({"interval":[0,1],"pieces":[{"span":[0,1],"kind":"oscillatory","expr":"sin(1/y)"}]})J"),
                 ValidationError);
    EXPECT_THROW(load(R"J({"interval":[0,1],"pieces":[{"span":[0,1],"kind":"finite_analytic","expr":"1 +"}]})J"),
                 ValidationError);
}

TEST(Domain, MinusInfinitySets) {
    auto f = load(R"J({"interval":[-1,2],"pieces":[
      {"span":[-1,0],"kind":"finite_analytic","expr":"0"},
      {"span":[0,1],"kind":"minus_infinity"},
      {"span":[1,2],"kind":"finite_analytic","expr":"0"}]})J");
    auto comps = f.minus_infinity_components();
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].first, 0);
    EXPECT_EQ(comps[0].second, 1);
    auto z = f.minus_infinity_lsc_set();
    ASSERT_EQ(z.parts.size(), 1u);
    EXPECT_EQ(z.parts[0].first, 0);
    EXPECT_EQ(z.parts[0].second, 1);
    EXPECT_EQ(f.value(0), 0); // breakpoint takes the finite side
}

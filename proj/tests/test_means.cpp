#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ostrowski/bounds.hpp"
#include "ostrowski/means.hpp"
#include "ostrowski/quadrature.hpp"

using namespace ostrowski;
using doctest::Approx;

namespace {

MeansInput ee_input(double s = 0.5) {
    MeansInput in;
    in.a = 0.25;
    in.b = 1.0;
    in.s = s;
    return in;
}

}  // namespace

TEST_CASE("arithmetic mean") {
    CHECK(arithmetic_mean(1, 2) == 1.5);
    CHECK(arithmetic_mean(3, 3) == 3);
    CHECK(arithmetic_mean(0.25, 1) == 0.625);
    CHECK_THROWS_AS(arithmetic_mean(-1, 1), DomainError);
    CHECK_THROWS_AS(identric_mean(0, 1), DomainError);
}

TEST_CASE("identric mean") {
    CHECK(identric_mean(1, 2) == Approx(4 / std::exp(1.0)).epsilon(1e-14));
    CHECK(identric_mean(2.5, 2.5) == 2.5);
    CHECK(identric_mean(1, 1 + 1e-15) == 1.0);
    CHECK(identric_mean(2, 1) == Approx(identric_mean(1, 2)).epsilon(1e-14));
    // log I(x,y) is the integral mean of ln t
    const double li = integral([](double t) { return std::log(t); }, Interval(0.3, 7)) / 6.7;
    CHECK(std::log(identric_mean(0.3, 7)) == Approx(li).epsilon(1e-10));
    // large arguments stay finite
    CHECK(std::isfinite(identric_mean(1e300, 2e300)));
}

TEST_CASE("generalized log mean") {
    CHECK(gen_log_mean(1, 2, 1) == Approx(1.5));
    CHECK(gen_log_mean(3, 3, 2) == 3);
    CHECK_THROWS_AS(gen_log_mean(1, 2, 0), ParamError);
    CHECK_THROWS_AS(gen_log_mean(1, 2, -1), ParamError);
    for (double p : {-0.5, 0.5, 2.0, 5.0}) {
        const double mp = integral([&](double t) { return std::pow(t, p); }, Interval(1, 3)) / 2;
        CHECK(gen_log_mean(1, 3, p) == Approx(std::pow(mp, 1 / p)).epsilon(1e-10));
    }
    CHECK(log_mean_power(0.25, 1, 0.5) == Approx(7.0 / 9.0).epsilon(1e-14));
    CHECK(std::pow(gen_log_mean(0.25, 1, 0.5), 0.5) == Approx(log_mean_power(0.25, 1, 0.5)).epsilon(1e-13));
}

TEST_CASE("mean inequalities on random pairs") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.01, 10);
    const double grid[] = {-0.5, -0.1, -1e-4, 1e-4, 0.5, 1, 2, 5};
    for (int i = 0; i < 1000; ++i) {
        double x = u(rng), y = u(rng);
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        CHECK(identric_mean(x, y) <= arithmetic_mean(x, y));
        double prev = -INFINITY;
        for (double p : grid) {
            const double v = gen_log_mean(x, y, p);
            CHECK(v >= prev * (1 - 1e-12));
            prev = v;
        }
        CHECK(std::abs(gen_log_mean(x, y, 1e-4) - identric_mean(x, y)) < 1e-3);
    }
}

TEST_CASE("EE1 at the arithmetic mean") {
    const auto r = prop_power_bound(ee_input(), PowerVariant::EE1);
    CHECK(r.equation_id == "ee1");
    // L_s^s = 7/9 from the exact antiderivative, x = A = 0.625
    const double lhs = std::abs(7.0 / 9.0 - std::sqrt(0.625));
    CHECK(r.lhs == Approx(lhs).epsilon(1e-12));
    CHECK(r.lhs == Approx(0.0127916).epsilon(1e-5));
    CHECK(r.rhs == Approx(2 * 0.5625 / 8 * (5.75 / 13.125)).epsilon(1e-10));
    CHECK(r.rhs == Approx(0.061607).epsilon(1e-5));
    CHECK(r.holds);
    CHECK(r.extras.count("rhs_relaxed"));
    CHECK(r.extras.at("rhs_midpoint") == Approx(r.rhs).epsilon(1e-12));
    CHECK(r.params.at("M") == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("EE2 and EE3") {
    auto in = ee_input();
    in.p = 2;
    in.q = 2;
    const auto r2 = prop_power_bound(in, PowerVariant::EE2);
    CHECK(r2.rhs == Approx(2 * 0.5625 / (8 * std::sqrt(5.0)) * std::sqrt(4.0 / 3.0)).epsilon(1e-10));
    CHECK(r2.holds);
    CHECK(r2.rhs == Approx(bound_holder_M(0.625, Interval(0.25, 1), SParams::with_p(0.5, 2), 2.0)).epsilon(1e-10));
    in.p.reset();
    const auto r3 = prop_power_bound(in, PowerVariant::EE3);
    CHECK(r3.rhs == Approx(2 * 0.5625 / 24 * std::sqrt(3 * 5.75 / 13.125)).epsilon(1e-10));
    CHECK(r3.rhs == Approx(0.053739).epsilon(1e-5));
    CHECK(r3.holds);
    CHECK(r3.equation_id == "ee3");
}

TEST_CASE("power bounds off the midpoint and at s = 1") {
    for (double x : {0.25, 0.4, 0.9, 1.0}) {
        auto in = ee_input(0.75);
        in.x = x;
        in.q = 3;
        for (auto v : {PowerVariant::EE1, PowerVariant::EE2, PowerVariant::EE3}) {
            const auto r = prop_power_bound(in, v);
            CHECK(r.holds);
            const double expect = std::abs(log_mean_power(0.25, 1, 0.75) - std::pow(x, 0.75) +
                                           0.75 * (x - 0.625) * std::pow(x, -0.25));
            CHECK(r.lhs == Approx(expect).epsilon(1e-12));
        }
    }
    auto lin = ee_input(1.0);
    lin.x = 0.3;
    CHECK(prop_power_bound(lin, PowerVariant::EE1).lhs == Approx(0.0).epsilon(1e-15));
}

TEST_CASE("b > 1 is accepted with a note") {
    MeansInput in;
    in.a = 1;
    in.b = 3;
    in.s = 0.5;
    const auto r = prop_power_bound(in, PowerVariant::EE1);
    CHECK(r.holds);
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("p6 identric against arithmetic") {
    MeansInput in;
    in.a = 1;
    in.b = 2;
    in.s = 1;
    in.p = 2;
    const auto r = prop_log_identric(in);
    CHECK(r.equation_id == "p6");
    CHECK(r.lhs == Approx(std::log(1.5) - std::log(4 / std::exp(1.0))).epsilon(1e-12));
    CHECK(r.lhs == Approx(0.0191707).epsilon(1e-5));
    CHECK(r.rhs == Approx((1.0 / 25 + 1.0 / 49) / std::sqrt(5.0)).epsilon(1e-12));
    CHECK(r.rhs == Approx(0.027015).epsilon(1e-5));
    CHECK(r.holds);
    CHECK(r.extras.at("rhs_printed") < 0);
    CHECK(r.extras.at("printed_holds") == 0.0);
    // same value as the general midpoint s-concave bound for ln
    CHECK(r.rhs == Approx(sconcave_midpoint_rhs(FunctionSpec::log_natural(), Interval(1, 2), SParams::with_p(1, 2)))
                       .epsilon(1e-12));
}

TEST_CASE("p6 vanishes as the interval shrinks") {
    MeansInput in;
    in.a = 1;
    in.b = 1 + 1e-3;
    in.s = 1;
    in.p = 2;
    const auto r = prop_log_identric(in);
    CHECK(r.lhs < 1e-6);
    CHECK(r.rhs < 1e-6);
    CHECK(r.holds);
}

TEST_CASE("input validation") {
    MeansInput in;
    in.a = 0;
    in.b = 1;
    CHECK_THROWS_AS(in.validate(), DomainError);
    in.a = 2;
    CHECK_THROWS_AS(in.validate(), DomainError);
    in = ee_input();
    in.x = 2.0;
    CHECK_THROWS_AS(in.validate(), DomainError);
    in = ee_input();
    in.p = 2;
    in.q = 3;
    CHECK_THROWS_AS(prop_power_bound(in, PowerVariant::EE2), ParamError);
    in = ee_input();
    in.s = 1.5;
    CHECK_THROWS_AS(in.validate(), ParamError);
    CHECK_THROWS_AS(prop_power_bound(ee_input(), PowerVariant::EE3), ParamError);
    CHECK(ee_input().point() == 0.625);
}

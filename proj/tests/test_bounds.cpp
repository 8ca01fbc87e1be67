#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ostrowski/bounds.hpp"
#include "ostrowski/kernels.hpp"

using namespace ostrowski;
using doctest::Approx;

namespace {

const Interval unit(0.0, 1.0);
const FunctionSpec cube = FunctionSpec::parse("poly:0,0,0,1");
const FunctionSpec affine = FunctionSpec::parse("poly:1,2");

double q01(const Integrand& g) { return integral(g, unit); }

// Brute-force right sides: every integral of the proofs evaluated by quadrature.
double oracle_sconvex(const FunctionSpec& f, double x, const Interval& iv, double s) {
    const double dx = std::abs(f.eval_d2(x)), da = std::abs(f.eval_d2(iv.a)), db = std::abs(f.eval_d2(iv.b));
    const double ia = q01([&](double t) { return t * t * (std::pow(t, s) * dx + std::pow(1 - t, s) * da); });
    const double ib = q01([&](double t) { return t * t * (std::pow(t, s) * dx + std::pow(1 - t, s) * db); });
    const double L = iv.length();
    return std::pow(x - iv.a, 3) / (2 * L) * ia + std::pow(iv.b - x, 3) / (2 * L) * ib;
}

double oracle_holder(const FunctionSpec& f, double x, const Interval& iv, double s, double p) {
    const double q = p / (p - 1);
    const double dx = std::pow(std::abs(f.eval_d2(x)), q), da = std::pow(std::abs(f.eval_d2(iv.a)), q),
                 db = std::pow(std::abs(f.eval_d2(iv.b)), q);
    const double tp = std::pow(q01([&](double t) { return std::pow(t, 2 * p); }), 1 / p);
    auto side = [&](double e) {
        return std::pow(q01([&](double t) { return std::pow(t, s) * dx + std::pow(1 - t, s) * e; }), 1 / q);
    };
    const double L = iv.length();
    return std::pow(x - iv.a, 3) / (2 * L) * tp * side(da) + std::pow(iv.b - x, 3) / (2 * L) * tp * side(db);
}

double oracle_powermean(const FunctionSpec& f, double x, const Interval& iv, double s, double q) {
    const double dx = std::pow(std::abs(f.eval_d2(x)), q), da = std::pow(std::abs(f.eval_d2(iv.a)), q),
                 db = std::pow(std::abs(f.eval_d2(iv.b)), q);
    const double t2 = std::pow(q01([](double t) { return t * t; }), 1 - 1 / q);
    auto side = [&](double e) {
        return std::pow(q01([&](double t) { return t * t * (std::pow(t, s) * dx + std::pow(1 - t, s) * e); }), 1 / q);
    };
    const double L = iv.length();
    return std::pow(x - iv.a, 3) / (2 * L) * t2 * side(da) + std::pow(iv.b - x, 3) / (2 * L) * t2 * side(db);
}

}  // namespace

TEST_CASE("algebraic helpers") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-4, 4), w(0, 1);
    for (int i = 0; i < 500; ++i) {
        double a = u(rng), b = u(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const Interval iv(a, b);
        const double x = a + (b - a) * w(rng);
        CHECK(cubic_sum_direct(x, iv) == Approx(cubic_sum_closed(x, iv)).epsilon(1e-12));
        CHECK(cubic_sum_closed(x, iv) / (2 * iv.length()) * 0.25 ==
              Approx(0.75 * ostrowski_shape(x, iv)).epsilon(1e-12));
    }
    for (double s : {0.1, 0.5, 1.0})
        CHECK(sconvex_constant(s) == Approx(moment_s2(s) + moment_beta(s)).epsilon(1e-14));
    CHECK(sconvex_constant(1.0) == Approx(1.0 / 3.0));
}

TEST_CASE("classic Ostrowski") {
    const auto r = bound_classic(FunctionSpec::parse("poly:0,1"), 0.0, unit);
    CHECK(r.equation_id == "classic");
    CHECK(r.lhs == Approx(0.5));
    CHECK(r.rhs == 0.5);
    CHECK(r.holds);
    const auto q = bound_classic(FunctionSpec::parse("poly:0,0,1"), 0.5, unit);
    CHECK(q.lhs == Approx(1.0 / 12));
    CHECK(q.rhs == Approx(0.5));
    const auto c = bound_classic(FunctionSpec::parse("poly:3"), 0.2, unit);
    CHECK(c.lhs == Approx(0.0));
    CHECK(c.rhs == 0.0);
    CHECK(c.holds);
}

TEST_CASE("sup |f''| bound") {
    const auto r = bound_cerone(cube, 0.5, unit, false);
    CHECK(r.rhs == Approx(0.25));
    CHECK(r.lhs == Approx(0.125));
    CHECK(r.holds);
    CHECK(bound_cerone(cube, 0.5, unit, true).rhs == Approx(1.0));
    const Interval iv(1, 3);
    CHECK(cerone_rhs(2.0, iv, 5.0, false) == Approx(5.0 * 4.0 / 24.0));
    const auto mid = bound_cerone_midpoint(FunctionSpec::exponential(), iv);
    CHECK(mid.rhs == Approx(cerone_rhs(2.0, iv, std::exp(3.0), false)).epsilon(1e-12));
    CHECK(mid.holds);
}

TEST_CASE("s-convex bound examples") {
    const auto r = bound_sconvex(cube, 0.5, unit, 1.0);
    CHECK(r.equation_id == "e2.5");
    CHECK(r.rhs == Approx(0.125).epsilon(1e-12));
    CHECK(std::abs(r.lhs - r.rhs) < 1e-9);
    CHECK(r.holds);
    CHECK(r.hypothesis_checked);
    const auto z = bound_sconvex(affine, 0.3, unit, 0.5);
    CHECK(z.lhs == Approx(0.0));
    CHECK(z.rhs == 0.0);
    CHECK(z.holds);
    const auto c = bound_sconvex(FunctionSpec::scaled_power_s(1, 0.5), 0.5, Interval(0.25, 1), 0.5);
    CHECK(c.holds);
    CHECK(c.hypothesis_checked);
    CHECK_THROWS_AS(bound_sconvex(FunctionSpec::power_s(0.5), 0.5, unit, 0.5), NonFiniteValue);
}

TEST_CASE("pointwise right sides match brute-force quadrature") {
    const std::pair<const char*, Interval> cases[] = {
        {"poly:0,0,0,1", unit}, {"exp", unit}, {"ln", Interval(1, 2)}, {"cpow:1,0.5", Interval(0.25, 1)}};
    for (const auto& [id, iv] : cases) {
        const auto f = FunctionSpec::parse(id);
        for (double s : {0.25, 0.5, 1.0}) {
            for (int i = 0; i <= 4; ++i) {
                const double x = iv.a + iv.length() * i / 4;
                CAPTURE(id);
                CAPTURE(x);
                CHECK(sconvex_rhs(f, x, iv, s) == Approx(oracle_sconvex(f, x, iv, s)).epsilon(1e-9));
                for (double p : {1.5, 2.0, 4.0})
                    CHECK(holder_rhs(f, x, iv, SParams::with_p(s, p)) ==
                          Approx(oracle_holder(f, x, iv, s, p)).epsilon(1e-9));
                for (double q : {1.0, 2.0, 3.0})
                    CHECK(powermean_rhs(f, x, iv, SParams::with_q(s, q)) ==
                          Approx(oracle_powermean(f, x, iv, s, q)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("Hoelder bound example") {
    const auto r = bound_holder(cube, 0.5, unit, SParams::make(1.0, 2.0, 2.0));
    const double term1 = std::sqrt(4.5) / (16 * std::sqrt(5.0));
    const double term2 = std::sqrt(22.5) / (16 * std::sqrt(5.0));
    CHECK(term1 == Approx(0.05929).epsilon(1e-4));
    CHECK(term2 == Approx(0.13258).epsilon(1e-4));
    CHECK(r.rhs == Approx(term1 + term2).epsilon(1e-12));
    CHECK(r.rhs == Approx(0.19187).epsilon(1e-4));
    CHECK(r.holds);
    // at x = a only the b-term survives
    const double only_b = holder_rhs(cube, 0.0, unit, SParams::with_p(1.0, 2.0));
    CHECK(only_b == Approx(1.0 / (2 * std::sqrt(5.0)) * std::sqrt(36.0 / 2)).epsilon(1e-12));
    CHECK(bound_holder(affine, 0.5, unit, SParams::with_p(0.5, 3.0)).rhs == 0.0);
}

TEST_CASE("power-mean bound") {
    for (double s : {0.25, 1.0})
        for (double x : {0.0, 0.3, 1.0})
            CHECK(powermean_rhs(FunctionSpec::exponential(), x, unit, SParams::with_q(s, 1.0)) ==
                  Approx(sconvex_rhs(FunctionSpec::exponential(), x, unit, s)).epsilon(1e-12));
    const auto r = bound_powermean(cube, 0.5, unit, SParams::with_q(1.0, 2.0));
    CHECK(r.equation_id == "teo3");
    CHECK(r.rhs == Approx(oracle_powermean(cube, 0.5, unit, 1.0, 2.0)).epsilon(1e-10));
    CHECK(r.holds);
    CHECK(bound_powermean(affine, 0.5, unit, SParams::with_q(1.0, 2.0)).rhs == 0.0);
}

TEST_CASE("s-concave bound") {
    const auto ln = FunctionSpec::log_natural();
    const Interval iv(1, 2);
    const double expect = 1 / std::sqrt(5.0) * (0.125 * 0.64 + 0.125 / 3.0625) / 2;
    CHECK(sconcave_rhs(ln, 1.5, iv, SParams::with_p(1.0, 2.0)) == Approx(expect).epsilon(1e-12));
    const auto r = bound_sconcave(ln, 1.5, iv, SParams::with_p(1.0, 2.0));
    CHECK(r.equation_id == "e2.9");
    CHECK(r.holds);
    const double printed = std::pow(2.0, 0.0) * 1.0 / (16 * std::sqrt(5.0)) * (1 / 1.5625 + 1 / 3.0625);
    CHECK(sconcave_midpoint_rhs(ln, iv, SParams::with_p(1.0, 2.0)) == Approx(printed).epsilon(1e-12));
    CHECK(bound_sconcave_midpoint(ln, iv, SParams::with_p(1.0, 2.0)).equation_id == "e2.12");
    CHECK(bound_sconcave(affine, 0.5, unit, SParams::with_p(1.0, 2.0)).rhs == 0.0);
    // t^2 has constant |f''|, which is 1-concave
    const auto sq = bound_sconcave(FunctionSpec::parse("poly:0,0,1"), 0.4, unit, SParams::with_p(1.0, 2.0));
    CHECK(sq.hypothesis_checked);
    CHECK(sq.holds);
}

TEST_CASE("M corollaries") {
    CHECK(bound_sconvex_M(0.5, unit, 1.0, 6.0, false) == Approx(0.25));
    CHECK(bound_sconvex_M(0.5, unit, 0.5, 0.0, false) == 0.0);
    CHECK(bound_holder_M(0.5, unit, SParams::make(1.0, 2.0, 2.0), 6.0) == Approx(0.75 / std::sqrt(5.0)));
    CHECK(bound_holder_M(0.5, unit, SParams::with_p(1.0, 2.0), 6.0) >= holder_rhs(cube, 0.5, unit, SParams::with_p(1.0, 2.0)));
    CHECK(bound_powermean_M(0.5, unit, SParams::with_q(1.0, 2.0), 6.0) == Approx(0.25));
    CHECK(bound_powermean_M(3.5, Interval(2, 5), SParams::with_q(1.0, 1.0), 3.0) == Approx(3.0 * 9 / 24));
    CHECK_THROWS_AS(bound_sconvex_M(0.5, unit, 1.0, -1.0, false), ParamError);

    const auto a = bound_sconvex_with_M(cube, 0.25, unit, 1.0, false);
    CHECK(a.equation_id == "e2.6a");
    CHECK(a.params.at("M") == Approx(6.0));
    CHECK(a.holds);
    CHECK(bound_sconvex_with_M(cube, 0.25, unit, 1.0, true).equation_id == "e2.6b");
    // an M below sup |f''| invalidates the hypothesis
    CHECK_FALSE(bound_sconvex_with_M(cube, 0.25, unit, 1.0, false, {}, 5.0).hypothesis_checked);
    CHECK(bound_holder_with_M(cube, 0.25, unit, SParams::with_p(0.5, 2.0)).equation_id == "e2.8");
    CHECK(bound_powermean_with_M(cube, 0.25, unit, SParams::with_q(0.5, 2.0)).equation_id == "cor6");
}

TEST_CASE("midpoint corollaries are their parents at the midpoint") {
    const Interval iv(0.5, 2.5);
    for (double s : {0.25, 0.5, 1.0}) {
        CHECK(midpoint_sconvex_M(iv, s, 3.0) == Approx(bound_sconvex_M(1.5, iv, s, 3.0, true)).epsilon(1e-14));
        for (double p : {1.5, 2.0, 4.0})
            CHECK(midpoint_holder_M(iv, SParams::with_p(s, p), 3.0) ==
                  Approx(bound_holder_M(1.5, iv, SParams::with_p(s, p), 3.0)).epsilon(1e-12));
        for (double q : {1.0, 2.0, 3.0})
            CHECK(midpoint_powermean_M(iv, SParams::with_q(s, q), 3.0) ==
                  Approx(bound_powermean_M(1.5, iv, SParams::with_q(s, q), 3.0)).epsilon(1e-12));
    }
    CHECK(midpoint_powermean_M(iv, SParams::with_q(1.0, 1.0), 3.0) == Approx(3.0 * 4 / 24));
}

TEST_CASE("perturbed trapezoid") {
    CHECK(perturbed_trapezoid_rhs(unit, SParams::with_q(1.0, 1.0), TrapezoidVariant::PowerMean, 6.0) == Approx(1.0));
    CHECK(perturbed_trapezoid_rhs(unit, SParams::with_p(1.0, 2.0), TrapezoidVariant::Holder, 6.0) ==
          Approx(6.0 / (2 * std::sqrt(5.0))));
    const auto r = bound_perturbed_trapezoid(cube, unit, SParams::with_q(1.0, 1.0), TrapezoidVariant::PowerMean);
    CHECK(r.equation_id == "cor8");
    CHECK(r.lhs == Approx(0.5));
    CHECK(r.holds);
    const auto h = bound_perturbed_trapezoid(cube, unit, SParams::with_p(1.0, 2.0), TrapezoidVariant::Holder);
    CHECK(h.equation_id == "cor5");
    CHECK(h.holds);
    CHECK(bound_perturbed_trapezoid(affine, unit, SParams::with_p(0.5, 2.0), TrapezoidVariant::Holder).lhs ==
          Approx(0.0));
    // the trapezoid bound is the sum of the x = a and x = b M-bounds scaled by (b - a)/2
    const Interval iv(1, 4);
    for (double q : {1.0, 2.0}) {
        const auto sp = SParams::with_q(0.5, q);
        const double sum = (bound_powermean_M(iv.a, iv, sp, 2.0) + bound_powermean_M(iv.b, iv, sp, 2.0)) * iv.length() / 2;
        CHECK(perturbed_trapezoid_rhs(iv, sp, TrapezoidVariant::PowerMean, 2.0) == Approx(sum).epsilon(1e-12));
    }
}

TEST_CASE("options override hypothesis and reuse caches") {
    BoundOptions opts;
    opts.hypothesis = false;
    CHECK_FALSE(bound_sconvex(cube, 0.5, unit, 1.0, opts).hypothesis_checked);
    opts = {};
    opts.mean = 0.25;
    opts.sup_d2 = 6.0;
    const auto r = bound_cerone(cube, 0.5, unit, false, opts);
    CHECK(r.lhs == Approx(0.125));
    CHECK(r.rhs == Approx(0.25));
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(bound_sconvex(cube, 1.5, unit, 1.0), DomainError);
    CHECK_THROWS_AS(sconvex_rhs(cube, 0.5, unit, 0.0), ParamError);
    CHECK_THROWS_AS(holder_rhs(cube, 0.5, unit, SParams::plain(0.5)), ParamError);
}

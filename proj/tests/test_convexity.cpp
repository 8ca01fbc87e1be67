#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ostrowski/convexity.hpp"

using namespace ostrowski;
using doctest::Approx;

namespace {

bool same(const ConvexityReport& a, const ConvexityReport& b) {
    if (a.verdict != b.verdict || a.worst_violation != b.worst_violation || a.samples != b.samples ||
        a.slack != b.slack || a.witness.has_value() != b.witness.has_value())
        return false;
    if (a.witness)
        return a.witness->x == b.witness->x && a.witness->y == b.witness->y && a.witness->t == b.witness->t;
    return true;
}

}  // namespace

TEST_CASE("sqrt is 1/2-convex on [0,1]") {
    const auto r = check_s_convex([](double t) { return std::sqrt(t); }, 0.5, Interval(0, 1));
    CHECK(r.satisfied());
    CHECK(r.samples == 21LL * 21 * 21);
    CHECK(r.slack > 0);
}

TEST_CASE("concave power fails convexity with a witness") {
    const auto r = check_s_convex([](double t) { return std::sqrt(t); }, 1.0, Interval(0, 1));
    CHECK_FALSE(r.satisfied());
    REQUIRE(r.witness);
    // recompute the defect at the witness by hand
    const auto& w = *r.witness;
    const double D = std::sqrt(w.t * w.x + (1 - w.t) * w.y) - w.t * std::sqrt(w.x) - (1 - w.t) * std::sqrt(w.y);
    CHECK(D == Approx(r.worst_violation));
    CHECK(D > 0.1);
}

TEST_CASE("concavity examples") {
    CHECK(check_s_concave([](double t) { return -t * t; }, 1.0, Interval(0, 1)).satisfied());
    CHECK_FALSE(check_s_concave([](double t) { return t * t; }, 1.0, Interval(0, 1)).satisfied());
    CHECK(check_s_convex([](double t) { return t; }, 1.0, Interval(0, 1)).satisfied());
}

TEST_CASE("s-concavity of t^-2 on [1,2]") {
    const ScalarFn g = [](double t) { return 1.0 / (t * t); };
    CHECK(check_s_concave(g, 1.0, Interval(1, 2)).satisfied() == false);
    CHECK(check_s_convex(g, 1.0, Interval(1, 2)).satisfied());
}

TEST_CASE("affine functions are exactly 1-convex and 1-concave") {
    const ScalarFn g = [](double t) { return 3.0 * t - 1.0; };
    CHECK(check_s_convex(g, 1.0, Interval(-1, 2)).satisfied());
    CHECK(check_s_concave(g, 1.0, Interval(-1, 2)).satisfied());
}

TEST_CASE("slack controls the verdict") {
    // t^2 is 1-convex, -t^2 is not; a huge slack hides the violation
    const ScalarFn g = [](double t) { return -t * t; };
    CHECK_FALSE(check_s_convex(g, 1.0, Interval(0, 1)).satisfied());
    CHECK(check_s_convex(g, 1.0, Interval(0, 1), 21, 1.0).satisfied());
}

TEST_CASE("singular endpoints are inset") {
    // |(sqrt)''| = t^-1.5 / 4 blows up at 0
    const auto f = FunctionSpec::power_s(0.5);
    const auto r = check_s_convex(abs_d2_power(f), 1.0, Interval(0, 1), 11);
    CHECK(r.satisfied());
}

TEST_CASE("invalid arguments") {
    const ScalarFn g = [](double t) { return t; };
    CHECK_THROWS_AS(check_s_convex(g, 0.0, Interval(0, 1)), ParamError);
    CHECK_THROWS_AS(check_s_convex(g, 1.2, Interval(0, 1)), ParamError);
    CHECK_THROWS_AS(check_s_convex(g, 0.5, Interval(0, 1), 1), ParamError);
    CHECK_THROWS_AS(SParams::make(0.5, 2.0, 3.0), ParamError);
    CHECK_THROWS_AS(SParams::with_p(0.5, 1.0), ParamError);
    CHECK_THROWS_AS(SParams::with_q(0.5, 0.5), ParamError);
    CHECK_THROWS_AS(SParams::plain(0.5).holder_q(), ParamError);
    CHECK(SParams::with_p(0.5, 3.0).holder_q() == Approx(1.5));
    CHECK(SParams::make(0.5, 2.0, 2.0).p == 2.0);
}

TEST_CASE("parallel kernel matches the serial reference bit for bit") {
    const ScalarFn fns[] = {
        [](double t) { return std::sqrt(t); },
        [](double t) { return std::exp(t) - 2.0; },
        [](double t) { return std::sin(5 * t); },
        [](double t) { return t * t * t - t; },
    };
    for (const auto& g : fns) {
        for (double s : {0.25, 0.5, 1.0}) {
            for (int n : {3, 7, 21, 30}) {
                CHECK(same(check_s_convex(g, s, Interval(0, 1.5), n), reference::check_s_convex(g, s, Interval(0, 1.5), n)));
                CHECK(same(check_s_concave(g, s, Interval(0, 1.5), n),
                           reference::check_s_concave(g, s, Interval(0, 1.5), n)));
            }
        }
    }
}

TEST_CASE("exceptions inside the parallel region propagate") {
    const ScalarFn g = [](double t) -> double {
        if (t > 0.4 && t < 0.6) throw DomainError("hole");
        return t;
    };
    CHECK_THROWS_AS(check_s_convex(g, 1.0, Interval(0, 1)), DomainError);
}

TEST_CASE("abs_d2_power") {
    const auto f = FunctionSpec::parse("poly:0,0,0,1");
    CHECK(abs_d2_power(f, 2.0)(0.5) == Approx(9.0));
    CHECK(abs_d2_power(f)(-1.0) == Approx(6.0));
}

TEST_CASE("Hadamard inequality on t^2") {
    const auto [first, second] = hadamard_check(FunctionSpec::parse("poly:0,0,1"), 1.0, Interval(0, 1));
    CHECK(first.equation_id == "e1.1a");
    CHECK(second.equation_id == "e1.1b");
    CHECK(first.lhs == Approx(0.25));
    CHECK(first.rhs == Approx(1.0 / 3.0));
    CHECK(second.lhs == Approx(1.0 / 3.0));
    CHECK(second.rhs == Approx(0.5));
    CHECK(first.holds);
    CHECK(second.holds);
    CHECK(first.hypothesis_checked);
}

TEST_CASE("Hadamard equality for the Breckner example") {
    // 2^(s-1) f(1/2) = 1/2 on the left; the right half is an equality
    for (const auto& f : {FunctionSpec::power_s(0.5), FunctionSpec::breckner(0, 1, 0, 0.5)}) {
        const auto [first, second] = hadamard_check(f, 0.5, Interval(0, 1));
        CHECK(first.lhs == Approx(0.5));
        CHECK(first.rhs == Approx(2.0 / 3.0));
        CHECK(std::abs(second.lhs - second.rhs) < 1e-9);
        CHECK(second.holds);
        CHECK(first.hypothesis_checked);
    }
    const auto [l, r] = hadamard_check(FunctionSpec::parse("poly:0,1"), 1.0, Interval(0, 1));
    CHECK(l.lhs == Approx(0.5));
    CHECK(l.rhs == Approx(0.5));
    CHECK(r.rhs == Approx(0.5));
    const auto [l2, r2] = hadamard_check(FunctionSpec::parse("poly:0,0,1"), 1.0, Interval(0, 2));
    CHECK(l2.lhs == Approx(1.0));
    CHECK(l2.rhs == Approx(4.0 / 3.0));
    CHECK(r2.rhs == Approx(2.0));
}

TEST_CASE("Hadamard hypothesis fails for negative functions") {
    const auto [first, second] = hadamard_check(FunctionSpec::parse("poly:-1,0,1"), 0.5, Interval(0, 1));
    CHECK_FALSE(first.hypothesis_checked);
    CHECK_FALSE(second.hypothesis_checked);
}

#pragma once

// Test-function catalogue with closed-form first and second derivatives.
//
// Every family is twice differentiable on (domain_min, inf). String ids:
//   poly:c0,c1,...      ascending coefficients
//   pow_s:s             t^s, s in (0,1]
//   breckner:u,v,w,s    u at t=0, v t^s + w for t>0
//   ln                  natural logarithm
//   exp                 exponential
//   cpow:c,s            c t^(s+2), so that f''(t) = c (s+2)(s+1) t^s

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ostrowski/errors.hpp"

namespace ostrowski {

struct Interval {
    double a;
    double b;

    // Throws ParamError unless a < b and both are finite.
    Interval(double lo, double hi);

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double x) const { return x >= a && x <= b; }
};

namespace family {

struct Polynomial {
    std::vector<double> coefficients;  // ascending powers
    std::vector<double> d1, d2;        // derivative coefficients, same layout
};
struct PowerS {
    double s;
};
struct Breckner {
    double u, v, w, s;
};
struct LogNatural {};
struct Exponential {};
struct ScaledPowerS {
    double c, s;
};

}  // namespace family

class FunctionSpec {
public:
    using Family = std::variant<family::Polynomial, family::PowerS, family::Breckner,
                                family::LogNatural, family::Exponential, family::ScaledPowerS>;

    static FunctionSpec polynomial(std::vector<double> coefficients);
    static FunctionSpec power_s(double s);
    static FunctionSpec breckner(double u, double v, double w, double s);
    static FunctionSpec log_natural();
    static FunctionSpec exponential();
    static FunctionSpec scaled_power_s(double c, double s);

    // Parses the string ids listed at the top of this header.
    static FunctionSpec parse(std::string_view id);

    // Canonical id; parse(id()) reproduces the same function.
    std::string id() const;

    const Family& family() const { return family_; }

    // Greatest lower bound of the region where f, f', f'' are finite.
    double domain_min() const;
    // True when t = domain_min itself is an admissible argument of eval.
    bool domain_min_inclusive() const;

    double eval(double t) const;
    double eval_d1(double t) const;
    double eval_d2(double t) const;

private:
    explicit FunctionSpec(Family f) : family_(std::move(f)) {}
    Family family_;
};

// Least M with |f''| <= M on [a,b]: dense grid scan followed by golden-section
// refinement around the grid maximum. Throws NonFiniteValue when |f''| is
// unbounded (or undefined) somewhere on the closed interval.
double sup_abs_d2(const FunctionSpec& f, const Interval& iv, int grid_points = 10001);

// Same estimator applied to |f'|; used by the classical Ostrowski bound.
double sup_abs_d1(const FunctionSpec& f, const Interval& iv, int grid_points = 10001);

}  // namespace ostrowski

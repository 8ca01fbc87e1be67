#pragma once

// Right-hand sides of the Ostrowski-type inequalities and their comparison
// against the functional computed by the quadrature oracle.
//
// Equation ids:
//   classic  |f(x) - mean| <= [1/4 + (x-m)^2/(b-a)^2] (b-a) sup|f'|
//   e1.2     second-derivative bound with sup|f''| (tight / relaxed)
//   e1.3     its midpoint form
//   e2.5     |f''| s-convex, pointwise values of f''
//   e2.6a/b  e2.5 with |f''| <= M (tight / relaxed)
//   e2.7     |f''|^q s-convex, Hoelder route
//   e2.8     e2.7 with |f''| <= M
//   teo3     |f''|^q s-convex, power-mean route
//   cor6     teo3 with |f''| <= M
//   e2.9     |f''|^q s-concave, Hoelder route with midpoint values
//   e2.12    e2.9 at x = (a+b)/2
//   cor5     perturbed trapezoid, Hoelder constants
//   cor8     perturbed trapezoid, power-mean constants
// where m = (a+b)/2 and F is the signed functional from kernels.hpp.

#include <optional>

#include "ostrowski/bound_result.hpp"
#include "ostrowski/convexity.hpp"
#include "ostrowski/funcmodel.hpp"
#include "ostrowski/quadrature.hpp"

namespace ostrowski {

// Evaluation knobs plus caches that sweeps can fill once per (f, [a,b]).
struct BoundOptions {
    QuadratureConfig quad{};
    double tolerance = kDefaultTolerance;
    int convexity_grid = kDefaultConvexityGrid;
    // When set, replaces the lattice hypothesis check (true = assume it holds).
    std::optional<bool> hypothesis;
    std::optional<double> mean;    // (1/(b-a)) int f
    std::optional<double> sup_d1;  // sup |f'| on [a,b]
    std::optional<double> sup_d2;  // sup |f''| on [a,b]
};

// (s^2 + 3s + 4) / ((s+1)(s+2)(s+3)); equals 1/(s+3) + 2/((s+1)(s+2)(s+3)).
double sconvex_constant(double s);

// (x-a)^3 + (b-x)^3 evaluated directly and via (b-a)[(b-a)^2/4 + 3(x-m)^2].
double cubic_sum_direct(double x, const Interval& iv);
double cubic_sum_closed(double x, const Interval& iv);

// (b-a)^2/24 + (x-m)^2/2, the common x-shape of the M-bounds.
double ostrowski_shape(double x, const Interval& iv);

// ---- pointwise-f'' theorems --------------------------------------------

BoundResult bound_classic(const FunctionSpec& f, double x, const Interval& iv,
                          const BoundOptions& opts = {});

// relaxed=false: [(b-a)^2/24 + (x-m)^2/2] M; relaxed=true: (b-a)^2/6 M.
// M defaults to sup_abs_d2.
BoundResult bound_cerone(const FunctionSpec& f, double x, const Interval& iv, bool relaxed,
                         const BoundOptions& opts = {}, std::optional<double> M = std::nullopt);
double cerone_rhs(double x, const Interval& iv, double M, bool relaxed);

// Midpoint form: |F(m)| <= M (b-a)^2 / 24.
BoundResult bound_cerone_midpoint(const FunctionSpec& f, const Interval& iv,
                                  const BoundOptions& opts = {},
                                  std::optional<double> M = std::nullopt);

BoundResult bound_sconvex(const FunctionSpec& f, double x, const Interval& iv, double s,
                          const BoundOptions& opts = {});
double sconvex_rhs(const FunctionSpec& f, double x, const Interval& iv, double s);

BoundResult bound_holder(const FunctionSpec& f, double x, const Interval& iv,
                         const SParams& params, const BoundOptions& opts = {});
double holder_rhs(const FunctionSpec& f, double x, const Interval& iv, const SParams& params);

BoundResult bound_powermean(const FunctionSpec& f, double x, const Interval& iv,
                            const SParams& params, const BoundOptions& opts = {});
double powermean_rhs(const FunctionSpec& f, double x, const Interval& iv, const SParams& params);

BoundResult bound_sconcave(const FunctionSpec& f, double x, const Interval& iv,
                           const SParams& params, const BoundOptions& opts = {});
double sconcave_rhs(const FunctionSpec& f, double x, const Interval& iv, const SParams& params);

// x = (a+b)/2 form of the s-concave bound.
BoundResult bound_sconcave_midpoint(const FunctionSpec& f, const Interval& iv,
                                    const SParams& params, const BoundOptions& opts = {});
double sconcave_midpoint_rhs(const FunctionSpec& f, const Interval& iv, const SParams& params);

// ---- |f''| <= M corollaries ---------------------------------------------

double bound_sconvex_M(double x, const Interval& iv, double s, double M, bool relaxed);
double bound_holder_M(double x, const Interval& iv, const SParams& params, double M);
double bound_powermean_M(double x, const Interval& iv, const SParams& params, double M);

// Comparisons of the three M-bounds with |F(x)|; M defaults to sup_abs_d2.
// hypothesis_checked additionally requires M >= sup |f''|.
BoundResult bound_sconvex_with_M(const FunctionSpec& f, double x, const Interval& iv, double s,
                                 bool relaxed, const BoundOptions& opts = {},
                                 std::optional<double> M = std::nullopt);
BoundResult bound_holder_with_M(const FunctionSpec& f, double x, const Interval& iv,
                                const SParams& params, const BoundOptions& opts = {},
                                std::optional<double> M = std::nullopt);
BoundResult bound_powermean_with_M(const FunctionSpec& f, double x, const Interval& iv,
                                   const SParams& params, const BoundOptions& opts = {},
                                   std::optional<double> M = std::nullopt);

// x-independent midpoint forms of the three M-bounds.
double midpoint_sconvex_M(const Interval& iv, double s, double M);  // M (b-a)^2/2 K(s)
double midpoint_holder_M(const Interval& iv, const SParams& params, double M);
double midpoint_powermean_M(const Interval& iv, const SParams& params, double M);

// ---- perturbed trapezoid ------------------------------------------------

enum class TrapezoidVariant { Holder, PowerMean };

// Holder uses params.p (q = p/(p-1)); PowerMean uses params.q.
double perturbed_trapezoid_rhs(const Interval& iv, const SParams& params,
                               TrapezoidVariant variant, double M);
BoundResult bound_perturbed_trapezoid(const FunctionSpec& f, const Interval& iv,
                                      const SParams& params, TrapezoidVariant variant,
                                      const BoundOptions& opts = {},
                                      std::optional<double> M = std::nullopt);

}  // namespace ostrowski

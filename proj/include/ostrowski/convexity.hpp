#pragma once

// Sampled s-convexity / s-concavity (second sense) checks and the
// Hermite-Hadamard inequality for s-convex functions.
//
// g is s-convex on [a,b] when
//     g(t x + (1-t) y) <= t^s g(x) + (1-t)^s g(y)
// for all x, y in [a,b], t in [0,1]. The checker evaluates the defect
//     D = g(t x + (1-t) y) - t^s g(x) - (1-t)^s g(y)
// on a grid_n^3 lattice and reports the worst sample. It is a hypothesis
// gate, not a proof.

#include <functional>
#include <optional>
#include <utility>

#include "ostrowski/bound_result.hpp"
#include "ostrowski/funcmodel.hpp"
#include "ostrowski/quadrature.hpp"

namespace ostrowski {

using ScalarFn = std::function<double(double)>;

// Exponent bundle of the theorems: s in (0,1], optional Hoelder pair p, q.
struct SParams {
    double s = 1.0;
    std::optional<double> p;
    std::optional<double> q;

    // s only (first-derivative-free theorems).
    static SParams plain(double s);
    // p > 1, q derived as p / (p - 1).
    static SParams with_p(double s, double p);
    // q >= 1 with no p (power-mean theorem).
    static SParams with_q(double s, double q);
    // Either or both of p, q; when both are given they must satisfy
    // |1/p + 1/q - 1| <= 1e-12.
    static SParams make(double s, std::optional<double> p, std::optional<double> q);

    // q for the Hoelder theorems; throws ParamError when p is absent.
    double holder_q() const;
};

struct ConvexityReport {
    enum class Verdict { Satisfied, Violated };
    struct Witness {
        double x, y, t;
    };

    Verdict verdict = Verdict::Satisfied;
    double worst_violation = 0.0;  // max(0, max D) (convex) or max(0, max -D) (concave)
    std::optional<Witness> witness;
    long long samples = 0;
    double slack = 0.0;

    bool satisfied() const { return verdict == Verdict::Satisfied; }
};

inline constexpr int kDefaultConvexityGrid = 21;

// Parallel lattice checks. Slack defaults to 1e-10 (1 + max |g| on the grid).
// When g is non-finite (or throws) at an endpoint, that lattice endpoint is
// moved inward by 1e-9 (b - a).
ConvexityReport check_s_convex(const ScalarFn& g, double s, const Interval& iv,
                               int grid_n = kDefaultConvexityGrid,
                               std::optional<double> slack = std::nullopt);
ConvexityReport check_s_concave(const ScalarFn& g, double s, const Interval& iv,
                                int grid_n = kDefaultConvexityGrid,
                                std::optional<double> slack = std::nullopt);

namespace reference {

// Straight serial triple loop; must agree bit-for-bit with the parallel kernel.
ConvexityReport check_s_convex(const ScalarFn& g, double s, const Interval& iv,
                               int grid_n = kDefaultConvexityGrid,
                               std::optional<double> slack = std::nullopt);
ConvexityReport check_s_concave(const ScalarFn& g, double s, const Interval& iv,
                                int grid_n = kDefaultConvexityGrid,
                                std::optional<double> slack = std::nullopt);

}  // namespace reference

// t -> |f''(t)|^q, the quantity whose s-convexity the theorems assume.
ScalarFn abs_d2_power(const FunctionSpec& f, double q = 1.0);

// Both halves of the Hadamard inequality for s-convex f >= 0:
//   first:  2^(s-1) f((a+b)/2) <= mean        (id "e1.1a")
//   second: mean <= (f(a) + f(b)) / (s + 1)  (id "e1.1b")
// The mean comes from the quadrature oracle. hypothesis_checked reflects a
// lattice s-convexity check of f together with f >= 0 on the grid.
std::pair<BoundResult, BoundResult> hadamard_check(const FunctionSpec& f, double s,
                                                   const Interval& iv,
                                                   const QuadratureConfig& cfg = {},
                                                   double tolerance = kDefaultTolerance);

}  // namespace ostrowski

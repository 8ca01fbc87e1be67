#include "ostrowski/convexity.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <vector>

#include "format.hpp"
#include "lattice.hpp"

namespace ostrowski {

SParams SParams::plain(double s) { return make(s, std::nullopt, std::nullopt); }
SParams SParams::with_p(double s, double p) { return make(s, p, std::nullopt); }
SParams SParams::with_q(double s, double q) { return make(s, std::nullopt, q); }

SParams SParams::make(double s, std::optional<double> p, std::optional<double> q) {
    if (!(s > 0.0 && s <= 1.0))
        throw ParamError("s must lie in (0,1], got " + detail::fmt(s));
    if (p && !(*p > 1.0 && std::isfinite(*p)))
        throw ParamError("p must be > 1, got " + detail::fmt(*p));
    if (q && !(*q >= 1.0 && std::isfinite(*q)))
        throw ParamError("q must be >= 1, got " + detail::fmt(*q));
    if (p && q && std::abs(1.0 / *p + 1.0 / *q - 1.0) > 1e-12)
        throw ParamError("p and q are not conjugate: 1/p + 1/q = " +
                         detail::fmt(1.0 / *p + 1.0 / *q));
    return SParams{s, p, q};
}

double SParams::holder_q() const {
    if (!p) {
        if (q && *q > 1.0) return *q;
        throw ParamError("Hoelder bound needs p > 1 (or q > 1)");
    }
    return *p / (*p - 1.0);
}

namespace {

ConvexityReport run_parallel(const ScalarFn& g, double s, const Interval& iv, int grid_n,
                             std::optional<double> slack, bool concave) {
    const detail::Lattice L = detail::build_lattice(g, s, iv, grid_n, slack, concave);
    const int n = grid_n;

    struct RowBest {
        double value;
        int j, k;
    };
    std::vector<RowBest> rows(n, RowBest{-std::numeric_limits<double>::infinity(), 0, 0});
    std::vector<std::exception_ptr> errors(n);

    // Rows are independent; each keeps the first maximum in (j, k) order and
    // the rows are reduced serially below, giving the same tie-breaking as the
    // reference triple loop.
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        try {
            RowBest best = rows[i];
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const double d = detail::defect(g, L, i, j, k);
                    if (d > best.value) best = RowBest{d, j, k};
                }
            rows[i] = best;
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    double worst = -std::numeric_limits<double>::infinity();
    int bi = 0, bj = 0, bk = 0;
    for (int i = 0; i < n; ++i)
        if (rows[i].value > worst) {
            worst = rows[i].value;
            bi = i;
            bj = rows[i].j;
            bk = rows[i].k;
        }
    return detail::finish(L, worst, bi, bj, bk);
}

}  // namespace

ConvexityReport check_s_convex(const ScalarFn& g, double s, const Interval& iv, int grid_n,
                               std::optional<double> slack) {
    return run_parallel(g, s, iv, grid_n, slack, false);
}

ConvexityReport check_s_concave(const ScalarFn& g, double s, const Interval& iv, int grid_n,
                                std::optional<double> slack) {
    return run_parallel(g, s, iv, grid_n, slack, true);
}

ScalarFn abs_d2_power(const FunctionSpec& f, double q) {
    if (!(q >= 1.0)) throw ParamError("exponent q must be >= 1");
    if (q == 1.0) return [f](double t) { return std::abs(f.eval_d2(t)); };
    return [f, q](double t) { return std::pow(std::abs(f.eval_d2(t)), q); };
}

std::pair<BoundResult, BoundResult> hadamard_check(const FunctionSpec& f, double s,
                                                   const Interval& iv,
                                                   const QuadratureConfig& cfg,
                                                   double tolerance) {
    const auto fa = f.eval(iv.a);
    const auto fb = f.eval(iv.b);
    const auto fm = f.eval(iv.midpoint());
    const double mean =
        integral([&](double t) { return f.eval(t); }, iv, cfg) / iv.length();

    const ScalarFn g = [&f](double t) { return f.eval(t); };
    const auto report = check_s_convex(g, s, iv);
    bool nonneg = fa >= 0.0 && fb >= 0.0;
    for (int i = 0; i <= 100 && nonneg; ++i) nonneg = f.eval(iv.a + iv.length() * i / 100.0) >= 0.0;
    const bool hypothesis = report.satisfied() && nonneg;

    auto left = make_bound_result("e1.1a", std::pow(2.0, s - 1.0) * fm, mean, hypothesis,
                                  std::nullopt, tolerance);
    auto right = make_bound_result("e1.1b", mean, (fa + fb) / (s + 1.0), hypothesis,
                                   std::nullopt, tolerance);
    for (auto* r : {&left, &right}) {
        r->params = {{"a", iv.a}, {"b", iv.b}, {"s", s}};
        if (!nonneg) r->notes.push_back("f takes negative values on [a,b]");
        if (!report.satisfied()) r->notes.push_back("f failed the sampled s-convexity check");
        if (s == 1.0) r->notes.push_back("s = 1: ordinary Hermite-Hadamard");
    }
    return {left, right};
}

}  // namespace ostrowski

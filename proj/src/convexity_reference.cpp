#include <limits>

#include "lattice.hpp"
#include "ostrowski/convexity.hpp"

namespace ostrowski::reference {

namespace {

ConvexityReport run_serial(const ScalarFn& g, double s, const Interval& iv, int grid_n,
                           std::optional<double> slack, bool concave) {
    const detail::Lattice L = detail::build_lattice(g, s, iv, grid_n, slack, concave);
    double worst = -std::numeric_limits<double>::infinity();
    int bi = 0, bj = 0, bk = 0;
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j)
            for (int k = 0; k < grid_n; ++k) {
                const double d = detail::defect(g, L, i, j, k);
                if (d > worst) {
                    worst = d;
                    bi = i;
                    bj = j;
                    bk = k;
                }
            }
    return detail::finish(L, worst, bi, bj, bk);
}

}  // namespace

ConvexityReport check_s_convex(const ScalarFn& g, double s, const Interval& iv, int grid_n,
                               std::optional<double> slack) {
    return run_serial(g, s, iv, grid_n, slack, false);
}

ConvexityReport check_s_concave(const ScalarFn& g, double s, const Interval& iv, int grid_n,
                                std::optional<double> slack) {
    return run_serial(g, s, iv, grid_n, slack, true);
}

}  // namespace ostrowski::reference

// Wall-clock comparison of the OpenMP kernels against their serial
// references. Usage: ostrowski_bench [grid_n] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "ostrowski/campaign.hpp"
#include "ostrowski/convexity.hpp"

using namespace ostrowski;

template <class Fn>
double time_ms(int repeats, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

int main(int argc, char** argv) {
    const int grid = argc > 1 ? std::atoi(argv[1]) : 61;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    std::cout << "threads: " << omp_get_max_threads() << "\n";

    const auto f = FunctionSpec::parse("breckner:0,1,0,0.5");
    const Interval iv(0.25, 1.0);
    const auto g = abs_d2_power(f, 2.0);

    ConvexityReport par, ser;
    const double t_par = time_ms(repeats, [&] { par = check_s_convex(g, 0.5, iv, grid); });
    const double t_ser = time_ms(repeats, [&] { ser = reference::check_s_convex(g, 0.5, iv, grid); });
    std::cout << "convexity lattice " << grid << "^3: parallel " << t_par << " ms, serial "
              << t_ser << " ms, speedup " << t_ser / t_par
              << (par.worst_violation == ser.worst_violation ? "" : "  MISMATCH") << "\n";

    const auto c = VerificationCampaign::default_campaign();
    CampaignReport rp, rs;
    const double c_par = time_ms(1, [&] { rp = run_campaign(c, Execution::Parallel); });
    const double c_ser = time_ms(1, [&] { rs = run_campaign(c, Execution::Serial); });
    std::cout << "default campaign (" << rp.cells.size() << " cells): parallel " << c_par
              << " ms, serial " << c_ser << " ms, speedup " << c_ser / c_par
              << (rp.violations.size() == rs.violations.size() ? "" : "  MISMATCH") << "\n";
    return 0;
}

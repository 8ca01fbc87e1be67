#pragma once

// Equation dispatch, x-sweeps and full verification campaigns over a
// function x interval x equation x parameter x point lattice.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ostrowski/bound_result.hpp"
#include "ostrowski/bounds.hpp"
#include "ostrowski/funcmodel.hpp"

namespace ostrowski {

// Every equation id understood by evaluate_equation, in catalogue order.
const std::vector<std::string>& equation_catalogue();
bool is_known_equation(std::string_view id);
// False for equations evaluated at a fixed point (e1.3, e2.12, cor5, cor8).
bool equation_depends_on_x(std::string_view id);

struct EquationParams {
    double s = 1.0;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> M;  // nullopt: sup |f''| on [a,b]
};

// Evaluates one catalogue equation. x is required for x-dependent equations
// and ignored otherwise. Throws ostrowski::Error on invalid input or singular
// evaluations.
BoundResult evaluate_equation(std::string_view equation_id, const FunctionSpec& f,
                              const Interval& iv, std::optional<double> x,
                              const EquationParams& params, const BoundOptions& opts = {});

// n uniformly spaced points including both endpoints.
std::vector<double> uniform_points(const Interval& iv, int n);

struct SweepRow {
    double x = 0.0;
    std::optional<BoundResult> result;  // empty: evaluation skipped
    std::string skip_reason;
};

std::vector<SweepRow> sweep(const FunctionSpec& f, const Interval& iv,
                            std::string_view equation_id, const EquationParams& params,
                            int n_points, const BoundOptions& opts = {});

struct CampaignTarget {
    std::string function_id;
    std::vector<Interval> intervals;  // empty: use the campaign-wide list
};

struct VerificationCampaign {
    std::vector<CampaignTarget> functions;
    std::vector<Interval> intervals;
    std::vector<double> s_grid{0.25, 0.5, 0.75, 1.0};
    std::vector<double> p_grid{1.5, 2.0, 4.0};
    std::vector<double> q_grid{1.0, 2.0, 3.0};
    int x_points = 21;
    std::vector<std::string> equations;
    double tolerance = kDefaultTolerance;
    QuadratureConfig quad{};
    int convexity_grid = kDefaultConvexityGrid;
    // false: every cell is treated as satisfying its hypothesis (negative controls).
    bool hypothesis_gating = true;

    // Throws ParamError for empty grids, unknown equations or bad ids.
    void validate() const;

    // Built-in families on their natural intervals, every catalogue equation.
    static VerificationCampaign default_campaign();
};

struct CellResult {
    std::string function_id;
    Interval interval{0.0, 1.0};
    std::string equation_id;
    EquationParams params;
    std::optional<double> x;
    std::optional<BoundResult> result;
    std::string skip_reason;

    bool violated() const { return result && !result->holds && result->hypothesis_checked; }
};

struct CampaignReport {
    std::vector<CellResult> cells;
    std::vector<std::size_t> violations;  // indices into cells
    // Per equation: max lhs/rhs over hypothesis-satisfying cells with rhs > 0.
    std::map<std::string, double> tightness;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    std::size_t hypothesis_satisfied = 0;

    // 0 = no violations, 2 = violations.
    int exit_code() const { return violations.empty() ? 0 : 2; }
};

enum class Execution { Serial, Parallel };

// Cells are evaluated independently (in parallel unless Execution::Serial);
// the report is assembled in enumeration order, so both modes produce the
// same report.
CampaignReport run_campaign(const VerificationCampaign& c,
                            Execution mode = Execution::Parallel);

}  // namespace ostrowski

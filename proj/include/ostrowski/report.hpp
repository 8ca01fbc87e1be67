#pragma once

// JSON / CSV serialisation of results and campaign configuration.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ostrowski/bound_result.hpp"
#include "ostrowski/campaign.hpp"
#include "ostrowski/convexity.hpp"
#include "ostrowski/kernels.hpp"

namespace ostrowski {

using Json = nlohmann::ordered_json;

Json to_json(const BoundResult& r);
Json to_json(const ConvexityReport& r);
Json to_json(const KernelEvaluation& k);
Json to_json(const CellResult& c);
Json to_json(const CampaignReport& r);

// Fixed column order: x,lhs,rhs,margin,holds,hypothesis_checked.
inline constexpr const char* kCsvHeader = "x,lhs,rhs,margin,holds,hypothesis_checked";
std::string csv_row(const BoundResult& r);
// Skipped points keep their x and leave the remaining cells empty.
std::string csv_row(const SweepRow& row);
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// Campaign file: a JSON object whose keys mirror VerificationCampaign.
//   functions:  ["exp", {"id": "ln", "intervals": [[1, 2]]}, ...]
//   intervals:  [[0, 1], ...]
//   s_grid, p_grid, q_grid: [numbers]
//   x_points, convexity_grid: integer
//   equations:  ["e2.5", ...]
//   tolerance, quad_tol, quad_depth, hypothesis_gating
// Missing keys keep the default_campaign() values.
VerificationCampaign campaign_from_json(const Json& j);
Json campaign_to_json(const VerificationCampaign& c);

}  // namespace ostrowski

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "diamondlab/bounds.hpp"
#include "diamondlab/duality.hpp"
#include "diamondlab/gap_analysis.hpp"
#include "diamondlab/model.hpp"
#include "diamondlab/relay_selection.hpp"
#include "diamondlab/sync_sim.hpp"

namespace diamondlab {

/// 17 significant digits.
std::string format_number(double v);

// Scene files:
// {"source":[x,y], "dest":[x,y], "relay1":[x,y], "pathloss_exponent":3,
//  "grid_bounds":[xmin,ymin,xmax,ymax], "grid_resolution":100}
Scene scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const Scene& scene);
/// Throws ConfigError if the file is missing or malformed.
Scene load_scene(const std::filesystem::path& path);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const RelayDecision& decision);
nlohmann::json to_json(const RatioSweepResult& result);
nlohmann::json to_json(const SyncSimReport& report);
nlohmann::json to_json(const DualitySummary& summary);

/// Columns: g1,g2,h1,h2,beta,n0, the BoundReport fields in kBoundReportFields
/// order, then decision.
std::string bounds_csv_header();
std::string bounds_csv_row(const ChannelGains& gains, const AsyncParams& params,
                           const BoundReport& report, const RelayDecision& decision);

/// Columns: x,y,decision,ub_r1,ub_r2,ub_both,lb2,lb_theorem. Degenerate cells
/// carry decision "degenerate" and empty numeric fields.
std::string region_csv_header();
std::string region_csv_row(const RegionCell& cell);
nlohmann::json region_to_json(const RegionMap& map);

/// Columns: beta,worst_ratio,g1,g2,h1,h2,envelope_low,envelope_high.
std::string ratio_csv_header();
std::string ratio_csv_row(const RatioSweepResult& result);

/// Splits one CSV line on commas (no quoting is ever emitted).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace diamondlab

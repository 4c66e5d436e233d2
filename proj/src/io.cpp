#include "diamondlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace diamondlab {

namespace {

Point2 point_from_json(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2) {
    throw ConfigError(std::string("scene key '") + key + "' must be [x, y]");
  }
  return {v.at(0).get<double>(), v.at(1).get<double>()};
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

nlohmann::json rate_json(const RateEstimate& r) {
  return {{"events", r.events}, {"trials", r.trials}, {"rate", r.rate},
          {"wilson95_lower", r.lower}, {"wilson95_upper", r.upper}};
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Scene scene_from_json(const nlohmann::json& j) {
  try {
    const Point2 source = point_from_json(j, "source");
    const Point2 dest = point_from_json(j, "dest");
    const Point2 relay1 = point_from_json(j, "relay1");
    const double exponent = j.value("pathloss_exponent", 3.0);
    const auto& b = j.at("grid_bounds");
    if (!b.is_array() || b.size() != 4) {
      throw ConfigError("scene key 'grid_bounds' must be [xmin, ymin, xmax, ymax]");
    }
    const Rect bounds{b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>(),
                      b.at(3).get<double>()};
    const int resolution = j.at("grid_resolution").get<int>();
    return Scene(source, dest, relay1, exponent, bounds, resolution);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed scene: ") + e.what());
  } catch (const GeometryError& e) {
    throw ConfigError(std::string("degenerate scene: ") + e.what());
  }
}

nlohmann::json scene_to_json(const Scene& s) {
  const Rect b = s.grid_bounds();
  return {{"source", {s.source().x, s.source().y}},
          {"dest", {s.dest().x, s.dest().y}},
          {"relay1", {s.relay1().x, s.relay1().y}},
          {"pathloss_exponent", s.pathloss_exponent()},
          {"grid_bounds", {b.xmin, b.ymin, b.xmax, b.ymax}},
          {"grid_resolution", s.grid_resolution()}};
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scene file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("scene file " + path.string() + " is not valid JSON: " + e.what());
  }
  return scene_from_json(j);
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json j = nlohmann::json::object();
  const auto values = fields_of(report);
  for (std::size_t i = 0; i < values.size(); ++i) j[kBoundReportFields[i]] = values[i];
  return j;
}

nlohmann::json to_json(const RelayDecision& d) {
  return {{"kind", std::string(to_string(d.kind))},
          {"certificate",
           {{"inequality", d.certificate.inequality},
            {"lhs", d.certificate.lhs},
            {"rhs", d.certificate.rhs},
            {"margin", d.certificate.margin()}}}};
}

nlohmann::json to_json(const RatioSweepResult& r) {
  return {{"beta", r.beta},
          {"worst_ratio", r.worst_ratio},
          {"g1", r.argmax_gains[0]},
          {"g2", r.argmax_gains[1]},
          {"h1", r.argmax_gains[2]},
          {"h2", r.argmax_gains[3]},
          {"grid_resolution", r.grid_resolution},
          {"envelope_low", r.envelope_low},
          {"envelope_high", r.envelope_high}};
}

nlohmann::json to_json(const SyncSimReport& r) {
  const SyncSimConfig& c = r.config;
  nlohmann::json config = {
      {"mode", c.mode == SyncMode::Diamond ? "diamond" : "p2p"},
      {"bits", c.bits},
      {"beta", c.beta},
      {"delta", c.delta},
      {"n0", c.n0},
      {"g1", c.gains.g1()},
      {"g2", c.gains.g2()},
      {"h1", c.gains.h1()},
      {"h2", c.gains.h2()},
      {"trials", c.trials},
      {"seed", c.seed},
      {"max_log2_window", c.max_log2_window},
      {"per_slot", c.per_slot}};
  nlohmann::json j = {
      {"config", config},
      {"window", r.window},
      {"pulse_amplitude", r.pulse_amplitude},
      {"threshold", r.threshold},
      {"empirical_miss", rate_json(r.empirical_miss)},
      {"empirical_false_alarm", rate_json(r.empirical_false_alarm)},
      {"empirical_overall_error", rate_json(r.empirical_overall_error)},
      {"analytic_miss", r.analytic.miss},
      {"analytic_false_alarm", r.analytic.false_alarm},
      {"analytic_overall_error", r.analytic.overall},
      {"per_slot_false_alarm", r.analytic.per_slot_false_alarm},
      {"fa_union_bound", r.fa_union_bound},
      {"sync_energy_per_bit", r.energy.sync_energy_per_bit},
      {"comm_energy_per_bit_model", r.energy.comm_energy_per_bit_model},
      {"total_energy_per_bit_model", r.energy.total_energy_per_bit_model},
      {"rng_algorithm", r.rng_algorithm}};
  if (c.mode == SyncMode::Diamond) {
    j["relay_pulse_amplitudes"] = {r.relay_pulse_amplitudes[0], r.relay_pulse_amplitudes[1]};
  }
  return j;
}

nlohmann::json to_json(const DualitySummary& s) {
  return {{"trials", s.trials},
          {"failures", s.failures},
          {"max_cutset_gap", s.max_cutset_gap},
          {"max_sync_gap", s.max_sync_gap},
          {"tolerance", s.tolerance},
          {"passed", s.passed()}};
}

std::string bounds_csv_header() {
  std::vector<std::string> cols = {"g1", "g2", "h1", "h2", "beta", "n0"};
  for (const char* f : kBoundReportFields) cols.emplace_back(f);
  cols.emplace_back("decision");
  return join(cols);
}

std::string bounds_csv_row(const ChannelGains& gains, const AsyncParams& params,
                           const BoundReport& report, const RelayDecision& decision) {
  std::vector<std::string> cols = {format_number(gains.g1()), format_number(gains.g2()),
                                   format_number(gains.h1()), format_number(gains.h2()),
                                   format_number(params.beta()), format_number(params.n0())};
  for (double v : fields_of(report)) cols.push_back(format_number(v));
  cols.emplace_back(to_string(decision.kind));
  return join(cols);
}

std::string region_csv_header() { return "x,y,decision,ub_r1,ub_r2,ub_both,lb2,lb_theorem"; }

std::string region_csv_row(const RegionCell& cell) {
  std::vector<std::string> cols = {format_number(cell.position.x),
                                   format_number(cell.position.y)};
  if (cell.degenerate) {
    cols.emplace_back("degenerate");
    cols.insert(cols.end(), 5, "");
    return join(cols);
  }
  const BoundReport& b = cell.bounds;
  cols.emplace_back(to_string(cell.decision.kind));
  for (double v : {b.ub_relay1, b.ub_relay2, b.ub_both, b.lb2, b.lb_theorem}) {
    cols.push_back(format_number(v));
  }
  return join(cols);
}

nlohmann::json region_to_json(const RegionMap& map) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& cell : map.cells) {
    nlohmann::json row = {{"x", cell.position.x}, {"y", cell.position.y}};
    if (cell.degenerate) {
      row["decision"] = "degenerate";
    } else {
      const BoundReport& b = cell.bounds;
      row["decision"] = std::string(to_string(cell.decision.kind));
      row["ub_r1"] = b.ub_relay1;
      row["ub_r2"] = b.ub_relay2;
      row["ub_both"] = b.ub_both;
      row["lb2"] = b.lb2;
      row["lb_theorem"] = b.lb_theorem;
    }
    rows.push_back(std::move(row));
  }
  return {{"resolution", map.resolution},
          {"counts",
           {{"both", map.count(RelayUse::BothRelays)},
            {"relay1", map.count(RelayUse::Relay1Only)},
            {"relay2", map.count(RelayUse::Relay2Only)},
            {"unknown", map.count(RelayUse::Unknown)},
            {"degenerate", map.degenerate_count()}}},
          {"cells", rows}};
}

std::string ratio_csv_header() { return "beta,worst_ratio,g1,g2,h1,h2,envelope_low,envelope_high"; }

std::string ratio_csv_row(const RatioSweepResult& r) {
  return join({format_number(r.beta), format_number(r.worst_ratio),
               format_number(r.argmax_gains[0]), format_number(r.argmax_gains[1]),
               format_number(r.argmax_gains[2]), format_number(r.argmax_gains[3]),
               format_number(r.envelope_low), format_number(r.envelope_high)});
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace diamondlab

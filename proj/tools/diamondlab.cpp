// diamondlab: energy-per-bit bounds, relay selection maps, worst-case ratio
// sweeps and synchronization Monte Carlo for the two-relay diamond network.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diamondlab/bounds.hpp"
#include "diamondlab/duality.hpp"
#include "diamondlab/gap_analysis.hpp"
#include "diamondlab/io.hpp"
#include "diamondlab/lp.hpp"
#include "diamondlab/relay_selection.hpp"
#include "diamondlab/sync_sim.hpp"

namespace {

using namespace diamondlab;

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned threads = 0;
  std::string out;
  std::string format;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

unsigned threads_from_env() {
  if (const char* env = std::getenv("DIAMONDLAB_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("DIAMONDLAB_THREADS must be a non-negative integer");
    }
  }
  return 0;
}

RatioDenominator parse_denominator(const std::string& s) {
  return s == "best" ? RatioDenominator::Best : RatioDenominator::Theorem;
}

std::vector<double> parse_betas(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split_csv_line(text)) {
    if (part.empty()) continue;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw UsageError("--betas: '" + part + "' is not a number");
    }
    if (used != part.size() || !(v >= 0)) {
      throw UsageError("--betas: '" + part + "' is not a non-negative number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--betas: the beta list is empty");
  return out;
}

const auto kGainRange = CLI::Range(kMinGain, std::numeric_limits<double>::max());

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-per-bit bounds and synchronization simulation for the diamond network"};
  app.require_subcommand(1);
  Common common;
  std::optional<unsigned> threads_flag;
  app.add_option("--threads", threads_flag, "worker threads (0 = one per core)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "all bounds and the relay decision for one point");
  double g1 = 1, g2 = 1, h1 = 1, h2 = 1, beta = 0, n0 = 1;
  std::string denominator = "theorem";
  std::string bounds_format = "json";
  bounds->add_option("--g1", g1, "source -> relay 1 power gain")->required()->check(kGainRange);
  bounds->add_option("--g2", g2, "source -> relay 2 power gain")->required()->check(kGainRange);
  bounds->add_option("--h1", h1, "relay 1 -> destination power gain")->required()->check(kGainRange);
  bounds->add_option("--h2", h2, "relay 2 -> destination power gain")->required()->check(kGainRange);
  bounds->add_option("--beta", beta, "asynchronism exponent")->check(CLI::NonNegativeNumber);
  bounds->add_option("--n0", n0, "noise power")->check(CLI::PositiveNumber);
  bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--denominator", denominator)->check(CLI::IsMember({"theorem", "best"}));
  bounds->add_option("--out", common.out, "output file (default stdout)");

  // region-map
  auto* region = app.add_subcommand("region-map", "relay-selection map over relay 2 positions");
  std::string scene_path;
  double region_beta = 0.5, region_n0 = 1;
  std::string region_format = "csv";
  int region_resolution = 0;
  region->add_option("--scene", scene_path, "scene JSON file (default: built-in scene)");
  region->add_option("--beta", region_beta)->check(CLI::NonNegativeNumber);
  region->add_option("--n0", region_n0)->check(CLI::PositiveNumber);
  region->add_option("--resolution", region_resolution, "override the scene grid resolution")
      ->check(CLI::PositiveNumber);
  region->add_option("--format", region_format)->check(CLI::IsMember({"json", "csv"}));
  region->add_option("--out", common.out);

  // ratio-curve
  auto* curve = app.add_subcommand("ratio-curve", "worst-case upper/lower bound ratio per beta");
  std::string betas_text = "0.2,0.5,0.8,1.0";
  int grid = 30;
  double curve_n0 = 1;
  std::string curve_denominator = "theorem";
  std::string curve_format = "csv";
  curve->add_option("--betas", betas_text, "comma-separated beta values");
  curve->add_option("--grid", grid, "gains range over {1/R, ..., 1}")->check(CLI::Range(2, 1000));
  curve->add_option("--n0", curve_n0)->check(CLI::PositiveNumber);
  curve->add_option("--denominator", curve_denominator)->check(CLI::IsMember({"theorem", "best"}));
  curve->add_option("--format", curve_format)->check(CLI::IsMember({"json", "csv"}));
  curve->add_option("--out", common.out);

  // sim-sync
  auto* sim = app.add_subcommand("sim-sync", "Monte Carlo of pulse synchronization");
  SyncSimConfig cfg;
  std::string mode = "diamond";
  double sg1 = 1, sg2 = 1, sh1 = 1, sh2 = 1;
  sim->add_option("--mode", mode)->check(CLI::IsMember({"p2p", "diamond"}));
  sim->add_option("--bits", cfg.bits)->check(CLI::PositiveNumber);
  sim->add_option("--beta", cfg.beta)->check(CLI::PositiveNumber);
  sim->add_option("--delta", cfg.delta)->check(CLI::Range(0.0, 4.0));
  sim->add_option("--n0", cfg.n0)->check(CLI::PositiveNumber);
  sim->add_option("--g1", sg1, "link gain in p2p mode")->check(kGainRange);
  sim->add_option("--g2", sg2)->check(kGainRange);
  sim->add_option("--h1", sh1)->check(kGainRange);
  sim->add_option("--h2", sh2)->check(kGainRange);
  sim->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  sim->add_option("--seed", cfg.seed);
  sim->add_option("--max-log2-window", cfg.max_log2_window)->check(CLI::Range(0, 62));
  sim->add_flag("--per-slot", cfg.per_slot, "simulate every slot (small windows only)");
  sim->add_option("--out", common.out);

  // lp-check
  auto* check = app.add_subcommand("lp-check", "strong-duality check on random instances");
  std::size_t lp_trials = 1000;
  std::uint64_t lp_seed = 1;
  double lp_tol = 1e-9;
  check->add_option("--trials", lp_trials)->check(CLI::PositiveNumber);
  check->add_option("--seed", lp_seed);
  check->add_option("--tolerance", lp_tol)->check(CLI::PositiveNumber);
  check->add_option("--out", common.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    common.threads = threads_flag ? *threads_flag : threads_from_env();
    Output out(common.out);
    std::ostream& os = out.stream();

    if (*bounds) {
      const ChannelGains gains(g1, g2, h1, h2);
      const AsyncParams params(n0, beta);
      const BoundReport report = compute_bounds(gains, params, parse_denominator(denominator));
      const RelayDecision decision = classify_with_lb2(gains, params, report.lb2);
      if (bounds_format == "csv") {
        os << bounds_csv_header() << "\n" << bounds_csv_row(gains, params, report, decision) << "\n";
      } else {
        nlohmann::json j = {{"gains", {{"g1", g1}, {"g2", g2}, {"h1", h1}, {"h2", h2}}},
                            {"beta", beta},
                            {"n0", n0},
                            {"gamma", params.gamma()},
                            {"bounds", to_json(report)},
                            {"decision", to_json(decision)}};
        os << j.dump(2) << "\n";
      }
    } else if (*region) {
      Scene scene = scene_path.empty() ? default_scene() : load_scene(scene_path);
      if (region_resolution > 0) {
        scene = Scene(scene.source(), scene.dest(), scene.relay1(), scene.pathloss_exponent(),
                      scene.grid_bounds(), region_resolution);
      }
      const RegionMap map = region_map(scene, AsyncParams(region_n0, region_beta), common.threads);
      if (region_format == "json") {
        os << region_to_json(map).dump(2) << "\n";
      } else {
        os << region_csv_header() << "\n";
        for (const auto& cell : map.cells) os << region_csv_row(cell) << "\n";
      }
    } else if (*curve) {
      const auto betas = parse_betas(betas_text);
      SweepOptions options;
      options.denominator = parse_denominator(curve_denominator);
      options.threads = common.threads;
      std::vector<RatioSweepResult> results;
      for (double b : betas) results.push_back(worst_case_ratio(b, grid, curve_n0, options));
      if (curve_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results) j.push_back(to_json(r));
        os << j.dump(2) << "\n";
      } else {
        os << ratio_csv_header() << "\n";
        for (const auto& r : results) os << ratio_csv_row(r) << "\n";
      }
    } else if (*sim) {
      cfg.mode = mode == "p2p" ? SyncMode::PointToPoint : SyncMode::Diamond;
      cfg.gains = ChannelGains(sg1, sg2, sh1, sh2);
      cfg.threads = common.threads;
      os << to_json(simulate_sync(cfg)).dump(2) << "\n";
    } else if (*check) {
      const DualitySummary s = run_duality_suite(lp_trials, lp_seed, lp_tol, common.threads);
      os << to_json(s).dump(2) << "\n";
      if (!s.passed()) return kExitNumerical;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}

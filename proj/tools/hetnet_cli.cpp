#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hetnet/analytic.hpp"
#include "hetnet/csv.hpp"
#include "hetnet/montecarlo.hpp"

namespace {

using namespace hetnet;

struct CommonOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;  // 0 = keep the config's seed
  std::uint64_t drops = 10000;
  bool seed_set = false;
};

void add_common(CLI::App* app, CommonOptions& opt) {
  app->add_option("--config", opt.config_path, "JSON configuration file");
  app->add_option("--out", opt.out_dir, "Output directory (HETNET_OUT_DIR overrides)");
  app->add_option("--seed", opt.seed, "Master RNG seed")->each([&](const std::string&) {
    opt.seed_set = true;
  });
  app->add_option("--drops", opt.drops, "Monte Carlo drops");
}

NetworkConfig resolve_config(CommonOptions& opt) {
  NetworkConfig cfg = opt.config_path.empty() ? default_config() : load_config(opt.config_path);
  if (opt.seed_set) cfg.seed = opt.seed;
  if (const char* env = std::getenv("HETNET_OUT_DIR"); env && *env) opt.out_dir = env;
  return cfg;
}

std::vector<double> default_thresholds() {
  std::vector<double> t;
  for (int db = -10; db <= 30; ++db) t.push_back(db);
  return t;
}

std::string out_path(const CommonOptions& opt, const std::string& name) {
  return opt.out_dir + "/" + name;
}

void stamp(CsvWriter& csv, const NetworkConfig& cfg) {
  csv.metadata("seed", cfg.seed);
  std::ostringstream os;
  os << std::hex << config_hash(cfg);
  csv.metadata("config_hash", os.str());
}

PrecoderSet build_precoders(const NetworkConfig& cfg) {
  std::vector<GroupChannelModel> models;
  for (const auto& g : cfg.groups)
    models.push_back(eigendecompose(one_ring_covariance(g), cfg.energy_fraction));
  return build_precoder_set(cfg, models);
}

SimPlan base_plan(const NetworkConfig& cfg, const CommonOptions& opt,
                  const std::vector<double>& thresholds) {
  SimPlan plan;
  plan.num_drops = opt.drops;
  plan.seed = cfg.seed;
  plan.thresholds_db = thresholds;
  plan.interference = cfg.interference_mode;
  return plan;
}

int cmd_analyze(CommonOptions& opt) {
  const NetworkConfig cfg = resolve_config(opt);
  const double norm_sq = typical_group_norm_sq(cfg);
  const auto thresholds = default_thresholds();
  const OutageCurve two = outage_curve(cfg, thresholds, norm_sq, OutageMode::SINR, Scenario::TwoTier);
  const OutageCurve one = outage_curve(cfg, thresholds, norm_sq, OutageMode::SINR, Scenario::OneTier);

  CsvWriter csv;
  stamp(csv, cfg);
  csv.column("threshold_db", thresholds);
  csv.column("two_tier", two.values);
  csv.column("one_tier", one.values);
  std::vector<double> p0, p1, p2;
  for (const auto& c : two.components) {
    p0.push_back(c.no_bs);
    p1.push_back(c.macro_served);
    p2.push_back(c.pico_served);
  }
  csv.column("two_tier_no_bs", p0);
  csv.column("two_tier_macro", p1);
  csv.column("two_tier_pico", p2);
  csv.write(out_path(opt, "analyze.csv"));
  std::cout << "wrote " << out_path(opt, "analyze.csv") << "\n";
  return 0;
}

int cmd_simulate(CommonOptions& opt) {
  const NetworkConfig cfg = resolve_config(opt);
  const PrecoderSet precoders = build_precoders(cfg);
  const auto thresholds = default_thresholds();
  SimPlan plan = base_plan(cfg, opt, thresholds);
  const SimResult two = run_simulation(cfg, precoders, plan);
  plan.scenario = Scenario::OneTier;
  const SimResult one = run_simulation(cfg, precoders, plan);

  CsvWriter csv;
  stamp(csv, cfg);
  csv.metadata("drops", plan.num_drops);
  csv.metadata("two_tier_no_bs_drops", two.no_bs_drops);
  csv.metadata("two_tier_macro_drops", two.macro_drops);
  csv.metadata("two_tier_pico_drops", two.pico_drops);
  csv.metadata("error_drops", two.error_drops + one.error_drops);
  csv.column("threshold_db", thresholds);
  csv.column("two_tier", two.outage);
  csv.column("two_tier_ci", two.outage_ci);
  csv.column("two_tier_snr", two.snr_outage);
  csv.column("one_tier", one.outage);
  csv.column("one_tier_ci", one.outage_ci);
  csv.column("one_tier_snr", one.snr_outage);
  csv.write(out_path(opt, "simulate.csv"));
  std::cout << "wrote " << out_path(opt, "simulate.csv") << "\n";
  return 0;
}

int cmd_figure(CommonOptions& opt, const std::string& id) {
  const NetworkConfig cfg = resolve_config(opt);
  const double norm_sq = typical_group_norm_sq(cfg);
  const auto thresholds = default_thresholds();

  if (id == "fig1") {
    const PrecoderSet precoders = build_precoders(cfg);
    SimPlan plan = base_plan(cfg, opt, thresholds);
    const SimResult sim_two = run_simulation(cfg, precoders, plan);
    plan.scenario = Scenario::OneTier;
    const SimResult sim_one = run_simulation(cfg, precoders, plan);
    const OutageCurve ana_two =
        outage_curve(cfg, thresholds, norm_sq, OutageMode::SINR, Scenario::TwoTier);
    const OutageCurve ana_one =
        outage_curve(cfg, thresholds, norm_sq, OutageMode::SINR, Scenario::OneTier);

    CsvWriter csv;
    stamp(csv, cfg);
    csv.metadata("drops", plan.num_drops);
    csv.column("threshold_db", thresholds);
    csv.column("analytic_two_tier", ana_two.values);
    csv.column("analytic_one_tier", ana_one.values);
    csv.column("simulated_two_tier", sim_two.outage);
    csv.column("simulated_one_tier", sim_one.outage);
    csv.write(out_path(opt, "fig1.csv"));
    std::cout << "wrote " << out_path(opt, "fig1.csv") << "\n";
    return 0;
  }

  if (id == "fig2") {
    const PrecoderSet precoders = build_precoders(cfg);
    SimPlan plan = base_plan(cfg, opt, thresholds);
    const SimResult sim_zf = run_simulation(cfg, precoders, plan);
    plan.precoding = PrecodingMode::NoSecondStage;
    const SimResult sim_first_only = run_simulation(cfg, precoders, plan);
    const OutageCurve ana_sinr =
        outage_curve(cfg, thresholds, norm_sq, OutageMode::SINR, Scenario::TwoTier);
    const OutageCurve ana_snr =
        outage_curve(cfg, thresholds, norm_sq, OutageMode::NoiseLimited, Scenario::TwoTier);

    CsvWriter csv;
    stamp(csv, cfg);
    csv.metadata("drops", plan.num_drops);
    csv.column("threshold_db", thresholds);
    csv.column("analytic_sinr", ana_sinr.values);
    csv.column("analytic_snr", ana_snr.values);
    csv.column("simulated_zf_sinr", sim_zf.outage);
    csv.column("simulated_zf_snr", sim_zf.snr_outage);
    csv.column("simulated_first_stage_only", sim_first_only.outage);
    csv.write(out_path(opt, "fig2.csv"));
    std::cout << "wrote " << out_path(opt, "fig2.csv") << "\n";
    return 0;
  }

  if (id == "fig3") {
    const double base = cfg.tier2.density / cfg.tier1.density;
    std::vector<double> ratios;
    const int points = 25;
    for (int i = 0; i < points; ++i)
      ratios.push_back(base * std::pow(10.0, -1.0 + 4.0 * i / (points - 1)));
    const auto sweep =
        sweep_density_ratio(cfg, ratios, 0.0, norm_sq, opt.drops, cfg.seed);

    CsvWriter csv;
    stamp(csv, cfg);
    csv.metadata("drops", opt.drops);
    csv.metadata("threshold_db", "0");
    std::vector<double> r, a, s, c;
    for (const auto& pt : sweep) {
      r.push_back(pt.ratio);
      a.push_back(pt.analytic_outage);
      s.push_back(pt.simulated_outage);
      c.push_back(pt.simulated_ci);
    }
    csv.column("density_ratio", r);
    csv.column("analytic", a);
    csv.column("simulated", s);
    csv.column("simulated_ci", c);
    csv.write(out_path(opt, "fig3.csv"));
    std::cout << "wrote " << out_path(opt, "fig3.csv") << "\n";
    return 0;
  }

  std::cerr << "unknown figure id: " << id << " (expected fig1|fig2|fig3)\n";
  return 2;
}

int cmd_regions(CommonOptions& opt, int resolution) {
  const NetworkConfig cfg = resolve_config(opt);
  if (resolution < 2) throw ConfigError("regions: resolution must be >= 2");
  const double R = cfg.tier1.disc_radius;
  const double r = cfg.tier2.disc_radius;

  std::vector<double> rm(resolution), rs(resolution);
  for (int i = 0; i < resolution; ++i) {
    rm[i] = (i + 0.5) * R / resolution;  // cell centers avoid exact boundaries
    rs[i] = (i + 0.5) * r / resolution;
  }

  const char* case_names[] = {"LL", "NL", "LN", "NN"};
  std::vector<std::vector<double>> diff(resolution, std::vector<double>(resolution, 0.0));

  for (AlphaCase c : {AlphaCase::LL, AlphaCase::NL, AlphaCase::LN, AlphaCase::NN}) {
    for (ServingTier tier : {ServingTier::Macro, ServingTier::Pico}) {
      CsvWriter csv;
      stamp(csv, cfg);
      csv.column("r_m", rm);
      for (int j = 0; j < resolution; ++j) {
        std::vector<double> col(resolution);
        for (int i = 0; i < resolution; ++i) {
          const bool m = region_membership(c, tier, cfg, rm[i], rs[j]);
          const bool o = oracle_membership(c, tier, cfg, rm[i], rs[j]);
          col[i] = m ? 1.0 : 0.0;
          if (m != o) diff[i][j] = 1.0;
        }
        csv.column("rs_" + CsvWriter::format(rs[j]), col);
      }
      const std::string name = std::string("region_") +
                               case_names[static_cast<int>(c) - 1] + "_" +
                               (tier == ServingTier::Macro ? "macro" : "pico") + ".csv";
      csv.write(out_path(opt, name));
    }
  }

  CsvWriter csv;
  stamp(csv, cfg);
  csv.column("r_m", rm);
  std::size_t disagreements = 0;
  for (int j = 0; j < resolution; ++j) {
    std::vector<double> col(resolution);
    for (int i = 0; i < resolution; ++i) {
      col[i] = diff[i][j];
      if (diff[i][j] != 0.0) ++disagreements;
    }
    csv.column("rs_" + CsvWriter::format(rs[j]), col);
  }
  csv.write(out_path(opt, "region_oracle_diff.csv"));
  std::cout << "wrote 8 region masks + oracle diff to " << opt.out_dir << " ("
            << disagreements << " disagreements)\n";
  return disagreements == 0 ? 0 : 3;
}

int cmd_sweep(CommonOptions& opt, double threshold_db, double ratio_min, double ratio_max,
              int points) {
  const NetworkConfig cfg = resolve_config(opt);
  if (!(ratio_min > 0.0) || !(ratio_max > ratio_min) || points < 2)
    throw ConfigError("sweep: need 0 < ratio-min < ratio-max and points >= 2");
  const double norm_sq = typical_group_norm_sq(cfg);
  std::vector<double> ratios;
  for (int i = 0; i < points; ++i)
    ratios.push_back(ratio_min * std::pow(ratio_max / ratio_min,
                                          static_cast<double>(i) / (points - 1)));
  const auto sweep = sweep_density_ratio(cfg, ratios, threshold_db, norm_sq, opt.drops, cfg.seed);

  CsvWriter csv;
  stamp(csv, cfg);
  csv.metadata("drops", opt.drops);
  csv.metadata("threshold_db", CsvWriter::format(threshold_db));
  std::vector<double> r, a, s, c;
  for (const auto& pt : sweep) {
    r.push_back(pt.ratio);
    a.push_back(pt.analytic_outage);
    s.push_back(pt.simulated_outage);
    c.push_back(pt.simulated_ci);
  }
  csv.column("density_ratio", r);
  csv.column("analytic", a);
  csv.column("simulated", s);
  csv.column("simulated_ci", c);
  csv.write(out_path(opt, "sweep.csv"));
  std::cout << "wrote " << out_path(opt, "sweep.csv") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-tier mmWave network outage: analytic evaluation and Monte Carlo simulation"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string figure_id;
  int resolution = 201;
  double threshold_db = 0.0, ratio_min = 1.0, ratio_max = 1e4;
  int sweep_points = 25;

  auto* analyze = app.add_subcommand("analyze", "Analytic outage curves");
  add_common(analyze, opt);
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo outage curves");
  add_common(simulate, opt);
  auto* figure = app.add_subcommand("figure", "Reproduce a figure dataset (fig1|fig2|fig3)");
  add_common(figure, opt);
  figure->add_option("id", figure_id, "Figure id")->required();
  auto* regions = app.add_subcommand("regions", "Dump association-region masks");
  add_common(regions, opt);
  regions->add_option("--resolution", resolution, "Grid resolution per axis");
  auto* sweep = app.add_subcommand("sweep", "Density-ratio sweep");
  add_common(sweep, opt);
  sweep->add_option("--threshold-db", threshold_db, "SINR threshold in dB");
  sweep->add_option("--ratio-min", ratio_min, "Smallest density ratio");
  sweep->add_option("--ratio-max", ratio_max, "Largest density ratio");
  sweep->add_option("--points", sweep_points, "Number of sweep points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt);
    if (simulate->parsed()) return cmd_simulate(opt);
    if (figure->parsed()) return cmd_figure(opt, figure_id);
    if (regions->parsed()) return cmd_regions(opt, resolution);
    if (sweep->parsed()) return cmd_sweep(opt, threshold_db, ratio_min, ratio_max, sweep_points);
  } catch (const hetnet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const hetnet::NumericsError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const hetnet::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

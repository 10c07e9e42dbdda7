// hcn: analytic performance metrics and Monte Carlo validation for K-tier
// multi-antenna downlink networks under a threshold-based association policy.
//
// Subcommands: analyze, simulate, sweep, validate.
// Exit codes: 0 success, 1 config error, 2 numerics failure, 3 validation
// mismatch.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "hcn/association.hpp"
#include "hcn/config_io.hpp"
#include "hcn/efficiency.hpp"
#include "hcn/model.hpp"
#include "hcn/numerics.hpp"
#include "hcn/outage.hpp"
#include "hcn/sim/simulator.hpp"

namespace {

using namespace hcn;

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string strip_extension(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path;
  return path.substr(0, dot);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << content;
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body) {
  unsigned workers = threads > 0
                         ? static_cast<unsigned>(threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n ? n : 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= n) return;
          body(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOut {
  std::string tiers_csv, network_csv, summary;
};

AnalyzeOut analyze_report(const Scenario& s, int opt_grid) {
  const OutageReport orep = outage_overall(s);
  const EfficiencyReport erep = efficiency_report(s, opt_grid);
  const std::string method = method_label(orep.method, orep.zero_eps);

  std::ostringstream tiers;
  tiers << "tier,T_k,A_k,O_exact,O_int,O_L,O_U,method\n";
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    tiers << (k + 1) << ',' << fmt12(s.tiers[k].assoc_prob) << ','
          << fmt12(s.tiers[k].activation_prob) << ',' << fmt12(orep.exact[k])
          << ',' << fmt12(orep.interference_limited[k]) << ','
          << fmt12(orep.lower[k]) << ',' << fmt12(orep.upper[k]) << ','
          << method << '\n';
  }

  std::ostringstream net;
  net << "metric,value\n";
  auto row = [&net](const std::string& name, double v) {
    net << name << ',' << fmt12(v) << '\n';
  };
  for (std::size_t k = 0; k < s.num_tiers(); ++k)
    row("aar_tier_" + std::to_string(k + 1), erep.aar_tier[k]);
  row("aar", erep.aar);
  row("ant", erep.ant);
  row("ant_star", erep.ant_star);
  row("area_power", erep.area_power);
  row("energy_eff", erep.energy_eff);
  row("eps_star", erep.eps_star);
  net << "eps_star_boundary," << (erep.opt_boundary ? "yes" : "no") << '\n';
  row("ft_inf", erep.ft_inf);
  row("f_zero", erep.f_zero);
  row("lambda_cap", s.lambda_cap);
  row("no_coverage", s.no_coverage_prob);
  row("outage_exact", orep.overall_exact);
  row("outage_int", orep.overall_int);
  row("outage_lower", orep.overall_lower);
  row("outage_upper", orep.overall_upper);
  row("trans_eff", erep.trans_eff);

  std::ostringstream sum;
  sum << "network: " << s.num_tiers() << " tier(s), method " << method << "\n";
  sum << "  no-coverage probability: " << fmt12(s.no_coverage_prob) << "\n";
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    sum << "  tier " << (k + 1) << ": T=" << fmt12(s.tiers[k].assoc_prob)
        << " A=" << fmt12(s.tiers[k].activation_prob)
        << " O_int=" << fmt12(orep.interference_limited[k]) << " bounds=["
        << fmt12(orep.lower[k]) << ", " << fmt12(orep.upper[k]) << "]\n";
  }
  sum << "  overall outage (exact/int): " << fmt12(orep.overall_exact) << " / "
      << fmt12(orep.overall_int) << "\n";
  sum << "  throughput: " << fmt12(erep.ant) << " bits/s/Hz/m^2 (max "
      << fmt12(erep.ant_star) << " at eps = " << fmt12(erep.eps_star) << " W"
      << (erep.opt_boundary ? ", grid boundary" : "") << ")\n";
  sum << "  avg rate: " << fmt12(erep.aar) << " bits/s/Hz\n";
  sum << "  energy efficiency: " << fmt12(erep.energy_eff)
      << " bits/s/Hz/W, transmission efficiency: " << fmt12(erep.trans_eff)
      << "\n";
  return {tiers.str(), net.str(), sum.str()};
}

int cmd_analyze(const std::string& config_path, std::string out, int opt_grid) {
  const NetworkConfig cfg = load_config(config_path);
  const Scenario s = Scenario::make(cfg);
  if (out.empty()) out = strip_extension(config_path);
  const AnalyzeOut rep = analyze_report(s, opt_grid);
  write_file(out + ".tiers.csv", rep.tiers_csv);
  write_file(out + ".network.csv", rep.network_csv);
  write_file(out + ".summary.txt", rep.summary);
  std::ostringstream meta;
  meta << "# command = analyze\n" << write_config(cfg)
       << "\n[analyze]\nopt_grid = " << opt_grid << "\n";
  write_file(out + ".meta", meta.str());
  std::cout << rep.summary;
  std::cout << "wrote " << out << ".tiers.csv, " << out << ".network.csv, "
            << out << ".summary.txt\n";
  return 0;
}

// --------------------------------------------------------------- simulate

struct SimCompare {
  std::string csv;
  bool all_pass = true;
};

SimCompare simulate_compare(const Scenario& s, const sim::CampaignReport& rep) {
  const bool noisy = s.cfg.noise_watts > 0.0;
  std::ostringstream csv;
  csv << "metric,tier,beta_db,analytic,empirical,std_err,n,pass\n";
  bool all_pass = true;

  auto row = [&](const std::string& metric, const std::string& tier,
                 const std::string& beta, double ana, const sim::MetricStat& m,
                 bool fraction) {
    csv << metric << ',' << tier << ',' << beta << ',' << fmt12(ana) << ',';
    if (m.n == 0 || std::isnan(m.mean)) {
      csv << "undef,undef," << m.n << ",undef\n";
      return;
    }
    csv << fmt12(m.mean) << ',';
    if (std::isnan(m.se)) {
      csv << "undef," << m.n << ",undef\n";
      return;
    }
    // Comparison scale: the empirical SE, or for fractions whose empirical
    // variance degenerates (no events observed), the binomial SE under the
    // analytic value.
    double se_cmp = m.se;
    if (fraction)
      se_cmp = std::max(
          se_cmp, std::sqrt(ana * (1.0 - ana) / static_cast<double>(m.n)));
    const bool ok = std::abs(m.mean - ana) <= 3.0 * se_cmp;
    all_pass = all_pass && ok;
    csv << fmt12(m.se) << ',' << m.n << ',' << (ok ? "yes" : "no") << '\n';
  };

  for (std::size_t k = 0; k < s.num_tiers(); ++k)
    row("T", std::to_string(k + 1), "", s.tiers[k].assoc_prob, rep.assoc[k],
        true);
  for (std::size_t k = 0; k < s.num_tiers(); ++k)
    row("A", std::to_string(k + 1), "", s.tiers[k].activation_prob,
        rep.activation[k], true);
  row("no_coverage", "net", "", s.no_coverage_prob, rep.no_coverage, true);
  for (std::size_t k = 0; k < s.num_tiers(); ++k) {
    for (std::size_t b = 0; b < rep.betas_db.size(); ++b) {
      const double beta = db_to_linear(rep.betas_db[b]);
      const double ana = noisy ? outage_exact_at(s, k, beta, QkMode::Auto)
                               : outage_int_at(s, k, beta);
      row("O", std::to_string(k + 1), fmt12(rep.betas_db[b]), ana,
          rep.outage[k][b], true);
    }
  }
  row("ant", "net", "", area_throughput(s, noisy), rep.ant, false);
  row("aar", "net", "", avg_rate(s), rep.aar, false);
  return {csv.str(), all_pass};
}

int cmd_simulate(const std::string& config_path, std::string out,
                 const sim::SimOptions& opt, bool exit_on_mismatch) {
  const NetworkConfig cfg = load_config(config_path);
  const Scenario s = Scenario::make(cfg);
  if (out.empty()) out = strip_extension(config_path);
  const sim::CampaignReport rep = sim::run_campaign(s, opt);
  const SimCompare cmp = simulate_compare(s, rep);
  write_file(out + ".sim.csv", cmp.csv);
  std::ostringstream meta;
  meta << "# command = simulate\n" << write_config(cfg) << "\n[simulate]\n"
       << "trials = " << opt.trials << "\nseed = " << opt.seed
       << "\nradius = " << fmt17(rep.radius) << "\n";
  meta << "betas_db =";
  for (double b : rep.betas_db) meta << ' ' << fmt12(b);
  meta << "\ntruncation_bound_w = " << fmt17(rep.truncation_bound) << "\n";
  write_file(out + ".meta", meta.str());
  std::cout << "simulated " << opt.trials << " trials (seed " << opt.seed
            << ", window radius " << fmt12(rep.radius) << " m)\n"
            << "wrote " << out << ".sim.csv ("
            << (cmp.all_pass ? "all rows within 3 SE"
                             : "some rows outside 3 SE")
            << ")\n";
  if (exit_on_mismatch && !cmp.all_pass) return 3;
  return 0;
}

// ------------------------------------------------------------------ sweep

struct ParamRef {
  std::function<void(NetworkConfig&, double)> set;
};

ParamRef resolve_param(const NetworkConfig& cfg, const std::string& path) {
  auto tier_index = [&cfg](const std::string& p, const std::string& field,
                           std::size_t* k) {
    const std::string prefix = "tier[";
    if (p.rfind(prefix, 0) != 0) return false;
    const std::size_t close = p.find(']');
    if (close == std::string::npos || p.substr(close + 1) != "." + field)
      return false;
    const long idx = std::strtol(p.c_str() + prefix.size(), nullptr, 10);
    if (idx < 1 || static_cast<std::size_t>(idx) > cfg.num_tiers())
      throw ConfigError("sweep parameter '" + p + "': tier index out of range");
    *k = static_cast<std::size_t>(idx - 1);
    return true;
  };

  if (path == "access_threshold")
    return {[](NetworkConfig& c, double v) { c.access_threshold = v; }};
  if (path == "noise")
    return {[](NetworkConfig& c, double v) { c.noise_watts = v; }};
  if (path == "user_density")
    return {[](NetworkConfig& c, double v) { c.user_density = v; }};
  if (path == "amp_efficiency")
    return {[](NetworkConfig& c, double v) { c.amp_efficiency = v; }};
  if (path == "circuit_power")
    return {[](NetworkConfig& c, double v) { c.circuit_power_watts = v; }};
  if (path == "static_power")
    return {[](NetworkConfig& c, double v) { c.static_power_watts = v; }};
  std::size_t k = 0;
  if (tier_index(path, "power", &k))
    return {[k](NetworkConfig& c, double v) { c.tiers[k].power_watts = v; }};
  if (tier_index(path, "density", &k))
    return {[k](NetworkConfig& c, double v) { c.tiers[k].density = v; }};
  if (tier_index(path, "bias", &k))
    return {[k](NetworkConfig& c, double v) { c.tiers[k].bias = v; }};
  if (tier_index(path, "pathloss_exp", &k))
    return {[k](NetworkConfig& c, double v) { c.tiers[k].pathloss_exp = v; }};
  if (tier_index(path, "sinr_threshold", &k))
    return {[k](NetworkConfig& c, double v) { c.tiers[k].sinr_threshold = v; }};
  if (tier_index(path, "antennas", &k))
    return {[k](NetworkConfig& c, double v) {
      c.tiers[k].antennas = std::max(1, static_cast<int>(std::lround(v)));
    }};
  throw ConfigError("unknown sweep parameter '" + path + "'");
}

const std::vector<std::string> kSweepMetrics = {
    "assoc", "activation", "outage_exact", "outage_int", "bounds",
    "ant",   "aar",        "energy_eff",   "trans_eff"};

struct SweepSpec {
  std::string param;
  double lo = 0.0, hi = 0.0;
  int points = 2;
  std::string scale = "log";
  std::vector<std::string> metrics;
};

std::string sweep_csv(const NetworkConfig& base, const SweepSpec& spec,
                      int threads) {
  for (const std::string& m : spec.metrics) {
    if (std::find(kSweepMetrics.begin(), kSweepMetrics.end(), m) ==
        kSweepMetrics.end())
      throw ConfigError("unknown sweep metric '" + m + "'");
  }
  if (spec.points < 2) throw ConfigError("sweep: points must be >= 2");
  if (!(spec.lo < spec.hi)) throw ConfigError("sweep: lo must be < hi");
  if (spec.scale != "log" && spec.scale != "linear")
    throw ConfigError("sweep: scale must be 'linear' or 'log'");
  if (spec.scale == "log" && spec.lo <= 0.0)
    throw ConfigError("sweep: log scale needs lo > 0");
  const ParamRef param = resolve_param(base, spec.param);

  const std::size_t K = base.num_tiers();
  auto has = [&spec](const char* m) {
    return std::find(spec.metrics.begin(), spec.metrics.end(), m) !=
           spec.metrics.end();
  };
  std::ostringstream header;
  header << "param,value";
  auto per_tier = [&](const std::string& name) {
    for (std::size_t k = 1; k <= K; ++k) header << ',' << name << '_' << k;
  };
  if (has("assoc")) {
    per_tier("T");
    header << ",no_coverage";
  }
  if (has("activation")) per_tier("A");
  if (has("outage_exact")) {
    per_tier("O_exact");
    header << ",O_exact";
  }
  if (has("outage_int")) {
    per_tier("O_int");
    header << ",O_int";
  }
  if (has("bounds")) {
    per_tier("O_L");
    per_tier("O_U");
  }
  if (has("ant")) header << ",ant";
  if (has("aar")) {
    per_tier("U");
    header << ",U";
  }
  if (has("energy_eff")) header << ",F";
  if (has("trans_eff")) header << ",F_T";

  std::vector<double> grid(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < spec.points; ++i) {
    const double t = static_cast<double>(i) / (spec.points - 1);
    grid[static_cast<std::size_t>(i)] =
        spec.scale == "log" ? std::exp(std::log(spec.lo) +
                                       t * (std::log(spec.hi) - std::log(spec.lo)))
                            : spec.lo + t * (spec.hi - spec.lo);
  }

  std::vector<std::string> rows(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    NetworkConfig cfg = base;
    param.set(cfg, grid[i]);
    const Scenario s = Scenario::make(cfg);
    std::ostringstream row;
    row << spec.param << ',' << fmt12(grid[i]);
    if (has("assoc")) {
      for (std::size_t k = 0; k < K; ++k)
        row << ',' << fmt12(s.tiers[k].assoc_prob);
      row << ',' << fmt12(s.no_coverage_prob);
    }
    if (has("activation"))
      for (std::size_t k = 0; k < K; ++k)
        row << ',' << fmt12(s.tiers[k].activation_prob);
    if (has("outage_exact")) {
      double overall = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        const double o = outage_exact(s, k);
        overall += s.tiers[k].assoc_prob * o;
        row << ',' << fmt12(o);
      }
      row << ',' << fmt12(overall);
    }
    if (has("outage_int")) {
      double overall = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        const double o = outage_int(s, k);
        overall += s.tiers[k].assoc_prob * o;
        row << ',' << fmt12(o);
      }
      row << ',' << fmt12(overall);
    }
    if (has("bounds")) {
      std::vector<double> lo_v(K), hi_v(K);
      for (std::size_t k = 0; k < K; ++k) {
        const auto [lo, hi] = outage_bounds(s, k);
        lo_v[k] = lo;
        hi_v[k] = hi;
      }
      for (std::size_t k = 0; k < K; ++k) row << ',' << fmt12(lo_v[k]);
      for (std::size_t k = 0; k < K; ++k) row << ',' << fmt12(hi_v[k]);
    }
    if (has("ant")) row << ',' << fmt12(area_throughput(s));
    if (has("aar")) {
      double overall = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        const double u = avg_rate_tier(s, k);
        overall += s.tiers[k].assoc_prob * u;
        row << ',' << fmt12(u);
      }
      row << ',' << fmt12(overall);
    }
    if (has("energy_eff")) row << ',' << fmt12(energy_efficiency(s));
    if (has("trans_eff")) row << ',' << fmt12(transmission_efficiency(s));
    row << '\n';
    rows[i] = row.str();
  });

  std::string out = header.str() + "\n";
  for (const std::string& r : rows) out += r;
  return out;
}

std::string join(const std::vector<std::string>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

int cmd_sweep(const NetworkConfig& cfg, const SweepSpec& spec, std::string out,
              int threads) {
  validate(cfg);
  const std::string csv = sweep_csv(cfg, spec, threads);
  write_file(out + ".sweep.csv", csv);
  std::ostringstream meta;
  meta << "# command = sweep\n" << write_config(cfg) << "\n[sweep]\n"
       << "param = " << spec.param << "\nlo = " << fmt17(spec.lo)
       << "\nhi = " << fmt17(spec.hi) << "\npoints = " << spec.points
       << "\nscale = " << spec.scale << "\nmetrics = "
       << join(spec.metrics, ',') << "\n";
  write_file(out + ".meta", meta.str());
  std::cout << "wrote " << out << ".sweep.csv (" << spec.points
            << " grid points)\n";
  return 0;
}

// Re-run a sweep from its metadata sidecar.
std::pair<NetworkConfig, SweepSpec> parse_sweep_meta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open meta file '" + path + "'");
  std::stringstream head;
  std::string line;
  bool in_sweep = false;
  SweepSpec spec;
  auto trim = [](std::string v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
      v.erase(v.begin());
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
      v.pop_back();
    return v;
  };
  while (std::getline(in, line)) {
    if (trim(line) == "[sweep]") {
      in_sweep = true;
      continue;
    }
    if (!in_sweep) {
      head << line << '\n';
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "param") spec.param = val;
    else if (key == "lo") spec.lo = std::stod(val);
    else if (key == "hi") spec.hi = std::stod(val);
    else if (key == "points") spec.points = std::stoi(val);
    else if (key == "scale") spec.scale = val;
    else if (key == "metrics") {
      std::stringstream ms(val);
      std::string m;
      while (std::getline(ms, m, ',')) spec.metrics.push_back(trim(m));
    }
  }
  if (!in_sweep) throw ConfigError("meta file lacks a [sweep] section");
  return {parse_config_string(head.str()), spec};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-tier downlink HCN analyzer and Monte Carlo validator"};
  app.require_subcommand(1);

  std::string config_path, out;
  int threads = 0;

  auto* analyze = app.add_subcommand("analyze", "full analytic report");
  int opt_grid = 200;
  analyze->add_option("config", config_path, "config file")->required();
  analyze->add_option("--out", out, "output path prefix");
  analyze->add_option("--opt-grid", opt_grid, "threshold optimizer grid points");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo campaign");
  sim::SimOptions sim_opt;
  std::vector<double> betas_db;
  simulate->add_option("config", config_path, "config file")->required();
  simulate->add_option("--trials", sim_opt.trials, "number of trials");
  simulate->add_option("--seed", sim_opt.seed, "campaign seed");
  simulate->add_option("--radius", sim_opt.radius,
                       "window radius in metres (0 = auto)");
  simulate->add_option("--window-factor", sim_opt.window_factor,
                       "c in the automatic radius rule");
  simulate->add_option("--beta-db", betas_db, "outage thresholds in dB");
  simulate->add_option("--threads", threads, "worker threads (0 = hardware)");
  simulate->add_option("--out", out, "output path prefix");

  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  SweepSpec spec;
  std::string lo_str, hi_str, from_meta;
  sweep->add_option("config", config_path, "config file");
  sweep->add_option("--param", spec.param,
                    "parameter path, e.g. access_threshold or tier[2].density");
  sweep->add_option("--lo", lo_str, "lower bound (supports dBm/dB/W suffixes)");
  sweep->add_option("--hi", hi_str, "upper bound");
  sweep->add_option("--points", spec.points, "grid points");
  sweep->add_option("--scale", spec.scale, "linear or log");
  sweep->add_option("--metrics", spec.metrics,
                    "metrics: assoc activation outage_exact outage_int bounds "
                    "ant aar energy_eff trans_eff");
  sweep->add_option("--threads", threads, "worker threads");
  sweep->add_option("--out", out, "output path prefix");
  sweep->add_option("--from-meta", from_meta,
                    "re-run a sweep from its .meta sidecar");

  auto* validate_cmd =
      app.add_subcommand("validate", "analyze + simulate + comparison");
  validate_cmd->add_option("config", config_path, "config file")->required();
  validate_cmd->add_option("--trials", sim_opt.trials, "number of trials");
  validate_cmd->add_option("--seed", sim_opt.seed, "campaign seed");
  validate_cmd->add_option("--radius", sim_opt.radius, "window radius (0 = auto)");
  validate_cmd->add_option("--window-factor", sim_opt.window_factor,
                           "c in the radius rule");
  validate_cmd->add_option("--beta-db", betas_db, "outage thresholds in dB");
  validate_cmd->add_option("--threads", threads, "worker threads");
  validate_cmd->add_option("--out", out, "output path prefix");
  validate_cmd->add_option("--opt-grid", opt_grid,
                           "threshold optimizer grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    sim_opt.betas_db = betas_db;
    sim_opt.threads = threads;
    if (analyze->parsed()) return cmd_analyze(config_path, out, opt_grid);
    if (simulate->parsed())
      return cmd_simulate(config_path, out, sim_opt, false);
    if (sweep->parsed()) {
      if (!from_meta.empty()) {
        auto [cfg, meta_spec] = parse_sweep_meta(from_meta);
        if (out.empty()) out = strip_extension(from_meta);
        return cmd_sweep(cfg, meta_spec, out, threads);
      }
      if (config_path.empty())
        throw ConfigError("sweep: config file or --from-meta required");
      if (spec.param.empty()) throw ConfigError("sweep: --param required");
      if (spec.metrics.empty()) throw ConfigError("sweep: --metrics required");
      const NetworkConfig cfg = load_config(config_path);
      spec.lo = parse_quantity(lo_str, "--lo");
      spec.hi = parse_quantity(hi_str, "--hi");
      if (out.empty()) out = strip_extension(config_path);
      return cmd_sweep(cfg, spec, out, threads);
    }
    if (validate_cmd->parsed()) {
      const int a = cmd_analyze(config_path, out, opt_grid);
      if (a != 0) return a;
      return cmd_simulate(config_path, out, sim_opt, true);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const NumericsError& e) {
    std::cerr << "numerics failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

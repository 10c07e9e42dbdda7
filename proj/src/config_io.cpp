#include "hcn/config_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hcn {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_number(const std::string& text, const std::string& context) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw ConfigError(context + ": cannot parse number from '" + text + "'");
  }
  if (trim(text.substr(pos)).empty()) return v;
  throw ConfigError(context + ": trailing characters in '" + text + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double parse_quantity(const std::string& text, const std::string& context) {
  const std::string t = trim(text);
  auto ends_with = [&t](const char* suffix) {
    const std::size_t n = std::string(suffix).size();
    if (t.size() < n) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::tolower(static_cast<unsigned char>(t[t.size() - n + i])) !=
          std::tolower(static_cast<unsigned char>(suffix[i])))
        return false;
    }
    return true;
  };
  if (ends_with("dbm")) {
    return dbm_to_watts(parse_number(t.substr(0, t.size() - 3), context));
  }
  if (ends_with("db")) {
    return db_to_linear(parse_number(t.substr(0, t.size() - 2), context));
  }
  if (ends_with("w")) {
    return parse_number(t.substr(0, t.size() - 1), context);
  }
  return parse_number(t, context);
}

NetworkConfig parse_config(std::istream& in) {
  NetworkConfig cfg;
  cfg.user_density = 0.0;
  cfg.amp_efficiency = 1.0;
  TierParams* tier = nullptr;
  std::string line;
  int lineno = 0;

  auto err = [&lineno](const std::string& msg) {
    std::ostringstream os;
    os << "config line " << lineno << ": " << msg;
    throw ConfigError(os.str());
  };

  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t != "[tier]") err("unknown section '" + t + "'");
      cfg.tiers.emplace_back();
      tier = &cfg.tiers.back();
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) err("expected 'key = value' in '" + t + "'");
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (val.empty()) err("missing value for key '" + key + "'");

    if (tier) {
      if (key == "power") tier->power_watts = parse_quantity(val, key);
      else if (key == "antennas") tier->antennas = static_cast<int>(parse_number(val, key));
      else if (key == "bias") tier->bias = parse_number(val, key);
      else if (key == "density") tier->density = parse_number(val, key);
      else if (key == "pathloss_exp") tier->pathloss_exp = parse_number(val, key);
      else if (key == "sinr_threshold_db") tier->sinr_threshold = db_to_linear(parse_number(val, key));
      else if (key == "sinr_threshold") tier->sinr_threshold = parse_number(val, key);
      else err("unknown tier key '" + key + "'");
      continue;
    }
    if (key == "user_density") cfg.user_density = parse_number(val, key);
    else if (key == "access_threshold_dbm") cfg.access_threshold = dbm_to_watts(parse_number(val, key));
    else if (key == "access_threshold_w") cfg.access_threshold = parse_number(val, key);
    else if (key == "noise_dbm") cfg.noise_watts = dbm_to_watts(parse_number(val, key));
    else if (key == "noise_w") cfg.noise_watts = parse_number(val, key);
    else if (key == "amp_efficiency") cfg.amp_efficiency = parse_number(val, key);
    else if (key == "circuit_power_w") cfg.circuit_power_watts = parse_number(val, key);
    else if (key == "static_power_w") cfg.static_power_watts = parse_number(val, key);
    else err("unknown key '" + key + "' (top-level keys must precede [tier] sections)");
  }
  return validate(cfg), cfg;
}

NetworkConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

NetworkConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string write_config(const NetworkConfig& cfg) {
  std::ostringstream os;
  os << "user_density = " << fmt(cfg.user_density) << "\n";
  os << "access_threshold_w = " << fmt(cfg.access_threshold) << "\n";
  os << "noise_w = " << fmt(cfg.noise_watts) << "\n";
  os << "amp_efficiency = " << fmt(cfg.amp_efficiency) << "\n";
  os << "circuit_power_w = " << fmt(cfg.circuit_power_watts) << "\n";
  os << "static_power_w = " << fmt(cfg.static_power_watts) << "\n";
  for (const TierParams& t : cfg.tiers) {
    os << "\n[tier]\n";
    os << "power = " << fmt(t.power_watts) << " W\n";
    os << "antennas = " << t.antennas << "\n";
    os << "bias = " << fmt(t.bias) << "\n";
    os << "density = " << fmt(t.density) << "\n";
    os << "pathloss_exp = " << fmt(t.pathloss_exp) << "\n";
    os << "sinr_threshold = " << fmt(t.sinr_threshold) << "\n";
  }
  return os.str();
}

}  // namespace hcn

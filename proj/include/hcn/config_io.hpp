#pragma once

#include <iosfwd>
#include <string>

#include "hcn/model.hpp"

namespace hcn {

/// Parses the key = value configuration format:
///
///   user_density          = 2.5464790894703254e-05
///   access_threshold_dbm  = -90        # or access_threshold_w
///   noise_dbm             = -90        # or noise_w; omitted means 0
///   amp_efficiency        = 0.4
///   circuit_power_w       = 3
///   static_power_w        = 4
///
///   [tier]
///   power             = 30 dBm        # or "1 W"; bare numbers are watts
///   antennas          = 4
///   bias              = 1
///   density           = 1.2732395447351628e-06
///   pathloss_exp      = 4
///   sinr_threshold_db = 5             # or sinr_threshold (linear)
///
/// '#' starts a comment; one [tier] section per tier, in tier order.
/// Unknown or malformed keys raise ConfigError naming the key and line.
NetworkConfig parse_config(std::istream& in);
NetworkConfig parse_config_string(const std::string& text);
NetworkConfig load_config(const std::string& path);

/// Canonical serialization (linear units, full precision). Parsing the
/// output reproduces the config bit for bit.
std::string write_config(const NetworkConfig& cfg);

/// A value with an optional unit suffix: "-90 dBm", "5dB", "0.3 W" or a bare
/// number (returned unchanged). dBm converts to watts, dB to a linear ratio.
double parse_quantity(const std::string& text, const std::string& context);

}  // namespace hcn

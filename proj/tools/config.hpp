#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circq/kernels.hpp"

namespace circq::app {

// invalid flags, config values or I/O targets; maps to exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double alpha = 1.0;
  double tau = 0.5;
  KernelFamily family = KernelFamily::Heat;
  int trunc = 64;
  int maxdeg = 40;
  std::optional<double> extent;  // unset means 6/sqrt(alpha)
  int grid_n = 257;
  std::vector<double> thetas;
  std::vector<double> times;
  std::string out = ".";
  std::uint64_t seed = 20240611;

  double grid_extent() const;
  void validate() const;
  // one line, key=value pairs, used as the header of every output file
  std::string describe() const;
};

// Keys accepted in config files and as CIRCQ_* environment variables.
const std::vector<std::string>& config_keys();
std::string env_name(const std::string& key);

// "key = value" lines, '#' comments; unknown keys are an error
std::map<std::string, std::string> read_config_file(const std::string& path);

// Applies one raw string value to the named field.
void apply_value(RunConfig& c, const std::string& key, const std::string& value);

using EnvLookup = std::function<const char*(const char*)>;

// defaults < config file < CIRCQ_* environment < flags. `flags` maps key to the raw string
// given on the command line; the config path comes from --config or CIRCQ_CONFIG.
RunConfig resolve_config(const std::map<std::string, std::string>& flags, const std::string& config_path,
                         const EnvLookup& env);

double parse_angle(const std::string& s);
double parse_number(const std::string& s);

}  // namespace circq::app

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace circq::app {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& s) {
  double v = parse_number(s);
  if (v != std::floor(v) || std::abs(v) > 2e9) throw UsageError("expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double parse_number(const std::string& s) {
  std::string t = trim(s);
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw UsageError("expected a number, got '" + s + "'");
  }
  if (used != t.size() || !std::isfinite(v)) throw UsageError("expected a number, got '" + s + "'");
  return v;
}

// plain numbers or multiples of pi: "pi", "-pi/2", "3pi/4", "0.5pi"
double parse_angle(const std::string& s) {
  std::string t = trim(s);
  auto p = t.find("pi");
  if (p == std::string::npos) return parse_number(t);
  std::string pre = t.substr(0, p), post = t.substr(p + 2);
  double k = 1.0;
  if (pre == "-") k = -1.0;
  else if (!pre.empty() && pre != "+") k = parse_number(pre.back() == '*' ? pre.substr(0, pre.size() - 1) : pre);
  double d = 1.0;
  if (!post.empty()) {
    if (post[0] != '/') throw UsageError("malformed angle '" + s + "'");
    d = parse_number(post.substr(1));
    if (d == 0.0) throw UsageError("malformed angle '" + s + "'");
  }
  return k * kPi / d;
}

double RunConfig::grid_extent() const { return extent ? *extent : 6.0 / std::sqrt(alpha); }

void RunConfig::validate() const {
  if (!(alpha > 0.0)) throw UsageError("alpha must be positive (the Hermite basis and X/P need alpha > 0)");
  if (!(tau > 0.0)) throw UsageError("tau must be positive");
  if (trunc < 0) throw UsageError("trunc must be nonnegative");
  if (maxdeg < 0) throw UsageError("maxdeg must be nonnegative");
  if (!(grid_extent() > 0.0)) throw UsageError("extent must be positive");
  if (grid_n < 3) throw UsageError("grid-n must be at least 3");
  if (out.empty()) throw UsageError("output directory is empty");
}

std::string RunConfig::describe() const {
  std::string s = "alpha=" + num(alpha) + " tau=" + num(tau) + " family=" + family_name(family) +
                  " trunc=" + std::to_string(trunc) + " maxdeg=" + std::to_string(maxdeg) +
                  " extent=" + num(grid_extent()) + " grid-n=" + std::to_string(grid_n) + " seed=" + std::to_string(seed);
  if (!thetas.empty()) {
    s += " theta=";
    for (std::size_t i = 0; i < thetas.size(); ++i) s += (i ? "," : "") + num(thetas[i]);
  }
  if (!times.empty()) {
    s += " time=";
    for (std::size_t i = 0; i < times.size(); ++i) s += (i ? "," : "") + num(times[i]);
  }
  return s;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"alpha", "tau",   "family", "trunc", "maxdeg", "extent",
                                                "grid-n", "theta", "time",   "out",   "seed"};
  return keys;
}

std::string env_name(const std::string& key) {
  std::string e = "CIRCQ_";
  for (char ch : key) e += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return e;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (std::find(config_keys().begin(), config_keys().end(), key) == config_keys().end())
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_value(RunConfig& c, const std::string& key, const std::string& value) {
  try {
    if (key == "alpha") c.alpha = parse_number(value);
    else if (key == "tau") c.tau = parse_number(value);
    else if (key == "family") c.family = parse_family(trim(value));
    else if (key == "trunc") c.trunc = parse_int(value);
    else if (key == "maxdeg") c.maxdeg = parse_int(value);
    else if (key == "extent") c.extent = parse_number(value);
    else if (key == "grid-n") c.grid_n = parse_int(value);
    else if (key == "out") c.out = trim(value);
    else if (key == "seed") {
      std::string t = trim(value);
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw UsageError("seed must be a nonnegative integer");
      try {
        c.seed = std::stoull(t);
      } catch (const std::out_of_range&) {
        throw UsageError("seed out of range");
      }
    } else if (key == "theta") {
      c.thetas.clear();
      for (auto& s : split_list(value)) c.thetas.push_back(parse_angle(s));
    } else if (key == "time") {
      c.times.clear();
      for (auto& s : split_list(value)) c.times.push_back(parse_number(s));
    } else {
      throw UsageError("unknown key '" + key + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(key + ": " + e.what());
  }
}

RunConfig resolve_config(const std::map<std::string, std::string>& flags, const std::string& config_path,
                         const EnvLookup& env) {
  RunConfig c;
  std::string path = config_path;
  if (path.empty())
    if (const char* v = env("CIRCQ_CONFIG")) path = v;
  if (!path.empty())
    for (const auto& [k, v] : read_config_file(path)) apply_value(c, k, v);
  for (const auto& k : config_keys())
    if (const char* v = env(env_name(k).c_str())) apply_value(c, k, v);
  for (const auto& [k, v] : flags) apply_value(c, k, v);
  c.validate();
  return c;
}

}  // namespace circq::app

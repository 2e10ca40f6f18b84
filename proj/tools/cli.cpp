#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "commands.hpp"
#include "config.hpp"

namespace circq::app {

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"circle rotation: Koopman, RKHS and Minkowski-oscillator correspondence"};
  app.require_subcommand(1);

  // every config key is a plain string flag; values are resolved after the env and the config file
  std::map<std::string, std::string> raw;
  std::map<std::string, std::vector<std::string>> lists;
  std::string config_path;
  auto add_key = [&](const std::string& key, const std::string& help) {
    if (key == "theta" || key == "time") {
      app.add_option("--" + key, lists[key], help + " (repeatable or comma separated)");
    } else {
      app.add_option("--" + key, raw[key], help);
    }
  };
  add_key("alpha", "rotation frequency");
  add_key("tau", "diffusion time");
  add_key("family", "kernel family: heat or fractional");
  add_key("trunc", "Fourier truncation J");
  add_key("maxdeg", "highest Hermite degree");
  add_key("extent", "grid half-width (default 6/sqrt(alpha))");
  add_key("grid-n", "grid points per axis");
  add_key("theta", "angles; accepts multiples of pi such as 3pi/4");
  add_key("time", "evolution times");
  add_key("out", "output directory");
  add_key("seed", "seed for randomized suites");
  app.add_option("--config", config_path, "key = value config file");

  auto* verify = app.add_subcommand("verify", "run every invariant suite and write verify.csv");
  std::vector<std::string> corrupt;
  verify->add_option("--test-corrupt-threshold", corrupt, "force the named check (or all) to fail");
  auto* figure = app.add_subcommand("figure", "wavefunction grids and rasters over a theta sweep");
  std::string which = "psi";
  figure->add_option("--which", which, "psi (heat) or psi-frac (fractional)");
  auto* kernel = app.add_subcommand("kernel", "kernel values on a theta grid");
  auto* expect = app.add_subcommand("expect", "f along the flow against quantum expectations");
  auto* evolve = app.add_subcommand("evolve", "Koopman evolution and its Minkowski counterpart");
  std::vector<std::string> coefs;
  for (auto* sc : {expect, evolve})
    sc->add_option("--coef", coefs, "Fourier coefficient j:re[:im], j >= 0 (default cos theta)");
  for (auto* sc : {verify, figure, kernel, expect, evolve}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::map<std::string, std::string> flags;
    for (auto& [k, v] : raw)
      if (app.count("--" + k)) flags[k] = v;
    for (auto& [k, v] : lists)
      if (app.count("--" + k)) {
        std::string joined;
        for (auto& s : v) joined += (joined.empty() ? "" : ",") + s;
        flags[k] = joined;
      }
    RunConfig cfg = resolve_config(flags, config_path, [](const char* n) { return std::getenv(n); });

    if (*verify) return cmd_verify(cfg, {corrupt.begin(), corrupt.end()});
    if (*figure) return cmd_figure(cfg, which);
    if (*kernel) return cmd_kernel(cfg);
    if (*expect) return cmd_expect(cfg, coefs);
    if (*evolve) return cmd_evolve(cfg, coefs);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failed: %s\n", e.what());
    return 1;
  }
  return 2;
}

}  // namespace circq::app

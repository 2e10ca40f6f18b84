#pragma once

#include <set>
#include <string>
#include <vector>

#include "circq/minkowski.hpp"
#include "config.hpp"

namespace circq::app {

// Each returns the process exit code (0 ok, 1 failed check) and throws UsageError on bad input.
int cmd_verify(const RunConfig& cfg, const std::set<std::string>& corrupt);
int cmd_figure(const RunConfig& cfg, const std::string& which);
int cmd_kernel(const RunConfig& cfg);
int cmd_expect(const RunConfig& cfg, const std::vector<std::string>& coefs);
int cmd_evolve(const RunConfig& cfg, const std::vector<std::string>& coefs);

// "j:re[:im]" with j >= 0; c_{-j} is set to the conjugate so the function is real
FourierSeries parse_coefficients(const std::vector<std::string>& specs, int J);

// sum (x0^2 + x1^2)|psi|^2 / sum |psi|^2
double second_moment(const Grid2D& g);
// mean radial spatial frequency (cycles per unit length) weighted by the 2-D power spectrum
double spectral_centroid(const Grid2D& g);

std::string figure_stem(const std::string& which, double tau, double theta);

}  // namespace circq::app

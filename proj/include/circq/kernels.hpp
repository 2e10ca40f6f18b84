#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circq/spectral.hpp"

namespace circq {

enum class KernelFamily { Heat, Fractional };

struct KernelParams {
  KernelFamily family;
  double tau;
  KernelParams(KernelFamily fam, double t);
  // w_j: j^2 for Heat, |j| for Fractional
  double weight(int j) const;
};

const char* family_name(KernelFamily f);
KernelFamily parse_family(const std::string& s);

enum class KernelMethod { Auto, FourierSum, CosineSum, PoissonImages, ClosedForm };

double kernel_value(const KernelParams& p, double theta, double theta_prime,
                    KernelMethod method = KernelMethod::Auto);

FourierSeries feature_map(const KernelParams& p, double theta, int J);

struct RkhsInner {
  cplx value;
  bool ill_conditioned;
};
RkhsInner rkhs_inner(const KernelParams& p, const FourierSeries& f, const FourierSeries& g);
double rkhs_norm(const KernelParams& p, const FourierSeries& f);

enum class PolarDirection { Forward, Inverse };
FourierSeries polar_isometry(const KernelParams& p, const FourierSeries& f, PolarDirection dir);

FourierSeries rkha_product(const FourierSeries& f, const FourierSeries& g);

struct AtomicMeasure {
  std::vector<std::pair<double, double>> atoms;  // (angle, weight)
  explicit AtomicMeasure(std::vector<std::pair<double, double>> a);
  static AtomicMeasure dirac(double theta);
  static AtomicMeasure uniform(int n);
};

FourierSeries embed_measure(const KernelParams& p, const AtomicMeasure& m, int J);

double kernel_matrix_mineig(const KernelParams& p, const std::vector<double>& thetas);

}  // namespace circq

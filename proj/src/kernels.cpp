#include "circq/kernels.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace circq {

namespace {

constexpr double kStopRatio = 1e-16;
constexpr int kMaxTerms = 100000;

// Neumaier compensated sum; the long fractional series lose a few digits otherwise
struct CompSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

double wrap_pi(double d) { return std::remainder(d, 2.0 * kPi); }

double heat_cosine(double tau, double d) {
  CompSum s;
  s.add(1.0);
  double env = 1.0;
  for (int j = 1; j <= kMaxTerms; ++j) {
    double e = std::exp(-double(j) * j * tau);
    if (e < kStopRatio * env) break;
    env += 2.0 * e;
    s.add(2.0 * e * std::cos(j * d));
  }
  return s.value();
}

double fourier_sum(const KernelParams& p, double d) {
  // complex exponentials summed over +-j separately
  CompSum re;
  re.add(1.0);
  double env = 1.0;
  for (int j = 1; j <= kMaxTerms; ++j) {
    double e = std::exp(-p.weight(j) * p.tau);
    if (e < kStopRatio * env) break;
    env += 2.0 * e;
    cplx a = e * std::polar(1.0, j * d), b = e * std::polar(1.0, -j * d);
    re.add(a.real());
    re.add(b.real());
  }
  return re.value();
}

double heat_poisson(double tau, double d) {
  // sum_j e^{-j^2 tau} e^{ij d} = sqrt(pi/tau) sum_n e^{-(d - 2 pi n)^2 / (4 tau)}
  d = wrap_pi(d);
  CompSum s;
  double g0 = std::exp(-d * d / (4.0 * tau));
  s.add(g0);
  double env = g0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    double a = d - 2.0 * kPi * n, b = d + 2.0 * kPi * n;
    double ga = std::exp(-a * a / (4.0 * tau)), gb = std::exp(-b * b / (4.0 * tau));
    s.add(ga);
    s.add(gb);
    env += ga + gb;
    if (std::max(ga, gb) < kStopRatio * env) break;
  }
  return std::sqrt(kPi / tau) * s.value();
}

double fractional_closed(double tau, double d) {
  // cosh t - cos d written without cancellation near (t, d) = (0, 0)
  double sh = std::sinh(tau / 2.0), sn = std::sin(d / 2.0);
  return std::sinh(tau) / (2.0 * sh * sh + 2.0 * sn * sn);
}

// log|c| with -inf for zero, used to keep e^{w tau} factors from overflowing
double log_abs(cplx c) { return c == 0.0 ? -INFINITY : std::log(std::abs(c)); }

}  // namespace

KernelParams::KernelParams(KernelFamily fam, double t) : family(fam), tau(t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("tau must be positive");
}

double KernelParams::weight(int j) const {
  double a = std::abs(static_cast<double>(j));
  return family == KernelFamily::Heat ? a * a : a;
}

const char* family_name(KernelFamily f) { return f == KernelFamily::Heat ? "heat" : "fractional"; }

KernelFamily parse_family(const std::string& s) {
  if (s == "heat" || s == "Heat") return KernelFamily::Heat;
  if (s == "fractional" || s == "Fractional" || s == "frac") return KernelFamily::Fractional;
  throw std::invalid_argument("unknown kernel family: " + s);
}

double kernel_value(const KernelParams& p, double theta, double theta_prime, KernelMethod method) {
  const double d = theta - theta_prime;
  if (p.family == KernelFamily::Heat) {
    switch (method) {
      case KernelMethod::Auto:
        return p.tau < 0.05 ? heat_poisson(p.tau, d) : fourier_sum(p, wrap_pi(d));
      case KernelMethod::FourierSum: return fourier_sum(p, wrap_pi(d));
      case KernelMethod::CosineSum: return heat_cosine(p.tau, wrap_pi(d));
      case KernelMethod::PoissonImages: return heat_poisson(p.tau, d);
      case KernelMethod::ClosedForm: break;
    }
    throw std::invalid_argument("heat kernel has no closed form");
  }
  switch (method) {
    case KernelMethod::Auto:
    case KernelMethod::ClosedForm: return fractional_closed(p.tau, d);
    case KernelMethod::FourierSum: return fourier_sum(p, wrap_pi(d));
    default: break;
  }
  throw std::invalid_argument("method not available for the fractional kernel");
}

FourierSeries feature_map(const KernelParams& p, double theta, int J) {
  FourierSeries f(J);
  for (int j = -J; j <= J; ++j) f[j] = std::exp(-p.weight(j) * p.tau) * std::polar(1.0, -j * theta);
  return f;
}

RkhsInner rkhs_inner(const KernelParams& p, const FourierSeries& f, const FourierSeries& g) {
  if (f.J() != g.J()) throw std::invalid_argument("truncation mismatch");
  const int J = f.J();
  cplx sum = 0.0;
  double partial = 0.0, top = 0.0;
  for (int j = -J; j <= J; ++j) {
    double lg = p.weight(j) * p.tau + log_abs(f[j]) + log_abs(g[j]);
    if (lg == -INFINITY) continue;
    double mag = std::exp(lg);
    sum += mag * std::polar(1.0, std::arg(g[j]) - std::arg(f[j]));
    if (std::abs(j) == J) top += mag;
    else partial += mag;
  }
  return {sum, top > 1e8 * partial};
}

double rkhs_norm(const KernelParams& p, const FourierSeries& f) {
  return std::sqrt(std::max(rkhs_inner(p, f, f).value.real(), 0.0));
}

FourierSeries polar_isometry(const KernelParams& p, const FourierSeries& f, PolarDirection dir) {
  const double sgn = dir == PolarDirection::Forward ? 0.5 : -0.5;
  const double limit = std::log(DBL_MAX) - 8.0;
  FourierSeries g(f.J());
  for (int j = -f.J(); j <= f.J(); ++j) {
    if (f[j] == 0.0) continue;
    double lg = sgn * p.weight(j) * p.tau + log_abs(f[j]);
    if (lg > limit) throw std::overflow_error("polar isometry: weighted coefficient out of range at j=" + std::to_string(j));
    g[j] = std::exp(lg) * std::polar(1.0, std::arg(f[j]));
  }
  return g;
}

FourierSeries rkha_product(const FourierSeries& f, const FourierSeries& g) { return multiply(f, g); }

AtomicMeasure::AtomicMeasure(std::vector<std::pair<double, double>> a) : atoms(std::move(a)) {
  if (atoms.empty()) throw std::invalid_argument("measure needs at least one atom");
  double total = 0.0;
  for (const auto& [th, w] : atoms) {
    if (w < 0.0) throw std::invalid_argument("negative atom weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("atom weights must sum to 1");
}

AtomicMeasure AtomicMeasure::dirac(double theta) { return AtomicMeasure({{theta, 1.0}}); }

AtomicMeasure AtomicMeasure::uniform(int n) {
  std::vector<std::pair<double, double>> a;
  for (int k = 0; k < n; ++k) a.emplace_back(2.0 * kPi * k / n, 1.0 / n);
  return AtomicMeasure(std::move(a));
}

FourierSeries embed_measure(const KernelParams& p, const AtomicMeasure& m, int J) {
  FourierSeries f(J);
  for (const auto& [th, w] : m.atoms) f += cplx(w) * feature_map(p, th, J);
  return f;
}

double kernel_matrix_mineig(const KernelParams& p, const std::vector<double>& thetas) {
  const auto n = static_cast<Eigen::Index>(thetas.size());
  if (n == 0) throw std::invalid_argument("need at least one angle");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < i; ++k)
      if (std::abs(wrap_pi(thetas[i] - thetas[k])) < 1e-14) throw std::invalid_argument("duplicate angles in Gram matrix");
  Eigen::MatrixXd G(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k <= i; ++k) G(i, k) = G(k, i) = kernel_value(p, thetas[i], thetas[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace circq

#include "circq/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace circq {

namespace {
// Cramér: |chi_j(z)| <= K (alpha/pi)^{1/4} for all j, z
constexpr double kCramer = 1.0865;
constexpr double kBoundaryMass = 1e-8;
}  // namespace

HermiteBasis::HermiteBasis(double alpha, int maxdeg) : alpha_(alpha), maxdeg_(maxdeg) {
  if (!(alpha > 0.0)) throw std::invalid_argument("Hermite basis needs alpha > 0");
  if (maxdeg < 0) throw std::invalid_argument("maxdeg must be nonnegative");
  up_.resize(static_cast<std::size_t>(maxdeg) + 1);
  down_.resize(static_cast<std::size_t>(maxdeg) + 1);
  for (int j = 0; j <= maxdeg; ++j) {
    up_[j] = std::sqrt(2.0 / (j + 1.0));
    down_[j] = std::sqrt(j / (j + 1.0));
  }
}

void HermiteBasis::eval_all(double z, double* out) const {
  const double s = std::sqrt(alpha_) * z;
  out[0] = std::pow(alpha_ / kPi, 0.25) * std::exp(-0.5 * s * s);
  if (maxdeg_ == 0) return;
  out[1] = up_[0] * s * out[0];
  for (int j = 1; j < maxdeg_; ++j) out[j + 1] = up_[j] * s * out[j] - down_[j] * out[j - 1];
}

double HermiteBasis::eval(int j, double z) const {
  if (j < 0 || j > maxdeg_) throw std::out_of_range("Hermite index " + std::to_string(j) + " outside basis");
  std::vector<double> v(static_cast<std::size_t>(maxdeg_) + 1);
  eval_all(z, v.data());
  return v[j];
}

double hermite_eval(const HermiteBasis& b, int j, double z) { return b.eval(j, z); }

double MinkowskiState::norm2() const {
  double s = std::norm(c00);
  for (auto v : a) s += std::norm(v);
  for (auto v : b) s += std::norm(v);
  return s;
}

MinkowskiState embed(const FourierSeries& f, int maxdeg) {
  if (f.J() > maxdeg) throw std::invalid_argument("truncation order exceeds maxdeg");
  MinkowskiState s(maxdeg);
  s.c00 = f[0];
  for (int j = 1; j <= f.J(); ++j) {
    s.a[j - 1] = f[-j];
    s.b[j - 1] = f[j];
  }
  return s;
}

FourierSeries embed_adjoint(const MinkowskiState& s, int J) {
  FourierSeries f(J);
  f[0] = s.c00;
  for (int j = 1; j <= std::min(J, s.maxdeg()); ++j) {
    f[-j] = s.a[j - 1];
    f[j] = s.b[j - 1];
  }
  return f;
}

double energy(int j, int k, double alpha) { return (k - j) * alpha; }

MinkowskiState evolve(const MinkowskiState& s, double t, double alpha) {
  MinkowskiState out = s;
  for (int j = 1; j <= s.maxdeg(); ++j) {
    out.a[j - 1] = std::polar(1.0, energy(j, 0, alpha) * t) * s.a[j - 1];
    out.b[j - 1] = std::polar(1.0, energy(0, j, alpha) * t) * s.b[j - 1];
  }
  return out;
}

double energy_expectation(const MinkowskiState& s, double alpha) {
  double e = 0.0;
  for (int j = 1; j <= s.maxdeg(); ++j)
    e += energy(j, 0, alpha) * std::norm(s.a[j - 1]) + energy(0, j, alpha) * std::norm(s.b[j - 1]);
  return e;
}

Grid2D::Grid2D(double ext, int npts) : extent(ext), n(npts) {
  if (!(ext > 0.0) || npts < 3) throw std::invalid_argument("grid needs extent > 0 and at least 3 points");
  values.assign(static_cast<std::size_t>(npts) * npts, cplx(0.0));
}

double reduce_angle(double theta) {
  double r = std::fmod(theta, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  return r;
}

double wavefunction_exponent_scale(KernelFamily fam) { return fam == KernelFamily::Heat ? 1.0 : 0.5; }

double coefficient_tail(const KernelParams& p, int maxdeg) {
  const double s = wavefunction_exponent_scale(p.family) * p.tau;
  if (p.family == KernelFamily::Fractional) {
    // geometric series
    double q = std::exp(-s);
    return std::exp(-s * (maxdeg + 1)) / (1.0 - q);
  }
  double tail = 0.0;
  for (int j = maxdeg + 1;; ++j) {
    double e = std::exp(-double(j) * j * s);
    tail += e;
    if (e < 1e-18 * tail || e == 0.0) break;
  }
  return tail;
}

int required_maxdeg(const KernelParams& p, double tol) {
  int lo = 0, hi = 1;
  while (coefficient_tail(p, hi) >= tol) {
    lo = hi;
    hi *= 2;
    if (hi > (1 << 26)) throw std::runtime_error("required Hermite degree is unreasonably large");
  }
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (coefficient_tail(p, mid) < tol) hi = mid;
    else lo = mid + 1;
  }
  return hi;
}

double pointwise_tail_bound(const KernelParams& p, int maxdeg, double alpha) {
  return 2.0 * kCramer * std::sqrt(alpha / kPi) * coefficient_tail(p, maxdeg);
}

Grid2D synth_wavefunction(const KernelParams& p, double theta, const HermiteBasis& basis, double extent, int n) {
  const int m = basis.maxdeg();
  const double tail = coefficient_tail(p, m);
  if (!(tail < 1e-10))
    throw std::domain_error("maxdeg " + std::to_string(m) + " leaves coefficient tail " + std::to_string(tail) +
                            "; need at least " + std::to_string(required_maxdeg(p)));
  const double th = reduce_angle(theta);
  const double s = wavefunction_exponent_scale(p.family) * p.tau;

  std::vector<cplx> coef(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) coef[j] = std::exp(-p.weight(j) * s) * std::polar(1.0, j * th);

  Grid2D g(extent, n);
  // g1(x) = sum_j coef_j chi_j(x); the x1 factor carries the conjugate phases
  std::vector<cplx> g1(n);
  std::vector<double> chi0(n), buf(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i < n; ++i) {
    basis.eval_all(g.coord(i), buf.data());
    chi0[i] = buf[0];
    cplx acc = 0.0;
    for (int j = 0; j <= m; ++j) acc += coef[j] * buf[j];
    g1[i] = acc;
  }
  const cplx c0 = coef[0];
  for (int i0 = 0; i0 < n; ++i0)
    for (int i1 = 0; i1 < n; ++i1)
      g.at(i0, i1) = g1[i0] * chi0[i1] + chi0[i0] * std::conj(g1[i1]) - c0 * chi0[i0] * chi0[i1];
  return g;
}

double boundary_mass_fraction(const Grid2D& f) {
  double total = 0.0, ring = 0.0;
  for (int i0 = 0; i0 < f.n; ++i0)
    for (int i1 = 0; i1 < f.n; ++i1) {
      double m = std::norm(f.at(i0, i1));
      total += m;
      if (i0 == 0 || i1 == 0 || i0 == f.n - 1 || i1 == f.n - 1) ring += m;
    }
  return total > 0.0 ? ring / total : 0.0;
}

Grid2D fd_hamiltonian(const Grid2D& f, double alpha) {
  const double frac = boundary_mass_fraction(f);
  if (!(frac < kBoundaryMass))
    throw std::domain_error("boundary ring carries mass fraction " + std::to_string(frac) + "; enlarge the grid");
  Grid2D out(f.extent, f.n);
  const double h = f.h(), ih2 = 1.0 / (h * h), a2 = alpha * alpha;
  for (int i0 = 1; i0 < f.n - 1; ++i0) {
    const double x0 = f.coord(i0);
    for (int i1 = 1; i1 < f.n - 1; ++i1) {
      const double x1 = f.coord(i1);
      const cplx u = f.at(i0, i1);
      cplx d00 = (f.at(i0 + 1, i1) - 2.0 * u + f.at(i0 - 1, i1)) * ih2;
      cplx d11 = (f.at(i0, i1 + 1) - 2.0 * u + f.at(i0, i1 - 1)) * ih2;
      out.at(i0, i1) = -0.5 * d11 + 0.5 * d00 + 0.5 * a2 * (x1 * x1 - x0 * x0) * u;
    }
  }
  return out;
}

}  // namespace circq

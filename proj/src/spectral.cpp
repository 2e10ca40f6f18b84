#include "circq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace circq {

RotationSystem::RotationSystem(double a) : alpha(a) {
  if (a == 0.0 || !std::isfinite(a)) throw std::invalid_argument("alpha must be finite and nonzero");
}

FourierSeries::FourierSeries(int J) : J_(J) {
  if (J < 0) throw std::invalid_argument("truncation order must be nonnegative");
  c_.assign(static_cast<std::size_t>(2 * J + 1), cplx(0.0));
}

FourierSeries::FourierSeries(int J, std::vector<cplx> coeffs) : J_(J), c_(std::move(coeffs)) {
  if (J < 0) throw std::invalid_argument("truncation order must be nonnegative");
  if (c_.size() != static_cast<std::size_t>(2 * J + 1))
    throw std::invalid_argument("coefficient array must have length 2J+1");
}

FourierSeries FourierSeries::basis(int J, int j, cplx value) {
  FourierSeries f(J);
  if (j < -J || j > J) throw std::out_of_range("basis index outside the band");
  f[j] = value;
  return f;
}

cplx FourierSeries::at(int j) const {
  if (j < -J_ || j > J_) return 0.0;
  return (*this)[j];
}

double FourierSeries::norm2() const {
  double s = 0.0;
  for (const auto& c : c_) s += std::norm(c);
  return s;
}

double FourierSeries::norm() const { return std::sqrt(norm2()); }

int FourierSeries::degree() const {
  for (int d = J_; d >= 0; --d)
    if ((*this)[d] != 0.0 || (*this)[-d] != 0.0) return d;
  return -1;
}

bool FourierSeries::is_real(double tol) const {
  for (int j = 0; j <= J_; ++j)
    if (std::abs((*this)[-j] - std::conj((*this)[j])) > tol) return false;
  return true;
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& o) {
  if (o.J_ != J_) throw std::invalid_argument("truncation mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FourierSeries& FourierSeries::operator-=(const FourierSeries& o) {
  if (o.J_ != J_) throw std::invalid_argument("truncation mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FourierSeries& FourierSeries::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

FourierSeries operator+(FourierSeries a, const FourierSeries& b) { return a += b; }
FourierSeries operator-(FourierSeries a, const FourierSeries& b) { return a -= b; }
FourierSeries operator*(cplx s, FourierSeries a) { return a *= s; }

double max_abs_diff(const FourierSeries& a, const FourierSeries& b) {
  if (a.J() != b.J()) throw std::invalid_argument("truncation mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  return m;
}

cplx evaluate(const FourierSeries& f, double theta) {
  cplx s = 0.0;
  for (int j = -f.J(); j <= f.J(); ++j) s += f[j] * std::polar(1.0, j * theta);
  return s;
}

FourierSeries koopman(const RotationSystem& sys, const FourierSeries& f, double t) {
  FourierSeries g(f.J());
  for (int j = -f.J(); j <= f.J(); ++j) g[j] = std::polar(1.0, j * sys.alpha * t) * f[j];
  return g;
}

FourierSeries generator(const RotationSystem& sys, const FourierSeries& f) {
  FourierSeries g(f.J());
  for (int j = -f.J(); j <= f.J(); ++j) g[j] = cplx(0.0, sys.alpha * j) * f[j];
  return g;
}

FourierSeries lower(const FourierSeries& f) {
  FourierSeries g(f.J());
  for (int j = -f.J(); j < f.J(); ++j) g[j] = f[j + 1];
  return g;
}

FourierSeries raise(const FourierSeries& f) {
  FourierSeries g(f.J());
  for (int j = -f.J() + 1; j <= f.J(); ++j) g[j] = f[j - 1];
  return g;
}

FourierSeries project(const FourierSeries& f, Sector s) {
  FourierSeries g(f.J());
  for (int j = -f.J(); j <= f.J(); ++j) {
    bool keep = (s == Sector::Neg && j < 0) || (s == Sector::Zero && j == 0) || (s == Sector::Pos && j > 0);
    if (keep) g[j] = f[j];
  }
  return g;
}

cplx frac_multiplier(int j, double r) {
  if (r < 0.0) throw std::invalid_argument("fractional order must be nonnegative");
  if (r == 0.0) return 1.0;
  if (j == 0) return 0.0;
  // arg(ij) is +pi/2 or -pi/2 on the principal branch
  double arg = j > 0 ? kPi / 2 : -kPi / 2;
  return std::polar(std::pow(std::abs(static_cast<double>(j)), r), r * arg);
}

FourierSeries frac_derivative(const FourierSeries& f, double r) {
  FourierSeries g(f.J());
  for (int j = -f.J(); j <= f.J(); ++j) g[j] = frac_multiplier(j, r) * f[j];
  return g;
}

std::size_t gl_default_terms(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("step must be positive");
  // The zero-mode residual is a^{-r} N^{-r} / Gamma(1-r); N ~ 1/a^2 makes it fall like a^{r}.
  constexpr double cap = 8388608.0;
  double n = std::ceil(4.0 / (a * a));
  return static_cast<std::size_t>(std::min(std::max(n, 1.0), cap));
}

std::vector<cplx> gl_multipliers(int J, double r, double a, std::size_t N) {
  if (!(a > 0.0)) throw std::invalid_argument("step must be positive");
  if (N < 1) throw std::invalid_argument("need at least one term");
  if (r < 0.0) throw std::invalid_argument("fractional order must be nonnegative");
  const std::size_t M = static_cast<std::size_t>(2 * J + 1);
  std::vector<cplx> acc(M, cplx(0.0)), z(M), w(M);
  for (std::size_t i = 0; i < M; ++i) {
    int j = static_cast<int>(i) - J;
    z[i] = 1.0;
    w[i] = std::polar(1.0, -j * a);
  }
  // b_n = (-1)^n binom(r, n) by running product
  double b = 1.0;
  constexpr std::size_t reseed = 1024;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) b *= (static_cast<double>(n) - 1.0 - r) / static_cast<double>(n);
    if (n % reseed == 0 && n > 0)
      for (std::size_t i = 0; i < M; ++i) {
        int j = static_cast<int>(i) - J;
        z[i] = std::polar(1.0, -j * a * static_cast<double>(n));
      }
    for (std::size_t i = 0; i < M; ++i) {
      acc[i] += b * z[i];
      z[i] *= w[i];
    }
  }
  double scale = std::pow(a, -r);
  for (auto& v : acc) v *= scale;
  return acc;
}

FourierSeries gl_oracle(const FourierSeries& f, double r, double a, std::size_t N) {
  // only modes carrying data need the (long) sum
  int d = std::max(f.degree(), 0);
  auto m = gl_multipliers(d, r, a, N);
  FourierSeries g(f.J());
  for (int j = -d; j <= d; ++j) g[j] = m[static_cast<std::size_t>(j + d)] * f[j];
  return g;
}

FourierSeries gl_oracle(const FourierSeries& f, double r, double a) {
  return gl_oracle(f, r, a, gl_default_terms(a));
}

FourierSeries multiply(const FourierSeries& f, const FourierSeries& g) {
  if (f.J() != g.J()) throw std::invalid_argument("truncation mismatch");
  const int J = f.J();
  FourierSeries h(J);
  for (int j = -J; j <= J; ++j) {
    if (f[j] == 0.0) continue;
    int lo = std::max(-J, -J - j), hi = std::min(J, J - j);
    for (int k = lo; k <= hi; ++k) h[j + k] += f[j] * g[k];
  }
  return h;
}

FourierSeries ladder(const FourierSeries& f, Ladder which) {
  const cplx sqrt_i = std::polar(1.0, kPi / 4);
  const cplx sqrt_i_inv = std::polar(1.0, -kPi / 4);
  switch (which) {
    case Ladder::AMinus:
      return sqrt_i * raise(frac_derivative(project(f, Sector::Neg), 0.5));
    case Ladder::AMinusPlus:
      return sqrt_i * frac_derivative(project(lower(f), Sector::Neg), 0.5);
    case Ladder::APlus:
      return sqrt_i_inv * lower(frac_derivative(project(f, Sector::Pos), 0.5));
    case Ladder::APlusPlus:
      return sqrt_i_inv * frac_derivative(project(raise(f), Sector::Pos), 0.5);
  }
  throw std::invalid_argument("unknown ladder operator");
}

FourierSeries number_op(const FourierSeries& f, NumberSign s) {
  if (s == NumberSign::Minus) return cplx(0, 1) * frac_derivative(project(f, Sector::Neg), 1.0);
  return cplx(0, -1) * frac_derivative(project(f, Sector::Pos), 1.0);
}

FourierSeries pos_mom(const RotationSystem& sys, const FourierSeries& f, PosMom which) {
  const double a = sys.alpha;
  if (a <= 0.0) throw std::invalid_argument("position/momentum need alpha > 0");
  bool minus = which == PosMom::XMinus || which == PosMom::PMinus;
  FourierSeries lo = ladder(f, minus ? Ladder::AMinus : Ladder::APlus);
  FourierSeries hi = ladder(f, minus ? Ladder::AMinusPlus : Ladder::APlusPlus);
  if (which == PosMom::XMinus || which == PosMom::XPlus) return cplx(1.0 / std::sqrt(2.0 * a)) * (lo + hi);
  return cplx(0.0, -std::sqrt(a / 2.0)) * (lo - hi);
}

}  // namespace circq

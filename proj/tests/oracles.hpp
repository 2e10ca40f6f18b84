// Independent reference computations for the tests. Nothing here calls the
// operator implementations it is meant to check.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "circq/spectral.hpp"

namespace oracle {

using circq::cplx;
using circq::FourierSeries;
using CMatrix = Eigen::MatrixXcd;

inline cplx direct_sum(const FourierSeries& f, double theta) {
  long double re = 0, im = 0;
  for (int j = -f.J(); j <= f.J(); ++j) {
    long double c = std::cos(static_cast<long double>(j) * theta), s = std::sin(static_cast<long double>(j) * theta);
    re += f[j].real() * c - f[j].imag() * s;
    im += f[j].real() * s + f[j].imag() * c;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

inline Eigen::Index idx(int J, int j) { return j + J; }

// elementary matrices on the truncated basis
inline CMatrix shift_down(int J) {  // L
  CMatrix M = CMatrix::Zero(2 * J + 1, 2 * J + 1);
  for (int j = -J + 1; j <= J; ++j) M(idx(J, j - 1), idx(J, j)) = 1.0;
  return M;
}
inline CMatrix shift_up(int J) { return shift_down(J).transpose(); }  // L^*

inline CMatrix proj(int J, int sign) {
  CMatrix M = CMatrix::Zero(2 * J + 1, 2 * J + 1);
  for (int j = -J; j <= J; ++j)
    if ((sign < 0 && j < 0) || (sign > 0 && j > 0) || (sign == 0 && j == 0)) M(idx(J, j), idx(J, j)) = 1.0;
  return M;
}

// diag of (ij)^{1/2}, written out with the explicit sqrt of |j| and the +-pi/4 phase
inline CMatrix half_derivative(int J) {
  CMatrix M = CMatrix::Zero(2 * J + 1, 2 * J + 1);
  const double h = std::sqrt(0.5);
  for (int j = -J; j <= J; ++j) {
    if (j == 0) continue;
    double m = std::sqrt(std::abs(double(j)));
    M(idx(J, j), idx(J, j)) = j > 0 ? cplx(m * h, m * h) : cplx(m * h, -m * h);
  }
  return M;
}

// Ladder operators as matrix products, with i^{+-1/2} = (1 +- i)/sqrt 2
inline CMatrix A_minus(int J) { return cplx(std::sqrt(0.5), std::sqrt(0.5)) * shift_up(J) * half_derivative(J) * proj(J, -1); }
inline CMatrix A_minus_plus(int J) { return cplx(std::sqrt(0.5), std::sqrt(0.5)) * half_derivative(J) * proj(J, -1) * shift_down(J); }
inline CMatrix A_plus(int J) { return cplx(std::sqrt(0.5), -std::sqrt(0.5)) * shift_down(J) * half_derivative(J) * proj(J, 1); }
inline CMatrix A_plus_plus(int J) { return cplx(std::sqrt(0.5), -std::sqrt(0.5)) * half_derivative(J) * proj(J, 1) * shift_up(J); }

inline Eigen::VectorXcd vec(const FourierSeries& f) {
  return Eigen::Map<const Eigen::VectorXcd>(f.coeffs().data(), static_cast<Eigen::Index>(f.size()));
}

// band-limited series, |c_j| <= decay(j)
template <class Rng, class Decay>
FourierSeries random_series(Rng& rng, int J, int deg, Decay decay) {
  std::uniform_real_distribution<double> u(0.0, 1.0), ph(0.0, 2.0 * circq::kPi);
  FourierSeries f(J);
  for (int j = -deg; j <= deg; ++j) f[j] = std::polar(decay(j) * u(rng), ph(rng));
  return f;
}

template <class Rng>
FourierSeries random_series(Rng& rng, int J, int deg) {
  return random_series(rng, J, deg, [](int) { return 1.0; });
}

// real trig polynomial: c_{-j} = conj(c_j)
template <class Rng>
FourierSeries random_real_series(Rng& rng, int J, int deg) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries f(J);
  f[0] = u(rng);
  for (int j = 1; j <= deg; ++j) {
    f[j] = cplx(u(rng), u(rng)) / double(j);
    f[-j] = std::conj(f[j]);
  }
  return f;
}

// physicists' Hermite polynomial by the unnormalized recurrence in long double (small n only)
inline double hermite_function(int n, double alpha, double z) {
  long double x = std::sqrt(static_cast<long double>(alpha)) * z;
  long double h0 = 1, h1 = 2 * x;
  long double hn = n == 0 ? h0 : h1;
  for (int k = 1; k < n; ++k) {
    long double h2 = 2 * x * h1 - 2 * k * h0;
    h0 = h1;
    h1 = h2;
    hn = h2;
  }
  long double fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  long double norm = std::pow(static_cast<long double>(alpha) / circq::kPi, 0.25L) / std::sqrt(std::pow(2.0L, n) * fact);
  return static_cast<double>(norm * hn * std::exp(-x * x / 2));
}

}  // namespace oracle

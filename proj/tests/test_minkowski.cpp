#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "circq/minkowski.hpp"
#include "oracles.hpp"

using namespace circq;
using doctest::Approx;

TEST_CASE("Hermite functions") {
  HermiteBasis b(1.3, 12);
  CHECK_THROWS(b.eval(13, 0.0));
  CHECK_THROWS(HermiteBasis(0.0, 3));
  CHECK(hermite_eval(b, 1, 0.0) == 0.0);
  for (int j = 0; j <= 12; ++j)
    for (double z : {-2.0, 0.0, 0.7, 3.1}) CHECK(b.eval(j, z) == Approx(oracle::hermite_function(j, 1.3, z)).epsilon(1e-11));
  // orthonormality by trapezoid on a wide grid (spectrally accurate for Gaussians)
  const int n = 2001;
  const double L = 10.0, h = 2 * L / (n - 1);
  std::vector<std::vector<double>> v(n, std::vector<double>(13));
  for (int i = 0; i < n; ++i) b.eval_all(-L + i * h, v[i].data());
  for (int j = 0; j <= 12; ++j)
    for (int k = 0; k <= j; ++k) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += v[i][j] * v[i][k] * h;
      CHECK(s == Approx(j == k ? 1.0 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("1-D oscillator eigenvalue by finite differences") {
  const double alpha = 1.0;
  HermiteBasis b(alpha, 3);
  const double z = 0.83;
  double errs[2];
  int idx = 0;
  for (double h : {1e-2, 1e-3}) {
    double fm = b.eval(3, z - h), f0 = b.eval(3, z), fp = b.eval(3, z + h);
    double H = -0.5 * (fp - 2 * f0 + fm) / (h * h) + 0.5 * alpha * alpha * z * z * f0;
    errs[idx++] = std::abs(H - 3.5 * alpha * f0);
  }
  CHECK(errs[0] < 1e-4);
  CHECK(errs[0] / errs[1] == Approx(100.0).epsilon(0.05));
}

TEST_CASE("embedding and dynamics") {
  const int J = 10;
  auto s = embed(FourierSeries::basis(J, -2), 12);
  CHECK(s.a[1] == cplx(1.0));
  CHECK(s.norm2() == 1.0);
  CHECK_THROWS(embed(FourierSeries(13), 12));
  std::mt19937_64 rng(1);
  auto f = oracle::random_series(rng, J, J);
  auto e = embed(f, 12);
  CHECK(e.norm2() == Approx(f.norm2()).epsilon(1e-15));
  CHECK(max_abs_diff(embed_adjoint(e, J), f) == 0.0);
  CHECK(energy(2, 5, 1.7) == Approx(3 * 1.7));
  RotationSystem sys(1.7);
  for (double t : {0.0, 0.4, -3.3}) {
    auto lhs = evolve(e, t, sys.alpha);
    auto rhs = embed(koopman(sys, f, t), 12);
    CHECK(std::abs(lhs.c00 - rhs.c00) == 0.0);
    for (int j = 0; j < 12; ++j) {
      CHECK(std::abs(lhs.a[j] - rhs.a[j]) < 1e-15);
      CHECK(std::abs(lhs.b[j] - rhs.b[j]) < 1e-15);
    }
  }
  CHECK(energy_expectation(embed(FourierSeries::basis(J, -3), 12), 1.0) < 0);
  CHECK(energy_expectation(embed(FourierSeries::basis(J, 3), 12), 1.0) > 0);
  CHECK(energy_expectation(embed(FourierSeries::basis(J, 0), 12), 1.0) == 0.0);
}

TEST_CASE("maxdeg requirement") {
  KernelParams h(KernelFamily::Heat, 0.5), f(KernelFamily::Fractional, 0.5);
  int mh = required_maxdeg(h), mf = required_maxdeg(f);
  CHECK(coefficient_tail(h, mh) < 1e-10);
  CHECK(coefficient_tail(h, mh - 1) >= 1e-10);
  CHECK(coefficient_tail(f, mf) < 1e-10);
  CHECK(coefficient_tail(f, mf - 1) >= 1e-10);
  // e^{-(m+1)/4} / (1 - e^{-1/4}) < 1e-10  <=>  m + 1 > 98.14
  CHECK(mf == 98);
}

TEST_CASE("wavefunction synthesis") {
  KernelParams p(KernelFamily::Heat, 0.5);
  HermiteBasis b(1.0, 40);
  auto g0 = synth_wavefunction(p, 0.0, b, 6.0, 65);
  double im = 0;
  for (auto v : g0.values) im = std::max(im, std::abs(v.imag()));
  CHECK(im == 0.0);
  auto ga = synth_wavefunction(p, 0.9, b, 6.0, 65), gb = synth_wavefunction(p, -0.9, b, 6.0, 65);
  for (std::size_t i = 0; i < ga.values.size(); ++i) CHECK(std::abs(ga.values[i] - std::conj(gb.values[i])) < 1e-13);
  // direct double sum at one grid point
  int i0 = 20, i1 = 41;
  double x0 = ga.coord(i0), x1 = ga.coord(i1);
  cplx want = 0;
  for (int j = 0; j <= 40; ++j) {
    double w = std::exp(-j * j * 0.5);
    cplx e = std::polar(1.0, j * 0.9);
    want += w * (e * oracle::hermite_function(j, 1.0, x0) * oracle::hermite_function(0, 1.0, x1));
    if (j > 0) want += w * std::conj(e) * oracle::hermite_function(0, 1.0, x0) * oracle::hermite_function(j, 1.0, x1);
  }
  CHECK(std::abs(ga.at(i0, i1) - want) < 1e-12);
  // bitwise periodicity for dyadic angles
  for (double th : {0.5, 1.25, 3.0}) {
    auto a = synth_wavefunction(p, th, b, 6.0, 33), c = synth_wavefunction(p, th + 2 * kPi, b, 6.0, 33);
    CHECK(reduce_angle(th) == reduce_angle(th + 2 * kPi));
    CHECK(a.values == c.values);
  }
  // maxdeg vs maxdeg + 8
  HermiteBasis b2(1.0, 48);
  auto gc = synth_wavefunction(p, 0.9, b2, 6.0, 65);
  double dmax = 0;
  for (std::size_t i = 0; i < ga.values.size(); ++i) dmax = std::max(dmax, std::abs(gc.values[i] - ga.values[i]));
  CHECK(dmax <= pointwise_tail_bound(p, 40, 1.0) + 1e-15);
  CHECK_THROWS(synth_wavefunction(KernelParams(KernelFamily::Fractional, 0.5), 0.0, b, 6.0, 33));
}

TEST_CASE("finite-difference Hamiltonian") {
  const double alpha = 1.0, ext = 6.0;
  HermiteBasis b(alpha, 6);
  auto product = [&](int j, int k, int n) {
    Grid2D g(ext, n);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) g.at(a, c) = b.eval(j, g.coord(a)) * b.eval(k, g.coord(c));
    return g;
  };
  auto rayleigh = [&](const Grid2D& u) {
    auto Hu = fd_hamiltonian(u, alpha);
    cplx num = 0;
    double den = 0;
    for (int a = 1; a < u.n - 1; ++a)
      for (int c = 1; c < u.n - 1; ++c) {
        num += std::conj(u.at(a, c)) * Hu.at(a, c);
        den += std::norm(u.at(a, c));
      }
    return num.real() / den;
  };
  CHECK(std::abs(rayleigh(product(0, 0, 129))) < 1e-12);
  double e1 = std::abs(rayleigh(product(1, 4, 129)) - 3 * alpha);
  double e2 = std::abs(rayleigh(product(1, 4, 257)) - 3 * alpha);
  CHECK(e1 < 1e-2);
  CHECK(e1 / e2 == Approx(4.0).epsilon(0.1));
  // pointwise residual on the interior for a single product
  auto u = product(2, 0, 257);
  auto Hu = fd_hamiltonian(u, alpha);
  double r = 0;
  for (int a = 1; a < 256; ++a)
    for (int c = 1; c < 256; ++c) r = std::max(r, std::abs(Hu.at(a, c) - (-2.0 * alpha) * u.at(a, c)));
  CHECK(r < 1e-2);
  // grid too small to hold the function
  Grid2D small(1.0, 33);
  for (auto& v : small.values) v = 1.0;
  CHECK_THROWS_AS(fd_hamiltonian(small, alpha), std::domain_error);
}

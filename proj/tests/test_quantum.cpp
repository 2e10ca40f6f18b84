#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "circq/quantum.hpp"
#include "oracles.hpp"

using namespace circq;
using doctest::Approx;

namespace {
constexpr int J = 24;
const KernelParams heat(KernelFamily::Heat, 0.5);
const KernelParams frac(KernelFamily::Fractional, 0.5);

double max_entry(const CMatrix& M) { return M.cwiseAbs().maxCoeff(); }

ObservableMatrix random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  CMatrix M(2 * n + 1, 2 * n + 1);
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index k = 0; k < M.cols(); ++k) M(i, k) = cplx(g(rng), g(rng));
  return ObservableMatrix(n, 0.5 * (M + M.adjoint()));
}
}  // namespace

TEST_CASE("density operator invariants") {
  CMatrix bad = CMatrix::Zero(3, 3);
  bad(0, 0) = 2.0;
  bad(1, 1) = -1.0;
  CHECK_THROWS(DensityOperator(1, bad));
  bad(0, 0) = 0.5;
  CHECK_THROWS(DensityOperator(1, bad));
  CHECK_THROWS(DensityOperator(2, CMatrix::Identity(3, 3) / 3.0));
  CHECK_NOTHROW(DensityOperator(1, CMatrix::Identity(3, 3) / 3.0));
  CMatrix nh = CMatrix::Identity(3, 3) / 3.0;
  nh(0, 1) = 0.1;
  CHECK_THROWS(DensityOperator(1, nh));
  CHECK_THROWS(ObservableMatrix(1, nh));
}

TEST_CASE("pure states") {
  auto r1 = pure_state(FourierSeries::basis(J, 1));
  CHECK(r1.rho()(J + 1, J + 1) == cplx(1.0));
  CHECK(r1.rho().cwiseAbs().sum() == Approx(1.0));
  std::mt19937_64 rng(1);
  auto f = oracle::random_series(rng, J, 10);
  auto r = pure_state(f);
  CHECK(std::abs(r.rho().trace() - 1.0) < 1e-14);
  CHECK(max_entry(r.rho() * r.rho() - r.rho()) < 1e-14);
  CHECK(max_entry(pure_state(2.0 * f).rho() - r.rho()) < 1e-15);
  CHECK_THROWS(pure_state(FourierSeries(J)));
  // the trusted path satisfies the same checks as the validating constructor
  CHECK_NOTHROW(DensityOperator(J, r.rho()));
}

TEST_CASE("state maps") {
  RotationSystem sys(1.0);
  for (Inner in : {Inner::L2, Inner::Rkhs}) {
    for (auto p : {heat, frac}) {
      auto r = psi_map(p, 0.8, J, in);
      CHECK(max_entry(r.rho() * r.rho() - r.rho()) < 1e-14);
      CHECK(std::abs(r.rho().trace() - 1.0) < 1e-14);
      auto lhs = psi_map(p, 0.8 + sys.alpha * 1.3, J, in);
      auto rhs = conj_evolve(sys, r, 1.3);
      CHECK(max_entry(lhs.rho() - rhs.rho()) < 1e-13);
      CHECK(trace_distance(r, psi_map(p, 0.9, J, in)) > 1e-3);
    }
  }
}

TEST_CASE("multiplication operators") {
  auto I = mult_operator(FourierSeries::basis(J, 0), J);
  CHECK(max_entry(I.A() - CMatrix::Identity(2 * J + 1, 2 * J + 1)) == 0.0);
  FourierSeries c(J);
  c[1] = c[-1] = 0.5;
  auto C = mult_operator(c, J);
  for (int k = -J; k <= J; ++k)
    for (int l = -J; l <= J; ++l) CHECK(C.A()(k + J, l + J) == cplx(std::abs(k - l) == 1 ? 0.5 : 0.0));
  CHECK_THROWS(mult_operator(FourierSeries::basis(J, 1), J));

  std::mt19937_64 rng(2);
  auto f = oracle::random_real_series(rng, J, 6);
  // mean of f by trapezoid quadrature (exact for trig polynomials of degree < n)
  double mean = 0;
  const int n = 64;
  for (int i = 0; i < n; ++i) mean += evaluate(f, 2 * kPi * i / n).real() / n;
  CHECK(expectation(pure_state(FourierSeries::basis(J, 0)), mult_operator(f, J)) == Approx(mean).epsilon(1e-13));
  // T_f g = fg away from the truncation edge
  auto g = oracle::random_series(rng, J, 8);
  Eigen::VectorXcd tg = mult_operator(f, J).A() * oracle::vec(g);
  CHECK((tg - oracle::vec(multiply(f, g))).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("expectations") {
  std::mt19937_64 rng(3);
  auto f = oracle::random_series(rng, J, J);
  auto r = pure_state(f);
  CHECK(expectation(r, ObservableMatrix::identity(J)) == Approx(1.0).epsilon(1e-14));
  for (int rep = 0; rep < 5; ++rep) {
    auto A = random_hermitian(rng, J);
    CHECK(std::abs(expectation(r, A)) <= operator_norm(A) * (1 + 1e-12));
  }
  CHECK_THROWS(expectation(r, ObservableMatrix::identity(J - 1)));
  // RKHS evaluation reproduces f(theta)
  auto g = oracle::random_real_series(rng, 64, 8);
  auto T = mult_operator(g, 64);
  for (double th : {0.0, 1.0, 4.0}) CHECK(std::abs(expectation(psi_map(frac, th, 64, Inner::Rkhs), T) - evaluate(g, th).real()) < 1e-10);
  // a generic Hermitian matrix is not self-adjoint in the RKHS geometry
  auto A = random_hermitian(rng, 64);
  CHECK_THROWS_AS(expectation(psi_map(frac, 0.5, 64, Inner::Rkhs), A), std::domain_error);
}

TEST_CASE("evolution") {
  RotationSystem sys(0.8);
  std::mt19937_64 rng(4);
  auto r = pure_state(oracle::random_series(rng, J, J));
  CHECK(max_entry(conj_evolve(sys, r, 0.0).rho() - r.rho()) == 0.0);
  auto A = random_hermitian(rng, J);
  for (double t : {0.3, -2.0}) {
    CHECK(expectation(conj_evolve(sys, r, t), A) == Approx(expectation(r, heisenberg(sys, A, t))).epsilon(1e-12));
    Eigen::SelfAdjointEigenSolver<CMatrix> e0(r.rho()), e1(conj_evolve(sys, r, t).rho());
    CHECK((e0.eigenvalues() - e1.eigenvalues()).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(conj_evolve(sys, r, t).rho().trace() - 1.0) < 1e-14);
  }
}

TEST_CASE("observable map") {
  RotationSystem sys(1.0);
  std::vector<double> grid;
  for (int i = 0; i < 16; ++i) grid.push_back(2 * kPi * i / 16);
  for (auto p : {heat, frac})
    for (double v : omega_map(p, ObservableMatrix::identity(J), grid)) CHECK(v == Approx(1.0).epsilon(1e-13));
  std::mt19937_64 rng(5);
  auto A = random_hermitian(rng, J);
  const double t = 0.9;
  auto lhs = omega_map(heat, heisenberg(sys, A, t), grid);
  std::vector<double> shifted;
  for (double th : grid) shifted.push_back(th + sys.alpha * t);
  auto rhs = omega_map(heat, A, shifted);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(lhs[i] == Approx(rhs[i]).epsilon(1e-11));

  auto f = oracle::random_real_series(rng, 64, 5);
  auto got = omega_map(frac, mult_operator(f, 64), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(std::abs(got[i] - evaluate(f, grid[i]).real()) < 1e-11);
}

TEST_CASE("variance and uncertainty") {
  RotationSystem sys(1.5);
  const int n = 32;
  auto X = ObservableMatrix::from_operator(n, [&](const FourierSeries& f) { return pos_mom(sys, f, PosMom::XMinus); });
  auto P = ObservableMatrix::from_operator(n, [&](const FourierSeries& f) { return pos_mom(sys, f, PosMom::PMinus); });
  auto X1 = ObservableMatrix::from_operator(n, [&](const FourierSeries& f) { return pos_mom(sys, f, PosMom::XPlus); });
  auto P1 = ObservableMatrix::from_operator(n, [&](const FourierSeries& f) { return pos_mom(sys, f, PosMom::PPlus); });
  auto ground = pure_state(FourierSeries::basis(n, 0));
  CHECK(variance(ground, X) == Approx(1.0 / (2 * sys.alpha)).epsilon(1e-14));
  CHECK(variance(ground, X) * variance(ground, P) == Approx(0.25).epsilon(1e-14));
  CHECK(variance(ground, ObservableMatrix::identity(n)) == Approx(0.0));
  auto r2 = pure_state(FourierSeries::basis(n, -2));
  CHECK(variance(r2, X) * variance(r2, P) == Approx(6.25).epsilon(1e-13));
  for (int j = 1; j <= 10; ++j) {
    auto r = pure_state(FourierSeries::basis(n, j));
    CHECK(variance(r, X1) * variance(r, P1) == Approx((j + 0.5) * (j + 0.5)).epsilon(1e-13));
  }
}

TEST_CASE("tail bound") {
  // J - deg = 56 at tau = 0.5: the two geometric tails are ~ e^{-28.5}
  double eps = left_inverse_tail_bound(1.0, 64, 8, 0.5);
  double z = 1 + 2 * std::exp(-0.5) / (1 - std::exp(-0.5)) * (1 - std::exp(-32.0));
  double tail = 2 * std::exp(-0.5 * 57) * (1 - std::exp(-0.5 * 8)) / (1 - std::exp(-0.5));
  CHECK(eps == Approx(2 * tail / z).epsilon(1e-12));
  CHECK(eps < 1e-6);
}

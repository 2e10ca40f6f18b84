#include "circq/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace circq {

namespace {

constexpr double kHermTol = 1e-12;

Eigen::Index dim(int J) { return 2 * J + 1; }

double hermitian_defect(const CMatrix& M) { return (M - M.adjoint()).cwiseAbs().maxCoeff(); }

void check_dims(int J, const CMatrix& M) {
  if (J < 0 || M.rows() != dim(J) || M.cols() != dim(J)) throw std::invalid_argument("matrix must be (2J+1)x(2J+1)");
}

// phases e^{i(k-l) s}, the conjugation by diag(e^{ij s})
CMatrix phase_conjugate(const CMatrix& M, double s) {
  CMatrix out(M.rows(), M.cols());
  for (Eigen::Index k = 0; k < M.rows(); ++k)
    for (Eigen::Index l = 0; l < M.cols(); ++l) out(k, l) = std::polar(1.0, double(k - l) * s) * M(k, l);
  return out;
}

}  // namespace

DensityOperator::DensityOperator(int J, CMatrix rho, Geometry g, std::optional<KernelParams> kp)
    : J_(J), rho_(std::move(rho)), geom_(g), kp_(std::move(kp)) {
  check_dims(J_, rho_);
  if (geom_ == Geometry::Rkhs && !kp_) throw std::invalid_argument("RKHS geometry needs kernel parameters");
  if (hermitian_defect(rho_) > kHermTol) throw std::invalid_argument("density operator is not Hermitian");
  if (std::abs(rho_.trace() - cplx(1.0)) > 1e-12) throw std::invalid_argument("density operator trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -1e-10) throw std::invalid_argument("density operator is not positive semidefinite");
}

DensityOperator::DensityOperator(Trusted, int J, CMatrix rho, Geometry g, std::optional<KernelParams> kp)
    : J_(J), rho_(std::move(rho)), geom_(g), kp_(std::move(kp)) {}

DensityOperator DensityOperator::trusted(int J, CMatrix rho, Geometry g, std::optional<KernelParams> kp) {
  return DensityOperator(Trusted{}, J, std::move(rho), g, std::move(kp));
}

ObservableMatrix::ObservableMatrix(int J, CMatrix A) : J_(J), A_(std::move(A)) {
  check_dims(J_, A_);
  if (hermitian_defect(A_) > kHermTol) throw std::invalid_argument("observable is not Hermitian");
}

ObservableMatrix ObservableMatrix::identity(int J) { return ObservableMatrix(J, CMatrix::Identity(dim(J), dim(J))); }

CMatrix operator_matrix(int J, const std::function<FourierSeries(const FourierSeries&)>& op) {
  CMatrix M(dim(J), dim(J));
  for (int l = -J; l <= J; ++l) {
    FourierSeries col = op(FourierSeries::basis(J, l));
    if (col.J() != J) throw std::invalid_argument("operator changed the truncation");
    for (int k = -J; k <= J; ++k) M(k + J, l + J) = col[k];
  }
  return M;
}

ObservableMatrix ObservableMatrix::from_operator(int J, const std::function<FourierSeries(const FourierSeries&)>& op) {
  return ObservableMatrix(J, operator_matrix(J, op));
}

DensityOperator pure_state(const FourierSeries& f) {
  double n2 = f.norm2();
  if (!(std::sqrt(n2) > 1e-12)) throw std::invalid_argument("pure_state of the zero function");
  Eigen::Map<const Eigen::VectorXcd> v(f.coeffs().data(), static_cast<Eigen::Index>(f.size()));
  CMatrix rho = v * v.adjoint() / n2;
  return DensityOperator::trusted(f.J(), std::move(rho), Geometry::L2, std::nullopt);
}

DensityOperator psi_map(const KernelParams& p, double theta, int J, Inner inner) {
  if (inner == Inner::L2) return pure_state(feature_map(p, theta, J));
  // the L^2 image of the feature vector under the polar isometry; a unit vector in RKHS coordinates
  Eigen::VectorXcd v(dim(J));
  double z = 0.0;
  for (int j = -J; j <= J; ++j) {
    v(j + J) = std::exp(-0.5 * p.weight(j) * p.tau) * std::polar(1.0, -j * theta);
    z += std::exp(-p.weight(j) * p.tau);
  }
  CMatrix rho = v * v.adjoint() / z;
  return DensityOperator::trusted(J, std::move(rho), Geometry::Rkhs, p);
}

ObservableMatrix mult_operator(const FourierSeries& f, int J) {
  if (!f.is_real(1e-12 * std::max(1.0, f.norm()))) throw std::invalid_argument("multiplication operator needs a real f");
  CMatrix A(dim(J), dim(J));
  for (int k = -J; k <= J; ++k)
    for (int l = -J; l <= J; ++l) A(k + J, l + J) = f.at(k - l);
  // exact Hermitian symmetry even if f is real only to rounding
  CMatrix H = 0.5 * (A + A.adjoint());
  return ObservableMatrix(J, std::move(H));
}

double expectation(const DensityOperator& rho, const ObservableMatrix& A) {
  if (rho.J() != A.J()) throw std::invalid_argument("dimension mismatch between state and observable");
  const int J = rho.J();
  const CMatrix& R = rho.rho();
  const CMatrix& M = A.A();
  cplx s = 0.0;
  if (rho.geometry() == Geometry::L2) {
    s = R.cwiseProduct(M.transpose()).sum();
  } else {
    // tr(rho D A D^{-1}), D = diag(e^{w_j tau/2}): the observable moved into RKHS coordinates
    const KernelParams& p = *rho.kernel();
    for (int j = -J; j <= J; ++j)
      for (int k = -J; k <= J; ++k) {
        cplx r = R(j + J, k + J);
        if (r == 0.0) continue;
        s += r * std::exp(0.5 * (p.weight(k) - p.weight(j)) * p.tau) * M(k + J, j + J);
      }
  }
  if (std::abs(s.imag()) > 1e-10 * (1.0 + std::abs(s.real())))
    throw std::domain_error("expectation has imaginary residual " + std::to_string(s.imag()));
  return s.real();
}

double variance(const DensityOperator& rho, const ObservableMatrix& A) {
  ObservableMatrix A2(A.J(), A.A() * A.A());
  double m = expectation(rho, A);
  return expectation(rho, A2) - m * m;
}

DensityOperator conj_evolve(const RotationSystem& sys, const DensityOperator& rho, double t) {
  return DensityOperator::trusted(rho.J(), phase_conjugate(rho.rho(), -sys.alpha * t), rho.geometry(),
                                  rho.kernel());
}

ObservableMatrix heisenberg(const RotationSystem& sys, const ObservableMatrix& A, double t) {
  return ObservableMatrix(A.J(), phase_conjugate(A.A(), sys.alpha * t));
}

Inner default_inner(KernelFamily fam) { return fam == KernelFamily::Heat ? Inner::L2 : Inner::Rkhs; }

std::vector<double> omega_map(const KernelParams& p, const ObservableMatrix& A, const std::vector<double>& thetas) {
  return omega_map(p, A, thetas, default_inner(p.family));
}

std::vector<double> omega_map(const KernelParams& p, const ObservableMatrix& A, const std::vector<double>& thetas,
                              Inner inner) {
  std::vector<double> out;
  out.reserve(thetas.size());
  for (double th : thetas) out.push_back(expectation(psi_map(p, th, A.J(), inner), A));
  return out;
}

double operator_norm(const ObservableMatrix& A) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(A.A(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.J() != b.J()) throw std::invalid_argument("dimension mismatch");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.rho() - b.rho(), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double left_inverse_tail_bound(double f_sup, int J, int deg, double tau) {
  double tail = 0.0, total = 1.0;
  for (int j = 1; j <= J; ++j) {
    double e = std::exp(-j * tau);
    total += 2.0 * e;
    if (j > J - deg) tail += 2.0 * e;
  }
  return 2.0 * f_sup * tail / total;
}

}  // namespace circq

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "circq/kernels.hpp"
#include "circq/spectral.hpp"

namespace circq {

using CMatrix = Eigen::MatrixXcd;

// Which Hilbert space the matrix coordinates refer to: L^2(mu) with basis phi_j, or the
// RKHS with orthonormal basis e^{-w_j tau/2} phi_j.
enum class Geometry { L2, Rkhs };

class DensityOperator {
 public:
  // validates Hermiticity, positivity and unit trace
  DensityOperator(int J, CMatrix rho, Geometry g = Geometry::L2, std::optional<KernelParams> kp = std::nullopt);

  int J() const { return J_; }
  const CMatrix& rho() const { return rho_; }
  Geometry geometry() const { return geom_; }
  const std::optional<KernelParams>& kernel() const { return kp_; }

  // rank-1 and unitarily conjugated states skip the eigen check
  static DensityOperator trusted(int J, CMatrix rho, Geometry g, std::optional<KernelParams> kp);

 private:
  struct Trusted {};
  DensityOperator(Trusted, int J, CMatrix rho, Geometry g, std::optional<KernelParams> kp);
  int J_;
  CMatrix rho_;
  Geometry geom_;
  std::optional<KernelParams> kp_;
};

// Hermitian matrix in the phi_j coordinates of L^2(mu).
class ObservableMatrix {
 public:
  ObservableMatrix(int J, CMatrix A);
  static ObservableMatrix identity(int J);
  // matrix of a linear map on the truncated series, column l = op(phi_l)
  static ObservableMatrix from_operator(int J, const std::function<FourierSeries(const FourierSeries&)>& op);

  int J() const { return J_; }
  const CMatrix& A() const { return A_; }

 private:
  int J_;
  CMatrix A_;
};

// matrix of op without the Hermiticity requirement
CMatrix operator_matrix(int J, const std::function<FourierSeries(const FourierSeries&)>& op);

DensityOperator pure_state(const FourierSeries& f);

enum class Inner { L2, Rkhs };
DensityOperator psi_map(const KernelParams& p, double theta, int J, Inner inner);

ObservableMatrix mult_operator(const FourierSeries& f, int J);

double expectation(const DensityOperator& rho, const ObservableMatrix& A);
double variance(const DensityOperator& rho, const ObservableMatrix& A);

DensityOperator conj_evolve(const RotationSystem& sys, const DensityOperator& rho, double t);
ObservableMatrix heisenberg(const RotationSystem& sys, const ObservableMatrix& A, double t);

// Heat uses the L^2 state map, Fractional the RKHS one
Inner default_inner(KernelFamily fam);
std::vector<double> omega_map(const KernelParams& p, const ObservableMatrix& A, const std::vector<double>& thetas);
std::vector<double> omega_map(const KernelParams& p, const ObservableMatrix& A, const std::vector<double>& thetas,
                              Inner inner);

double operator_norm(const ObservableMatrix& A);
double trace_distance(const DensityOperator& a, const DensityOperator& b);

// 2 |f|_inf sum_{|j|>J-deg} e^{-|j| tau} / sum_j e^{-|j| tau}
double left_inverse_tail_bound(double f_sup, int J, int deg, double tau);

}  // namespace circq

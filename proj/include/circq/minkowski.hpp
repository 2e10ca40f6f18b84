#pragma once

#include <vector>

#include "circq/kernels.hpp"
#include "circq/spectral.hpp"

namespace circq {

// Normalized oscillator eigenfunctions chi_j(z) for H_0 = -f''/2 + alpha^2 z^2 f / 2,
// with H_0 chi_j = (2j+1)(alpha/2) chi_j.
class HermiteBasis {
 public:
  HermiteBasis(double alpha, int maxdeg);
  double alpha() const { return alpha_; }
  int maxdeg() const { return maxdeg_; }
  double eval(int j, double z) const;
  // chi_0..chi_maxdeg at z into out (size maxdeg+1)
  void eval_all(double z, double* out) const;

 private:
  double alpha_;
  int maxdeg_;
  std::vector<double> up_, down_;
};

double hermite_eval(const HermiteBasis& b, int j, double z);

// Coefficients on psi_00, psi_{j0} (a_j) and psi_{0k} (b_k); a[j-1] holds a_j.
struct MinkowskiState {
  cplx c00 = 0.0;
  std::vector<cplx> a, b;
  explicit MinkowskiState(int maxdeg = 0) : a(static_cast<std::size_t>(maxdeg)), b(static_cast<std::size_t>(maxdeg)) {}
  int maxdeg() const { return static_cast<int>(a.size()); }
  double norm2() const;
};

MinkowskiState embed(const FourierSeries& f, int maxdeg);
FourierSeries embed_adjoint(const MinkowskiState& s, int J);

double energy(int j, int k, double alpha);
MinkowskiState evolve(const MinkowskiState& s, double t, double alpha);
// <s, H s>
double energy_expectation(const MinkowskiState& s, double alpha);

struct Grid2D {
  double extent = 0.0;
  int n = 0;
  std::vector<cplx> values;  // values[i0 * n + i1] at (x0, x1) = (coord(i0), coord(i1))

  Grid2D() = default;
  Grid2D(double ext, int npts);
  double h() const { return 2.0 * extent / (n - 1); }
  double coord(int i) const { return -extent + i * h(); }
  cplx& at(int i0, int i1) { return values[static_cast<std::size_t>(i0) * n + i1]; }
  cplx at(int i0, int i1) const { return values[static_cast<std::size_t>(i0) * n + i1]; }
};

double reduce_angle(double theta);

// s = 1 for Heat, 1/2 for Fractional
double wavefunction_exponent_scale(KernelFamily fam);
double coefficient_tail(const KernelParams& p, int maxdeg);
int required_maxdeg(const KernelParams& p, double tol = 1e-10);
// bound on the pointwise change from dropping modes above maxdeg
double pointwise_tail_bound(const KernelParams& p, int maxdeg, double alpha);

Grid2D synth_wavefunction(const KernelParams& p, double theta, const HermiteBasis& basis, double extent, int n);

// H~ = H_0(x1) - H_0(x0) by central differences on the interior; boundary ring left at zero
Grid2D fd_hamiltonian(const Grid2D& f, double alpha);
double boundary_mass_fraction(const Grid2D& f);

}  // namespace circq

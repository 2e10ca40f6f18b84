#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace circq {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct RotationSystem {
  double alpha;
  explicit RotationSystem(double a);
};

// Truncated Fourier series sum_{j=-J..J} c_j e^{ij theta}.
class FourierSeries {
 public:
  FourierSeries() : J_(0), c_(1, cplx(0.0)) {}
  explicit FourierSeries(int J);
  FourierSeries(int J, std::vector<cplx> coeffs);

  static FourierSeries basis(int J, int j, cplx value = 1.0);

  int J() const { return J_; }
  std::size_t size() const { return c_.size(); }

  cplx operator[](int j) const { return c_[static_cast<std::size_t>(j + J_)]; }
  cplx& operator[](int j) { return c_[static_cast<std::size_t>(j + J_)]; }
  // zero outside the band instead of UB
  cplx at(int j) const;

  const std::vector<cplx>& coeffs() const { return c_; }

  double norm2() const;
  double norm() const;
  // largest |j| with a nonzero coefficient, -1 for the zero series
  int degree() const;
  bool is_real(double tol = 0.0) const;

  FourierSeries& operator+=(const FourierSeries& o);
  FourierSeries& operator-=(const FourierSeries& o);
  FourierSeries& operator*=(cplx s);

 private:
  int J_;
  std::vector<cplx> c_;
};

FourierSeries operator+(FourierSeries a, const FourierSeries& b);
FourierSeries operator-(FourierSeries a, const FourierSeries& b);
FourierSeries operator*(cplx s, FourierSeries a);

// max_j |a_j - b_j|; both must share J
double max_abs_diff(const FourierSeries& a, const FourierSeries& b);

cplx evaluate(const FourierSeries& f, double theta);

FourierSeries koopman(const RotationSystem& sys, const FourierSeries& f, double t);
FourierSeries generator(const RotationSystem& sys, const FourierSeries& f);

// L and L^*. The coefficient pushed past +-J is dropped.
FourierSeries lower(const FourierSeries& f);
FourierSeries raise(const FourierSeries& f);

enum class Sector { Neg, Zero, Pos };
FourierSeries project(const FourierSeries& f, Sector s);

// principal-branch multiplier (ij)^r, with 0^r = 0 for r > 0
cplx frac_multiplier(int j, double r);
FourierSeries frac_derivative(const FourierSeries& f, double r);

// Grünwald–Letnikov sum a^{-r} sum_{n<=N} (-1)^n binom(r,n) f(. - a n), per mode.
std::size_t gl_default_terms(double a);
std::vector<cplx> gl_multipliers(int J, double r, double a, std::size_t N);
FourierSeries gl_oracle(const FourierSeries& f, double r, double a, std::size_t N);
FourierSeries gl_oracle(const FourierSeries& f, double r, double a);

// truncated convolution (pointwise product of the underlying functions)
FourierSeries multiply(const FourierSeries& f, const FourierSeries& g);

enum class Ladder { AMinus, AMinusPlus, APlus, APlusPlus };
FourierSeries ladder(const FourierSeries& f, Ladder which);

enum class NumberSign { Minus, Plus };
FourierSeries number_op(const FourierSeries& f, NumberSign s);

enum class PosMom { XMinus, PMinus, XPlus, PPlus };
FourierSeries pos_mom(const RotationSystem& sys, const FourierSeries& f, PosMom which);

}  // namespace circq

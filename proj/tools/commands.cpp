#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <unsupported/Eigen/FFT>

#include "circq/quantum.hpp"
#include "output.hpp"
#include "verify.hpp"

namespace circq::app {

namespace {

std::string path_in(const RunConfig& cfg, const std::string& name) { return cfg.out + "/" + name; }

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<double> default_grid(int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(2.0 * kPi * i / n);
  return g;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, const std::set<std::string>& corrupt) {
  ensure_dir(cfg.out);
  auto recs = run_verify(cfg, corrupt);
  CsvWriter w(path_in(cfg, "verify.csv"), cfg.describe(), {"name", "value", "relation", "threshold", "status", "note"});
  int fails = 0, skips = 0;
  for (const auto& r : recs) {
    w.row(std::vector<std::string>{r.name, fmt(r.value), relation_name(r.rel), fmt(r.threshold), status_name(r.status),
                                   "\"" + r.note + "\""});
    std::printf("%-6s %-40s %12.3e %2s %10.3e  %s\n", status_name(r.status), r.name.c_str(), r.value,
                relation_name(r.rel), r.threshold, r.note.c_str());
    fails += r.status == Status::Fail;
    skips += r.status == Status::Skip;
  }
  std::printf("%zu checks, %d failed, %d skipped\n", recs.size(), fails, skips);
  return fails ? 1 : 0;
}

std::string figure_stem(const std::string& which, double tau, double theta) {
  return which + "_tau" + short_num(tau) + "_theta" + short_num(theta / kPi) + "pi";
}

double second_moment(const Grid2D& g) {
  double num = 0.0, den = 0.0;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      double w = std::norm(g.at(a, b)), x0 = g.coord(a), x1 = g.coord(b);
      num += (x0 * x0 + x1 * x1) * w;
      den += w;
    }
  return num / den;
}

double spectral_centroid(const Grid2D& g) {
  const int n = g.n;
  Eigen::FFT<double> fft;
  std::vector<cplx> F(g.values), in(n), out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) in[b] = F[a * n + b];
    fft.fwd(out, in);
    for (int b = 0; b < n; ++b) F[a * n + b] = out[b];
  }
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) in[a] = F[a * n + b];
    fft.fwd(out, in);
    for (int a = 0; a < n; ++a) F[a * n + b] = out[a];
  }
  auto freq = [&](int i) { return (i <= n / 2 ? i : i - n) / (n * g.h()); };
  double num = 0.0, den = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double p = std::norm(F[a * n + b]);
      num += std::hypot(freq(a), freq(b)) * p;
      den += p;
    }
  return num / den;
}

int cmd_figure(const RunConfig& cfg, const std::string& which) {
  if (which != "psi" && which != "psi-frac") throw UsageError("--which must be psi or psi-frac");
  ensure_dir(cfg.out);
  KernelParams p(which == "psi" ? KernelFamily::Heat : KernelFamily::Fractional, cfg.tau);
  int m = cfg.maxdeg;
  if (coefficient_tail(p, m) >= 1e-10) {
    m = required_maxdeg(p);
    std::fprintf(stderr, "figure: maxdeg raised from %d to %d so the dropped coefficients sum below 1e-10\n",
                 cfg.maxdeg, m);
  }
  HermiteBasis basis(cfg.alpha, m);
  std::vector<double> thetas = cfg.thetas;
  if (thetas.empty()) thetas = {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};

  RunConfig echo = cfg;
  echo.family = p.family;
  echo.maxdeg = m;
  CsvWriter summary(path_in(cfg, which + "_tau" + short_num(cfg.tau) + "_summary.csv"), echo.describe(),
                    {"theta", "second_moment", "spectral_centroid", "max_imag", "max_abs"});
  for (double th : thetas) {
    auto g = synth_wavefunction(p, th, basis, cfg.grid_extent(), cfg.grid_n);
    RunConfig one = echo;
    one.thetas = {th};
    std::string stem = path_in(cfg, figure_stem(which, cfg.tau, th));
    write_grid_csv(stem + ".csv", one.describe(), g);
    write_pgm(stem + ".pgm", one.describe(), g);
    double im = 0.0, mx = 0.0;
    for (auto v : g.values) {
      im = std::max(im, std::abs(v.imag()));
      mx = std::max(mx, std::abs(v));
    }
    summary.row(std::vector<double>{th, second_moment(g), spectral_centroid(g), im, mx});
    std::printf("wrote %s.{csv,pgm}\n", stem.c_str());
  }
  return 0;
}

int cmd_kernel(const RunConfig& cfg) {
  ensure_dir(cfg.out);
  KernelParams p(cfg.family, cfg.tau);
  auto thetas = cfg.thetas.empty() ? default_grid(64) : cfg.thetas;
  std::string name = std::string("kernel_") + family_name(cfg.family) + "_tau" + short_num(cfg.tau) + ".csv";
  CsvWriter w(path_in(cfg, name), cfg.describe(), {"theta", "theta_prime", "kappa"});
  for (double a : thetas)
    for (double b : thetas) w.row(std::vector<double>{a, b, kernel_value(p, a, b)});
  std::printf("wrote %s\n", path_in(cfg, name).c_str());
  return 0;
}

FourierSeries parse_coefficients(const std::vector<std::string>& specs, int J) {
  FourierSeries f(J);
  if (specs.empty()) {
    // cos(theta)
    f[1] = f[-1] = 0.5;
    return f;
  }
  for (const auto& s : specs) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
      auto c = s.find(':', pos);
      parts.push_back(s.substr(pos, c == std::string::npos ? std::string::npos : c - pos));
      if (c == std::string::npos) break;
      pos = c + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("coefficient '" + s + "' is not j:re[:im]");
    double jd = parse_number(parts[0]);
    if (jd != std::floor(jd) || jd < 0) throw UsageError("coefficient index in '" + s + "' must be a nonnegative integer");
    int j = static_cast<int>(jd);
    if (j > J) throw UsageError("coefficient index " + std::to_string(j) + " exceeds trunc " + std::to_string(J));
    cplx v(parse_number(parts[1]), parts.size() == 3 ? parse_number(parts[2]) : 0.0);
    if (j == 0 && v.imag() != 0.0) throw UsageError("the mean coefficient must be real");
    f[j] += v;
    if (j > 0) f[-j] += std::conj(v);
  }
  return f;
}

int cmd_expect(const RunConfig& cfg, const std::vector<std::string>& coefs) {
  ensure_dir(cfg.out);
  const int J = cfg.trunc;
  auto f = parse_coefficients(coefs, J);
  RotationSystem sys(cfg.alpha);
  KernelParams p(cfg.family, cfg.tau);
  const Inner inner = default_inner(cfg.family);
  auto thetas = cfg.thetas.empty() ? default_grid(64) : cfg.thetas;
  auto times = cfg.times.empty() ? std::vector<double>{0.0, 0.7, 3.1} : cfg.times;
  auto T = mult_operator(f, J);
  std::string name = std::string("expect_") + family_name(cfg.family) + "_tau" + short_num(cfg.tau) + ".csv";
  CsvWriter w(path_in(cfg, name), cfg.describe(), {"theta", "t", "f_flow", "expectation", "abs_diff"});
  double worst = 0.0;
  for (double th : thetas) {
    auto rho = psi_map(p, th, J, inner);
    for (double t : times) {
      double want = evaluate(koopman(sys, f, t), th).real();
      double got = expectation(conj_evolve(sys, rho, t), T);
      worst = std::max(worst, std::abs(want - got));
      w.row(std::vector<double>{th, t, want, got, std::abs(want - got)});
    }
  }
  std::printf("wrote %s; max |f - E T_f| = %.3e", path_in(cfg, name).c_str(), worst);
  if (cfg.family == KernelFamily::Fractional) {
    double sup = 0.0;
    for (auto c : f.coeffs()) sup += std::abs(c);
    std::printf(" (tail bound %.3e)", left_inverse_tail_bound(sup, J, std::max(f.degree(), 0), cfg.tau));
  }
  std::printf("\n");
  return 0;
}

int cmd_evolve(const RunConfig& cfg, const std::vector<std::string>& coefs) {
  ensure_dir(cfg.out);
  const int J = cfg.trunc;
  auto f = parse_coefficients(coefs, J);
  RotationSystem sys(cfg.alpha);
  auto times = cfg.times.empty() ? std::vector<double>{0.0, 0.7, 3.1} : cfg.times;
  const int md = std::max(cfg.maxdeg, J);
  auto e = embed(f, md);
  CsvWriter w(path_in(cfg, "evolve.csv"), cfg.describe(), {"t", "j", "re", "im", "embed_diff"});
  double worst = 0.0;
  for (double t : times) {
    auto g = koopman(sys, f, t);
    auto l = evolve(e, t, sys.alpha);
    auto back = embed_adjoint(l, J);
    double d = max_abs_diff(back, g);
    worst = std::max(worst, d);
    for (int j = -J; j <= J; ++j)
      if (f[j] != 0.0) w.row(std::vector<double>{t, double(j), g[j].real(), g[j].imag(), std::abs(back[j] - g[j])});
  }
  std::printf("wrote %s; max |U* e^{itH} U f - U^t f| = %.3e\n", path_in(cfg, "evolve.csv").c_str(), worst);
  return worst <= 1e-12 ? 0 : 1;
}

}  // namespace circq::app

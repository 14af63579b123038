#include "hyperfrac/energy.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hyperfrac/constants.hpp"
#include "hyperfrac/stencils.hpp"

namespace hyperfrac {

namespace {

struct DoubleIntegral {
  int N = 1;
  double s = 0.5;
  double eps_in = 1e-3;   // inner radial start; the core below behaves
                          // like a positive power and is charged to err
  double core_power = 2.0;  // leading r-exponent of the numerator near 0
  double X_out = 10.0;
  double support_radius = 1.0;  // fine outer resolution up to this radius
  // numerator of the kernel integrand at y = r * dir, as a function of x
  std::function<double(const Vec&, const Vec&, double)> numerator;
  // limit of the numerator as r -> infinity (shift terms vanished)
  std::function<double(const Vec&)> far_numerator;
  // inner truncation radius per x
  std::function<double(const Vec&)> inner_cap;
};

struct DoubleResult {
  double value = 0.0;
  double err = 0.0;
};

std::vector<double> geometric_breaks(double a, double b, double ratio,
                                     double max_width) {
  std::vector<double> out{a};
  double r = a;
  while (r < b) {
    double nxt = std::min(r * ratio, r + max_width);
    if (nxt <= r) nxt = r + max_width;  // keeps progress from r = 0
    r = std::min(nxt, b);
    out.push_back(r);
  }
  return out;
}

DoubleResult eval_double_integral(const DoubleIntegral& di,
                                  const QuadratureConfig& cfg) {
  const GaussRule& gr = gauss_rule(cfg.nodes_per_panel);
  auto ang = angular_rule(di.N, cfg.n_circle, cfg.n_polar, cfg.n_azimuth);
  const double s = di.s;
  double ang_total = 0.0;
  for (const AngularNode& an : ang) ang_total += an.weight;

  auto inner_integral = [&](const Vec& x, double& err) {
    const double Ry = di.inner_cap(x);
    double acc = 0.0;
    for (const AngularNode& an : ang) {
      auto f = [&](double r) {
        return di.numerator(x, an.dir, r) * std::pow(r, -1.0 - 2.0 * s);
      };
      std::vector<double> br =
          geometric_breaks(di.eps_in, Ry, cfg.grading, cfg.max_panel_width);
      for (std::size_t i = 0; i + 1 < br.size(); ++i)
        acc += an.weight * integrate_panel(f, br[i], br[i + 1], gr);
      // dropped core, bounded by the leading power of the numerator
      double probe = std::fabs(di.numerator(x, an.dir, di.eps_in));
      err += an.weight * probe * std::pow(di.eps_in, -2.0 * s) /
             (di.core_power - 2.0 * s);
    }
    acc += ang_total * di.far_numerator(x) * std::pow(Ry, -2.0 * s) / (2.0 * s);
    return acc;
  };

  DoubleResult res;
  // outer integral in polar form; fine panels across the supports, then
  // geometric growth out to the truncation radius
  std::vector<double> br =
      geometric_breaks(0.0, std::min(di.support_radius, di.X_out), 2.0, 0.35);
  if (di.X_out > di.support_radius) {
    std::vector<double> tailbr = geometric_breaks(
        di.support_radius, di.X_out, cfg.grading, di.X_out);
    br.insert(br.end(), tailbr.begin() + 1, tailbr.end());
  }
  double last_panel = 0.0;
  for (const AngularNode& an : ang) {
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
      auto g = [&](double r) {
        Vec x{0.0, 0.0, 0.0};
        for (int d = 0; d < di.N; ++d) x[d] = r * an.dir[d];
        double jac = 1.0;
        for (int d = 0; d < di.N - 1; ++d) jac *= r;
        return jac * inner_integral(x, res.err);
      };
      double piece = an.weight * integrate_panel(g, br[i], br[i + 1], gr);
      res.value += piece;
      if (i + 2 == br.size()) last_panel = std::max(last_panel, std::fabs(piece));
    }
  }
  // outer truncation charged by the magnitude of the final panel
  res.err += last_panel;
  return res;
}

double delta_line(const ScalarField& f, const Vec& x, const Vec& dir, double r,
                  const Stencil& st) {
  const int N = f.dim();
  Vec y = x;
  double acc = double(st.w(0)) * f.value(x);
  for (int k = 1; k <= st.m; ++k) {
    for (int d = 0; d < N; ++d) y[d] = x[d] + k * r * dir[d];
    double plus = f.value(y);
    for (int d = 0; d < N; ++d) y[d] = x[d] - k * r * dir[d];
    acc += double(st.w(k)) * (plus + f.value(y));
  }
  return acc;
}

double w0_of(const Stencil& st) { return double(st.w(0)); }

}  // namespace

EnergyEstimate energy_direct(const ScalarField& u, const ScalarField& v, int m,
                             double s, const QuadratureConfig& cfg) {
  if (u.dim() != v.dim())
    throw std::invalid_argument("energy_direct: dimension mismatch");
  if (m < 1 || !(s > 0.0 && s < 2.0 * m))
    throw std::invalid_argument("energy_direct: 0 < s < 2m required");
  const int N = u.dim();
  const Stencil st = make_stencil(m);
  const double c2m = norm_constant({N, 2 * m, s}).value;
  const double Ru = u.radius_for(1e-12), Rv = v.radius_for(1e-12);
  const double Rmax = std::max(Ru, Rv);

  DoubleIntegral di;
  di.N = N;
  di.s = s;
  di.core_power = 4.0 * m;
  di.support_radius = Rmax + 2.0 * m;
  di.X_out = Rmax + std::min(1000.0, std::pow(1000.0, 1.0 / (2.0 * s)));
  di.numerator = [&](const Vec& x, const Vec& dir, double r) {
    return delta_line(u, x, dir, r, st) * delta_line(v, x, dir, r, st);
  };
  di.far_numerator = [&](const Vec& x) {
    return w0_of(st) * w0_of(st) * u.value(x) * v.value(x);
  };
  di.inner_cap = [&](const Vec& x) { return Rmax + norm(x, N) + 1.0; };

  DoubleResult r = eval_double_integral(di, cfg);
  return {0.5 * c2m * r.value, 0.5 * c2m * r.err};
}

IbpReport discrete_ibp_check(const ScalarField& u, const ScalarField& v, int n,
                             int m, double s, const QuadratureConfig& cfg) {
  if (u.dim() != v.dim())
    throw std::invalid_argument("discrete_ibp_check: dimension mismatch");
  if (n < 1 || m < 1 || !(s > 0.0 && s < double(n + m)))
    throw std::invalid_argument("discrete_ibp_check: 0 < s < n+m required");
  const int N = u.dim();
  const Stencil sn = make_stencil(n), sm = make_stencil(m),
                snm = make_stencil(n + m);
  const double Ru = u.radius_for(1e-12), Rv = v.radius_for(1e-12);
  const double Rmax = std::max(Ru, Rv);
  const double X_far = std::min(1000.0, std::pow(1000.0, 1.0 / (2.0 * s)));

  DoubleIntegral lhs;
  lhs.N = N;
  lhs.s = s;
  lhs.core_power = 2.0 * (n + m);
  lhs.support_radius = Rmax + 2.0 * std::max(n, m);
  lhs.X_out = Rmax + X_far;
  lhs.numerator = [&](const Vec& x, const Vec& dir, double r) {
    return delta_line(u, x, dir, r, sn) * delta_line(v, x, dir, r, sm);
  };
  lhs.far_numerator = [&](const Vec& x) {
    return w0_of(sn) * w0_of(sm) * u.value(x) * v.value(x);
  };
  lhs.inner_cap = [&](const Vec& x) { return Rmax + norm(x, N) + 1.0; };

  DoubleIntegral rhs;
  rhs.N = N;
  rhs.s = s;
  rhs.core_power = 2.0 * (n + m);
  rhs.support_radius = Rv + 0.5;
  rhs.X_out = Rv + 0.5;  // v(x) factor kills everything beyond supp v
  rhs.numerator = [&](const Vec& x, const Vec& dir, double r) {
    return delta_line(u, x, dir, r, snm) * v.value(x);
  };
  rhs.far_numerator = [&](const Vec& x) {
    return w0_of(snm) * u.value(x) * v.value(x);
  };
  rhs.inner_cap = [&](const Vec& x) { return Ru + norm(x, N) + 1.0; };

  DoubleResult a = eval_double_integral(lhs, cfg);
  DoubleResult b = eval_double_integral(rhs, cfg);
  IbpReport rep{a.value, b.value, 0.0};
  double scale = std::max(std::fabs(a.value), std::fabs(b.value));
  rep.rel_gap = scale > 0.0 ? std::fabs(a.value - b.value) / scale : 0.0;
  return rep;
}

IbpReport increment_pair_check(const ScalarField& u, const ScalarField& v,
                               double s, const QuadratureConfig& cfg) {
  if (u.dim() != v.dim())
    throw std::invalid_argument("increment_pair_check: dimension mismatch");
  if (!(s > 0.0 && s < 1.0))
    throw std::invalid_argument("increment_pair_check: 0 < s < 1 required");
  const int N = u.dim();
  const Stencil s1 = make_stencil(1);
  const double Ru = u.radius_for(1e-12), Rv = v.radius_for(1e-12);
  const double Rmax = std::max(Ru, Rv);
  const double X_far = std::min(1000.0, std::pow(1000.0, 1.0 / (2.0 * s)));

  DoubleIntegral lhs;
  lhs.N = N;
  lhs.s = s;
  lhs.core_power = 2.0;
  lhs.support_radius = Ru + 0.5;
  lhs.X_out = Ru + 0.5;  // u(x) factor
  lhs.numerator = [&](const Vec& x, const Vec& dir, double r) {
    return u.value(x) * delta_line(v, x, dir, r, s1);
  };
  lhs.far_numerator = [&](const Vec& x) {
    return 2.0 * u.value(x) * v.value(x);
  };
  lhs.inner_cap = [&](const Vec& x) { return Rv + norm(x, N) + 1.0; };

  DoubleIntegral rhs;
  rhs.N = N;
  rhs.s = s;
  rhs.core_power = 2.0;
  rhs.support_radius = Rmax + 2.0;
  rhs.X_out = Rmax + X_far;
  rhs.numerator = [&](const Vec& x, const Vec& dir, double r) {
    Vec y = x;
    for (int d = 0; d < N; ++d) y[d] = x[d] + r * dir[d];
    return (u.value(x) - u.value(y)) * (v.value(x) - v.value(y));
  };
  rhs.far_numerator = [&](const Vec& x) { return u.value(x) * v.value(x); };
  rhs.inner_cap = [&](const Vec& x) { return Rmax + norm(x, N) + 1.0; };

  DoubleResult a = eval_double_integral(lhs, cfg);
  DoubleResult b = eval_double_integral(rhs, cfg);
  IbpReport rep{a.value, b.value, 0.0};
  double scale = std::max(std::fabs(a.value), std::fabs(b.value));
  rep.rel_gap = scale > 0.0 ? std::fabs(a.value - b.value) / scale : 0.0;
  return rep;
}

}  // namespace hyperfrac

#include "hyperfrac/harmonic.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperfrac/operator.hpp"
#include "hyperfrac/specialfn.hpp"

namespace hyperfrac {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace

PoissonExtension::PoissonExtension(int N, double s, OutsideDatum datum,
                                   double inner_tol)
    : N_(N), s_(s), datum_(std::move(datum)) {
  if (N < 1 || N > 3)
    throw std::invalid_argument("PoissonExtension: N in 1..3 required");
  if (!(s > 0.0) || s == std::floor(s))
    throw std::invalid_argument("PoissonExtension: non-integer s > 0 required");
  if (!(datum_.clearance > 1.0) || !(datum_.outer_radius > datum_.clearance))
    throw std::invalid_argument("PoissonExtension: 1 < clearance < outer required");
  if (!datum_.psi || datum_.psi->dim() != N)
    throw std::invalid_argument("PoissonExtension: datum dimension mismatch");
  n_ = int(std::floor(s));
  sigma_ = s - n_;
  double log_k = log_gamma_signed(N / 2.0).log_abs -
                 log_gamma_signed(sigma_).log_abs -
                 log_gamma_signed(1.0 - sigma_).log_abs -
                 (N / 2.0) * std::log(kPi);
  kappa_ = (n_ % 2 == 0 ? 1.0 : -1.0) * std::exp(log_k);

  // fixed kernel nodes over the datum's support shell; the integrand in y
  // is smooth there, so the resolution below is far beyond inner_tol
  int panels = 24;
  if (inner_tol < 1e-10) panels = 40;
  const GaussRule& gr = gauss_rule(16);
  const double a = datum_.clearance, b = datum_.outer_radius;
  const double hw = (b - a) / panels;
  std::vector<std::pair<double, double>> radial;  // (rho, weight)
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * hw;
    for (std::size_t i = 0; i < gr.nodes.size(); ++i) {
      double rho = lo + 0.5 * hw * (1.0 + gr.nodes[i]);
      radial.emplace_back(rho, 0.5 * hw * gr.weights[i]);
    }
  }
  auto push = [&](const Vec& y, double w_geom) {
    double psi = datum_.psi->value(y);
    if (psi == 0.0) return;
    double rho2 = norm_sq(y, N_);
    nodes_.push_back(y);
    node_w_.push_back(w_geom * psi * std::pow(rho2 - 1.0, -s_));
  };
  if (N == 1) {
    for (auto [rho, w] : radial) {
      push({rho, 0.0, 0.0}, w);
      push({-rho, 0.0, 0.0}, w);
    }
  } else {
    auto ang = angular_rule(N, 64, 16, 32);
    for (auto [rho, w] : radial)
      for (const AngularNode& an : ang) {
        Vec y{0.0, 0.0, 0.0};
        for (int d = 0; d < N; ++d) y[d] = rho * an.dir[d];
        push(y, w * an.weight * std::pow(rho, N - 1.0));
      }
  }
}

double PoissonExtension::kernel_integral(const Vec& x) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    double d2 = 0.0;
    for (int d = 0; d < N_; ++d) {
      double t = x[d] - nodes_[i][d];
      d2 += t * t;
    }
    acc += node_w_[i] * std::pow(d2, -0.5 * N_);
  }
  return acc;
}

double PoissonExtension::eval(const Vec& x) const {
  const double q = norm_sq(x, N_);
  if (q == 1.0)
    throw std::domain_error("PoissonExtension: evaluation on the unit sphere");
  if (q > 1.0) return datum_.psi->value(x);
  std::array<double, 3> key{x[0], x[1], x[2]};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  double val = kappa_ * std::pow(1.0 - q, s_) * kernel_integral(x);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(key, val);
  return val;
}

bool PoissonExtension::line_jet(const Vec& x, const Vec& dir, std::size_t len,
                                Jet& out) const {
  const double q0 = norm_sq(x, N_);
  if (q0 >= 1.0) return false;
  Jet acc(len);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    // |x + t dir - y|^2 is a quadratic jet with positive constant term
    Vec v = x;
    for (int d = 0; d < N_; ++d) v[d] -= nodes_[i][d];
    Jet quad(len, norm_sq(v, N_));
    if (len > 1) quad[1] = 2.0 * dot(v, dir, N_);
    if (len > 2) quad[2] = 1.0;
    acc += quad.pow(-0.5 * N_) * node_w_[i];
  }
  Jet w(len, 1.0 - q0);
  if (len > 1) w[1] = -2.0 * dot(x, dir, N_);
  if (len > 2) w[2] = -1.0;
  out = w.pow(s_) * acc * kappa_;
  return true;
}

double poisson_eval(const PoissonExtension& pe, const Vec& x) {
  return pe.eval(x);
}

double HarmonicField::radius_for(double) const {
  // zero beyond the datum's support shell
  return pe_->outer_radius();
}

SharmonicReport verify_sharmonic(std::shared_ptr<const PoissonExtension> pe,
                                 int m, const std::vector<Vec>& points,
                                 const QuadratureConfig& cfg) {
  if (!pe) throw std::invalid_argument("verify_sharmonic: null extension");
  if (!(m > pe->order()))
    throw std::invalid_argument("verify_sharmonic: m > s required");
  HarmonicField u(pe);
  FracParams p{pe->dim(), m, pe->order()};
  SharmonicReport rep;
  for (const Vec& x : points) {
    if (norm(x, pe->dim()) > 0.8 + 1e-12)
      throw std::invalid_argument("verify_sharmonic: sample outside |x| <= 0.8");
    EvalReport er = eval_Lms(u, x, p, cfg);
    rep.residuals.push_back(er.value);
    rep.max_residual = std::max(rep.max_residual, std::fabs(er.value));
  }
  for (int j = 0; j < 20; ++j) {
    Vec x{0.0, 0.0, 0.0};
    x[0] = 0.049 * j;
    rep.u_scale = std::max(rep.u_scale, std::fabs(pe->eval(x)));
  }
  rep.ratio = rep.u_scale > 0.0 ? rep.max_residual / rep.u_scale : 0.0;
  return rep;
}

}  // namespace hyperfrac

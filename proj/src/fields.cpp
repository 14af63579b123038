#include "hyperfrac/fields.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperfrac {

namespace {

// Taylor shift q -> q0 + delta as a jet with inner[0] = 0.
Jet delta_jet(std::size_t len) {
  Jet d(len);
  if (len > 1) d[1] = 1.0;
  return d;
}

}  // namespace

bool RadialField::line_jet(const Vec& x, const Vec& theta, std::size_t len,
                           Jet& out) const {
  const int N = dim();
  const double q0 = norm_sq(x, N);
  const double b = dot(x, theta, N);
  Jet pj = profile_jet(q0, len);
  // |x + t theta|^2 - q0 = 2 b t + t^2
  Jet inner(len);
  if (len > 1) inner[1] = 2.0 * b;
  if (len > 2) inner[2] = 1.0;
  out = pj.compose(inner);
  return true;
}

bool RadialField::neg_laplacian_at(const Vec& x, int n, double& out) const {
  if (n < 0) return false;
  if (n == 0) {
    out = value(x);
    return true;
  }
  const int N = dim();
  const double q0 = norm_sq(x, N);
  const std::size_t len = std::size_t(2 * n + 1);
  Jet h = profile_jet(q0, len);
  Jet qv = Jet::variable(len, q0);
  for (int i = 0; i < n; ++i) {
    Jet h1 = h.derivative();
    Jet h2 = h1.derivative();
    h = (h1 * double(-2 * N)) + (qv * h2) * -4.0;
  }
  out = h[0];
  return true;
}

Jet GaussianField::profile_jet(double q0, std::size_t len) const {
  Jet j(len);
  double c = std::exp(-0.5 * q0);
  for (std::size_t p = 0; p < len; ++p) {
    j[p] = c;
    c *= -0.5 / double(p + 1);
  }
  return j;
}

double GaussianField::radius_for(double eps) const {
  if (eps >= 1.0) return 0.0;
  return std::sqrt(-2.0 * std::log(eps));
}

double BumpField::profile(double q) const {
  const double R2 = R_ * R_;
  if (q >= R2) return 0.0;
  return std::exp(-q / (R2 - q));
}

Jet BumpField::profile_jet(double q0, std::size_t len) const {
  const double R2 = R_ * R_;
  if (q0 >= R2) return Jet(len);
  Jet q = Jet::variable(len, q0);
  Jet den(len, R2 - q0);
  if (len > 1) den[1] = -1.0;
  Jet u = q * den.reciprocal();
  return (u * -1.0).exp();
}

AnnulusBumpField::AnnulusBumpField(int N, double a, double b, double amplitude)
    : N_(N), a_(a), b_(b), amp_(amplitude) {
  if (!(0.0 < a && a < b))
    throw std::invalid_argument("AnnulusBumpField: 0 < a < b required");
}

double AnnulusBumpField::profile(double q) const {
  const double rho = std::sqrt(q);
  const double z = (2.0 * rho - (a_ + b_)) / (b_ - a_);
  const double w = 1.0 - z * z;
  if (w <= 0.0) return 0.0;
  return amp_ * std::exp(1.0 - 1.0 / w);
}

Jet AnnulusBumpField::profile_jet(double q0, std::size_t len) const {
  const double rho0 = std::sqrt(q0);
  if (rho0 <= a_ || rho0 >= b_) return Jet(len);
  Jet q = Jet::variable(len, q0);
  Jet z = (q.sqrt() * 2.0 + (-(a_ + b_))) * (1.0 / (b_ - a_));
  Jet w = (z * z) * -1.0 + 1.0;
  return (w.reciprocal() * -1.0 + 1.0).exp() * amp_;
}

PolyBumpField::PolyBumpField(int N, double R, std::vector<double> poly_q)
    : N_(N), bump_(N, R), poly_(std::move(poly_q)) {
  if (poly_.empty()) throw std::invalid_argument("PolyBumpField: empty polynomial");
}

double PolyBumpField::profile(double q) const {
  double p = 0.0;
  for (std::size_t i = poly_.size(); i-- > 0;) p = p * q + poly_[i];
  return p * bump_.profile(q);
}

Jet PolyBumpField::profile_jet(double q0, std::size_t len) const {
  Jet q = Jet::variable(len, q0);
  Jet p(len);
  for (std::size_t i = poly_.size(); i-- > 0;) p = p * q + poly_[i];
  return p * bump_.profile_jet(q0, len);
}

double NegLaplacianPowField::profile(double q) const {
  return profile_jet(q, 1)[0];
}

Jet NegLaplacianPowField::profile_jet(double q0, std::size_t len) const {
  const std::size_t full = len + std::size_t(2 * n_);
  Jet h = base_->profile_jet(q0, full);
  Jet qv = Jet::variable(full, q0);
  const int N = dim();
  for (int i = 0; i < n_; ++i) {
    Jet h1 = h.derivative();
    Jet h2 = h1.derivative();
    h = (h1 * double(-2 * N)) + (qv * h2) * -4.0;
  }
  Jet out(len);
  for (std::size_t p = 0; p < len; ++p) out[p] = h[p];
  return out;
}

double NegLaplacianPowField::radius_for(double eps) const {
  // polynomial growth of the derivative factors is absorbed by the margin
  return base_->radius_for(std::min(eps, 1.0) * 1e-6);
}

bool ScaledArgField::line_jet(const Vec& x, const Vec& theta, std::size_t len,
                              Jet& out) const {
  if (!base_->line_jet(mul(x), theta, len, out)) return false;
  double lp = 1.0;
  for (std::size_t p = 0; p < len; ++p) {
    out[p] *= lp;
    lp *= l_;
  }
  return true;
}

bool SumField::line_jet(const Vec& x, const Vec& theta, std::size_t len,
                        Jet& out) const {
  Jet jf, jg;
  if (!f_->line_jet(x, theta, len, jf) || !g_->line_jet(x, theta, len, jg))
    return false;
  out = jf * a_ + jg * b_;
  return true;
}

std::vector<double> SumField::kink_radii() const {
  std::vector<double> r = f_->kink_radii();
  std::vector<double> rg = g_->kink_radii();
  r.insert(r.end(), rg.begin(), rg.end());
  return r;
}

SampledGridField::SampledGridField(int N, double extent, int points_per_axis,
                                   std::vector<double> samples)
    : N_(N), L_(extent), M_(points_per_axis), data_(std::move(samples)) {
  if (N < 1 || N > 3 || extent <= 0.0 || points_per_axis < 4)
    throw std::invalid_argument("SampledGridField: bad grid shape");
  std::size_t expect = 1;
  for (int d = 0; d < N; ++d) expect *= std::size_t(M_);
  if (data_.size() != expect)
    throw std::invalid_argument("SampledGridField: sample count mismatch");
}

double SampledGridField::value(const Vec& x) const {
  const double h = spacing();
  int base[3] = {0, 0, 0};
  double w[3][4];
  for (int d = 0; d < N_; ++d) {
    double u = (x[d] + 0.5 * L_) / h;
    if (u < -1.0 || u > double(M_)) return 0.0;
    double fl = std::floor(u);
    double t = u - fl;
    base[d] = int(fl) - 1;
    // Catmull-Rom basis
    w[d][0] = 0.5 * ((-t + 2.0) * t - 1.0) * t;
    w[d][1] = 0.5 * ((3.0 * t - 5.0) * t * t + 2.0);
    w[d][2] = 0.5 * (((-3.0 * t + 4.0) * t + 1.0) * t);
    w[d][3] = 0.5 * ((t - 1.0) * t * t);
  }
  auto at = [&](int i, int j, int k) -> double {
    int idx[3] = {i, j, k};
    std::size_t flat = 0;
    for (int d = 0; d < N_; ++d) {
      if (idx[d] < 0 || idx[d] >= M_) return 0.0;
      flat = flat * std::size_t(M_) + std::size_t(idx[d]);
    }
    return data_[flat];
  };
  double acc = 0.0;
  const int n1 = N_ > 1 ? 4 : 1;
  const int n2 = N_ > 2 ? 4 : 1;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < n1; ++b)
      for (int c = 0; c < n2; ++c) {
        double wt = w[0][a];
        if (N_ > 1) wt *= w[1][b];
        if (N_ > 2) wt *= w[2][c];
        if (wt != 0.0) acc += wt * at(base[0] + a, base[1] + b, base[2] + c);
      }
  return acc;
}

double SampledGridField::radius_for(double) const {
  return 0.5 * L_ * std::sqrt(double(N_));
}

FieldPtr parse_field(const std::string& spec, int N) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.empty()) throw std::invalid_argument("parse_field: empty spec");
  const std::string& name = parts[0];
  auto num = [&](std::size_t i, double fallback) {
    return parts.size() > i ? std::stod(parts[i]) : fallback;
  };
  if (name == "gaussian") return std::make_shared<GaussianField>(N);
  if (name == "bump") return std::make_shared<BumpField>(N, num(1, 1.0));
  if (name == "annulus") {
    if (parts.size() < 3)
      throw std::invalid_argument("parse_field: annulus:a:b required");
    return std::make_shared<AnnulusBumpField>(N, std::stod(parts[1]),
                                              std::stod(parts[2]), num(3, 1.0));
  }
  if (name == "polybump")
    return std::make_shared<PolyBumpField>(N, num(1, 1.0),
                                           std::vector<double>{0.0, 1.0});
  if (name == "gaussbump")
    return std::make_shared<ProductRadialField>(
        std::make_shared<GaussianField>(N),
        std::make_shared<BumpField>(N, num(1, 1.0)));
  throw std::invalid_argument("parse_field: unknown field '" + name + "'");
}

}  // namespace hyperfrac

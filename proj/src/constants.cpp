#include "hyperfrac/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperfrac/specialfn.hpp"
#include "hyperfrac/stencils.hpp"

namespace hyperfrac {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double kahan_sum(const std::vector<double>& terms) {
  double s = 0.0, comp = 0.0;
  for (double t : terms) {
    double y = t - comp;
    double u = s + y;
    comp = (u - s) - y;
    s = u;
  }
  return s;
}

double binom_double(int n, int k) {
  return binomial(n, k).convert_to<double>();
}

double log_factorial(int n) {
  double r = 0.0;
  for (int i = 2; i <= n; ++i) r += std::log(double(i));
  return r;
}

}  // namespace

bool FracParams::s_is_integer() const { return s == std::floor(s); }

int FracParams::n() const {
  return s_is_integer() ? int(s) : int(std::ceil(s)) - 1;
}

double FracParams::sigma() const { return s - n(); }

void FracParams::validate() const {
  if (N < 1 || N > 10) throw std::invalid_argument("FracParams: N in 1..10 required");
  if (m < 1) throw std::invalid_argument("FracParams: m >= 1 required");
  if (!(s > 0.0 && s < double(m)))
    throw std::invalid_argument("FracParams: 0 < s < m required");
}

double p_sum(int m, double s) {
  if (m < 1 || s <= 0.0) throw std::invalid_argument("p_sum: m >= 1, s > 0 required");
  std::vector<double> terms;
  terms.reserve(std::size_t(m));
  for (int k = 1; k <= m; ++k) {
    double t = binom_double(2 * m, m - k) * std::pow(double(k), 2.0 * s);
    terms.push_back(k % 2 != 0 ? -t : t);
  }
  return kahan_sum(terms);
}

NormConstant norm_constant(const FracParams& p) {
  p.validate();
  NormConstant out;
  const double s = p.s;
  if (p.s_is_integer()) {
    out.branch = ConstantBranch::IntegerS;
    const int n = int(s);
    // sum_{k=2..m} (-1)^{k-s+1} binom(2m, m-k) k^{2s} ln k
    std::vector<double> terms;
    for (int k = 2; k <= p.m; ++k) {
      double t = binom_double(2 * p.m, p.m - k) * std::pow(double(k), 2.0 * s) *
                 std::log(double(k));
      int sign = ((k - n + 1) % 2 == 0) ? +1 : -1;
      terms.push_back(sign * t);
    }
    double q = kahan_sum(terms);
    out.p_sum = q;
    double log_c = s * std::log(4.0) + log_gamma_signed(p.N / 2.0 + s).log_abs +
                   log_factorial(n) - std::log(2.0) - (p.N / 2.0) * std::log(kPi) -
                   std::log(std::fabs(q));
    double sign = q > 0.0 ? 1.0 : -1.0;
    out.value = sign * std::exp(log_c);
  } else {
    out.branch = ConstantBranch::NonIntegerS;
    double P = p_sum(p.m, s);
    out.p_sum = P;
    SignedLogGamma gns = log_gamma_signed(p.N / 2.0 + s);
    SignedLogGamma gms = log_gamma_signed(-s);
    double log_c = s * std::log(4.0) + gns.log_abs - (p.N / 2.0) * std::log(kPi) -
                   gms.log_abs - std::log(std::fabs(P));
    double sign = double(gns.sign * gms.sign) * (P > 0.0 ? 1.0 : -1.0);
    out.value = sign * std::exp(log_c);
  }
  if (!(out.value > 0.0))
    throw std::runtime_error("norm_constant: computed value not positive");
  return out;
}

double closed_form_integral(int m, double s) {
  if (m < 1 || !(s > 0.0 && s < double(m)))
    throw std::invalid_argument("closed_form_integral: 0 < s < m required");
  const bool integer_s = (s == std::floor(s));
  std::vector<double> terms;
  for (int k = 1; k <= m; ++k) {
    double log_t = 2.0 * s * std::log(double(k)) - log_factorial(m - k) -
                   log_factorial(m + k);
    if (integer_s) {
      if (k == 1) continue;  // ln 1 = 0
      int n = int(s);
      int sign = ((k - n + 1) % 2 == 0) ? +1 : -1;
      terms.push_back(sign * std::exp(log_t) * std::log(double(k)));
    } else {
      int sign = (k % 2 != 0) ? +1 : -1;  // (-1)^{k+1}
      terms.push_back(sign * std::exp(log_t));
    }
  }
  double acc = kahan_sum(terms);
  if (integer_s) return 4.0 * acc;
  // 2 Gamma(s) Gamma(1-s) * sum; Gamma(1-s) via reflection handles s > 1
  SignedLogGamma gs = log_gamma_signed(s);
  SignedLogGamma g1s = log_gamma_signed(1.0 - s);
  double mag = 2.0 * std::exp(gs.log_abs + g1s.log_abs) * std::fabs(acc);
  double sign = double(gs.sign * g1s.sign) * (acc > 0.0 ? 1.0 : -1.0);
  return sign * mag;
}

double moment_ball_integral(int N, int m, double s, const std::vector<int>& alpha) {
  if (int(alpha.size()) != N)
    throw std::invalid_argument("moment_ball_integral: |alpha| entries != N");
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("moment_ball_integral: negative index");
    total += a;
  }
  if (total != m) throw std::invalid_argument("moment_ball_integral: |alpha| != m");
  if (!(s > 0.0 && s < double(m)))
    throw std::invalid_argument("moment_ball_integral: 0 < s < m required");
  double log_fact_ratio = 0.0;  // log((2 alpha)! / alpha!)
  for (int a : alpha) log_fact_ratio += log_factorial(2 * a) - log_factorial(a);
  double log_v = log_fact_ratio + (N / 2.0) * std::log(kPi) -
                 (2.0 * m - 1.0) * std::log(2.0) -
                 log_gamma_signed(N / 2.0 + m).log_abs;
  return std::exp(log_v) / (2.0 * (m - s));
}

ConstantLimits constant_limits(int N, int m) {
  if (N < 1 || m < 1) throw std::invalid_argument("constant_limits: bad arguments");
  double log_common = -log_factorial(2 * m) - (N / 2.0) * std::log(kPi);
  double at0 = std::exp(std::log(2.0) + 2.0 * log_factorial(m) +
                        log_gamma_signed(N / 2.0).log_abs + log_common);
  double atm = std::exp((2.0 * m + 1.0) * std::log(2.0) + log_factorial(m) +
                        log_gamma_signed(N / 2.0 + m).log_abs + log_common);
  return {at0, atm};
}

std::string branch_name(ConstantBranch b) {
  return b == ConstantBranch::IntegerS ? "integer-s" : "non-integer-s";
}

}  // namespace hyperfrac

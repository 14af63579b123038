#pragma once

#include <string>
#include <vector>

namespace hyperfrac {

/// Parameter triple (N, m, s) with the derived split s = n + sigma.
/// s is routed to the integer branch iff it is exactly an integer as a
/// double; near-integer values stay on the non-integer branch and suffer
/// the cancellation documented in norm_constant.
struct FracParams {
  int N = 1;
  int m = 1;
  double s = 0.5;

  bool s_is_integer() const;
  int n() const;         // s = n + sigma with sigma in (0,1); n = s for integer s
  double sigma() const;  // 0 for integer s

  void validate() const;  // throws std::invalid_argument on violation
};

enum class ConstantBranch { NonIntegerS, IntegerS };

struct NormConstant {
  double value = 0.0;  // c_{N,m,s}, strictly positive
  ConstantBranch branch = ConstantBranch::NonIntegerS;
  double p_sum = 0.0;  // the branch-defining alternating sum
};

/// sum_{k=1..m} (-1)^k binom(2m, m-k) k^{2s}, compensated summation.
double p_sum(int m, double s);

/// The normalizing constant on the branch matching s.
NormConstant norm_constant(const FracParams& p);

/// Closed form of int_0^inf rho^{s-1} / prod_{k=1..m}(rho + k^2) drho.
double closed_form_integral(int m, double s);

/// int_{B_1} y^{2 alpha} / |y|^{N+2s} dy for a multi-index with |alpha| = m.
double moment_ball_integral(int N, int m, double s, const std::vector<int>& alpha);

/// (lim_{s->0+} c/s, lim_{s->m-} c/(m-s)) in closed form.
struct ConstantLimits {
  double at_zero;
  double at_m;
};
ConstantLimits constant_limits(int N, int m);

std::string branch_name(ConstantBranch b);

}  // namespace hyperfrac

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperfrac {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Central finite-difference weights of order 2m:
/// w_k = (-1)^k binom(2m, m-k) for k = -m..m.
struct Stencil {
  int m = 0;
  std::vector<std::int64_t> weights;  // index 0 .. 2m maps to k = -m .. m

  std::int64_t w(int k) const { return weights[std::size_t(k + m)]; }
};

Stencil make_stencil(int m);

/// sum_k w_k f(x + k y) for a 1-argument evaluator along the line through x
/// with displacement y (the caller binds direction and point).
double apply_delta(const std::function<double(double)>& line, double t0, double dt,
                   const Stencil& st);

/// Exact sum_k w_k k^p.  Vanishes for odd p and for p = 2n with n < m;
/// equals (-1)^m (2m)! at p = 2m.
BigInt moment_sum(int m, int p);

/// sum_{k=1..m} (-1)^{k+1} binom(2m, m-k); equals binom(2m,m)/2.
BigRational one_sided_sum(int m);

/// Partial-fraction coefficients a_{k,n}, k = 1..n, with
/// rho^{n-1} = sum_k a_{k,n} prod_{j != k} (rho + j^2).
std::vector<BigRational> partial_fraction_a(int n);

/// Coefficients b_{j,k} for 1/prod_{j in J u {k}}(rho + j^2)
/// = sum_j b_{j,k}/(rho + j^2).  Returned in the iteration order of
/// J u {k} sorted ascending.
struct PartialFractionB {
  std::vector<int> indices;
  std::vector<BigRational> coeffs;
};
PartialFractionB partial_fraction_b(const std::vector<int>& J, int k);

/// Exact binomial coefficient.
BigInt binomial(int n, int k);

/// num/den with the sign moved to the numerator (the rational type rejects
/// negative denominators).
inline BigRational make_rational(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigRational(num, den);
}

}  // namespace hyperfrac

#include "hyperfrac/stencils.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hyperfrac {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Stencil make_stencil(int m) {
  if (m < 1) throw std::invalid_argument("make_stencil: m >= 1 required");
  Stencil st;
  st.m = m;
  st.weights.resize(std::size_t(2 * m + 1));
  for (int k = -m; k <= m; ++k) {
    BigInt w = binomial(2 * m, m - k);
    if (k % 2 != 0) w = -w;
    if (w > BigInt(INT64_MAX) || w < BigInt(INT64_MIN))
      throw std::overflow_error("make_stencil: weights exceed 64-bit range");
    st.weights[std::size_t(k + m)] = w.convert_to<std::int64_t>();
  }
  return st;
}

double apply_delta(const std::function<double(double)>& line, double t0, double dt,
                   const Stencil& st) {
  // symmetric pairing halves cancellation error
  double acc = double(st.w(0)) * line(t0);
  for (int k = 1; k <= st.m; ++k)
    acc += double(st.w(k)) * (line(t0 + k * dt) + line(t0 - k * dt));
  return acc;
}

BigInt moment_sum(int m, int p) {
  if (m < 1 || p < 0) throw std::invalid_argument("moment_sum: bad arguments");
  BigInt acc = 0;
  for (int k = -m; k <= m; ++k) {
    if (k == 0) {
      if (p == 0) acc += binomial(2 * m, m);
      continue;
    }
    BigInt term = binomial(2 * m, m - k);
    if (k % 2 != 0) term = -term;
    BigInt kp = 1;
    for (int i = 0; i < p; ++i) kp *= k;
    acc += term * kp;
  }
  return acc;
}

BigRational one_sided_sum(int m) {
  if (m < 1) throw std::invalid_argument("one_sided_sum: m >= 1 required");
  BigInt acc = 0;
  for (int k = 1; k <= m; ++k) {
    BigInt t = binomial(2 * m, m - k);
    if (k % 2 == 0) t = -t;
    acc += t;
  }
  return BigRational(acc);
}

std::vector<BigRational> partial_fraction_a(int n) {
  if (n < 1) throw std::invalid_argument("partial_fraction_a: n >= 1 required");
  std::vector<BigRational> a;
  a.reserve(std::size_t(n));
  for (int k = 1; k <= n; ++k) {
    BigInt k2n = 1;
    for (int i = 0; i < 2 * n; ++i) k2n *= k;
    BigInt num = 2 * k2n;
    if ((k - n) % 2 != 0) num = -num;
    BigInt den = 1;
    for (int i = 2; i <= n + k; ++i) den *= i;
    for (int i = 2; i <= n - k; ++i) den *= i;
    a.push_back(make_rational(num, den));
  }
  return a;
}

PartialFractionB partial_fraction_b(const std::vector<int>& J, int k) {
  std::set<int> jk(J.begin(), J.end());
  if (jk.size() != J.size() || jk.count(k))
    throw std::invalid_argument("partial_fraction_b: indices must be distinct");
  jk.insert(k);
  PartialFractionB out;
  for (int j : jk) {
    BigInt den = 1;
    for (int i : jk) {
      if (i == j) continue;
      den *= BigInt(i) * i - BigInt(j) * j;
    }
    out.indices.push_back(j);
    out.coeffs.push_back(make_rational(1, den));
  }
  return out;
}

}  // namespace hyperfrac

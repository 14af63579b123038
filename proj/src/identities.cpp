#include "hyperfrac/identities.hpp"

#include <random>
#include <sstream>

#include "hyperfrac/stencils.hpp"

namespace hyperfrac {

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void check(std::vector<IdentityCheck>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
  out.push_back({name, ok, ok ? "" : detail});
}

// polynomial with rational coefficients, lowest degree first
using Poly = std::vector<BigRational>;

BigRational poly_eval(const Poly& p, const BigRational& x) {
  BigRational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

BigRational delta_poly(const Poly& u, int m, const BigRational& x,
                       const BigRational& y) {
  BigRational acc = 0;
  for (int k = -m; k <= m; ++k) {
    BigInt w = binomial(2 * m, m - k);
    if (k % 2 != 0) w = -w;
    acc += BigRational(w) * poly_eval(u, x + BigRational(k) * y);
  }
  return acc;
}

}  // namespace

std::vector<IdentityCheck> run_exact_identity_suite() {
  std::vector<IdentityCheck> out;

  // moment sums: zero below the top order, (-1)^m (2m)! at the top
  for (int m = 1; m <= 8; ++m) {
    bool all_zero = true;
    for (int p = 0; p < 2 * m; ++p)
      if (moment_sum(m, p) != 0) all_zero = false;
    std::ostringstream name;
    name << "moment-sum vanishing, m=" << m;
    check(out, name.str(), all_zero);
    BigInt top = factorial(2 * m);
    if (m % 2 != 0) top = -top;
    std::ostringstream name2;
    name2 << "moment-sum top value, m=" << m;
    check(out, name2.str(), moment_sum(m, 2 * m) == top);
  }

  // one-sided weight sum equals half the central weight
  for (int m = 1; m <= 8; ++m) {
    std::ostringstream name;
    name << "one-sided weight sum, m=" << m;
    check(out, name.str(),
          one_sided_sum(m) == BigRational(binomial(2 * m, m), 2));
  }

  // a-coefficients: rho^{n-1} = sum_k a_k prod_{j != k} (rho + j^2)
  const BigRational probes[3] = {BigRational(1, 3), BigRational(7, 5),
                                 BigRational(22, 7)};
  for (int n = 1; n <= 5; ++n) {
    auto a = partial_fraction_a(n);
    for (const BigRational& rho : probes) {
      BigRational lhs = 1;
      for (int i = 1; i < n; ++i) lhs *= rho;
      BigRational rhs = 0;
      for (int k = 1; k <= n; ++k) {
        BigRational prod = a[std::size_t(k - 1)];
        for (int j = 1; j <= n; ++j)
          if (j != k) prod *= rho + BigRational(j * j);
        rhs += prod;
      }
      std::ostringstream name;
      name << "a-coefficient reconstruction, n=" << n;
      check(out, name.str(), lhs == rhs, "probe mismatch");
    }
  }

  // b-coefficients: 1 = sum_j b_j prod_{i != j} (rho + i^2)
  const std::vector<std::vector<int>> j_sets = {
      {2}, {2, 3}, {1, 4, 5}, {2, 3, 5, 7}, {1, 2, 4, 6, 8}};
  const int j_extra[] = {5, 1, 3, 4, 7};
  for (std::size_t t = 0; t < j_sets.size(); ++t) {
    auto pf = partial_fraction_b(j_sets[t], j_extra[t]);
    for (const BigRational& rho : probes) {
      BigRational rhs = 0;
      for (std::size_t a = 0; a < pf.indices.size(); ++a) {
        BigRational prod = pf.coeffs[a];
        for (std::size_t b = 0; b < pf.indices.size(); ++b)
          if (b != a) prod *= rho + BigRational(pf.indices[b] * pf.indices[b]);
        rhs += prod;
      }
      std::ostringstream name;
      name << "b-coefficient reconstruction, |J|=" << j_sets[t].size();
      check(out, name.str(), rhs == BigRational(1), "probe mismatch");
    }
  }

  // odd-power sum: j^{2n-1} = 2 sum_{k=1..n} (-1)^{k-n-1} (j+n)! k^{2n}
  //                            / ((n+k)!(n-k)!(k^2-j^2)(j-n-1)!)
  for (int n = 1; n <= 4; ++n) {
    for (int j = n + 1; j <= 8; ++j) {
      BigRational rhs = 0;
      for (int k = 1; k <= n; ++k) {
        BigInt k2n = 1;
        for (int i = 0; i < 2 * n; ++i) k2n *= k;
        BigInt num = 2 * factorial(j + n) * k2n;
        if ((k - n - 1) % 2 != 0) num = -num;
        BigInt den = factorial(n + k) * factorial(n - k) *
                     BigInt(BigInt(k) * k - BigInt(j) * j) * factorial(j - n - 1);
        rhs += make_rational(num, den);
      }
      BigInt lhs = 1;
      for (int i = 0; i < 2 * n - 1; ++i) lhs *= j;
      std::ostringstream name;
      name << "odd-power sum, n=" << n << " j=" << j;
      check(out, name.str(), rhs == BigRational(lhs));
    }
  }

  // difference recursion on random rational polynomials:
  // the order-(m+1) difference equals the order-m difference of the
  // order-1 difference
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      Poly u(std::size_t(2 * m + 4));
      for (auto& c : u) c = BigRational(coef(rng), 1 + trial);
      BigRational x(coef(rng), 7), y(coef(rng) * 2 + 1, 5);
      BigRational lhs = delta_poly(u, m + 1, x, y);
      // v(t) = order-1 difference of u at (t, y)
      BigRational rhs = 0;
      for (int k = -m; k <= m; ++k) {
        BigInt w = binomial(2 * m, m - k);
        if (k % 2 != 0) w = -w;
        BigRational t = x + BigRational(k) * y;
        BigRational v = BigRational(2) * poly_eval(u, t) -
                        poly_eval(u, t + y) - poly_eval(u, t - y);
        rhs += BigRational(w) * v;
      }
      std::ostringstream name;
      name << "difference recursion, m=" << m << " trial=" << trial;
      check(out, name.str(), lhs == rhs);
    }
  }

  return out;
}

}  // namespace hyperfrac

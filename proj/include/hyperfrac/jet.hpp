#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperfrac {

/// Truncated Taylor series about a point: c[p] is the coefficient of t^p
/// (derivative/p! already folded in).  Length is fixed at construction; all
/// binary ops require equal lengths.
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::size_t len, double c0 = 0.0) : c_(len, 0.0) {
    if (len == 0) throw std::invalid_argument("Jet: empty");
    c_[0] = c0;
  }
  static Jet variable(std::size_t len, double x0) {
    Jet j(len, x0);
    if (len > 1) j.c_[1] = 1.0;
    return j;
  }

  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t p) const { return c_[p]; }
  double& operator[](std::size_t p) { return c_[p]; }
  double value() const { return c_[0]; }

  Jet& operator+=(const Jet& o) {
    assert(o.size() == size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    assert(o.size() == size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(double a) {
    for (double& x : c_) x *= a;
    return *this;
  }
  Jet& operator+=(double a) {
    c_[0] += a;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, double s) { return a += s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    assert(a.size() == b.size());
    Jet r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; i + j < a.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }

  /// 1/u, requires u(0) != 0.
  Jet reciprocal() const {
    if (c_[0] == 0.0) throw std::domain_error("Jet: reciprocal of zero");
    Jet r(size());
    r.c_[0] = 1.0 / c_[0];
    for (std::size_t k = 1; k < size(); ++k) {
      double acc = 0.0;
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc / c_[0];
    }
    return r;
  }

  Jet exp() const {
    Jet r(size());
    r.c_[0] = std::exp(c_[0]);
    for (std::size_t k = 1; k < size(); ++k) {
      double acc = 0.0;
      for (std::size_t j = 1; j <= k; ++j) acc += double(j) * c_[j] * r.c_[k - j];
      r.c_[k] = acc / double(k);
    }
    return r;
  }

  Jet log() const {
    if (c_[0] <= 0.0) throw std::domain_error("Jet: log of non-positive value");
    Jet r(size());
    r.c_[0] = std::log(c_[0]);
    for (std::size_t k = 1; k < size(); ++k) {
      double acc = 0.0;
      for (std::size_t j = 1; j < k; ++j) acc += double(j) * r.c_[j] * c_[k - j];
      r.c_[k] = (c_[k] - acc / double(k)) / c_[0];
    }
    return r;
  }

  /// u^a for real a, requires u(0) > 0.
  Jet pow(double a) const { return (log() * a).exp(); }

  Jet sqrt() const { return pow(0.5); }

  /// Formal derivative; result has the same length (top coefficient 0).
  Jet derivative() const {
    Jet r(size());
    for (std::size_t k = 1; k < size(); ++k) r.c_[k - 1] = double(k) * c_[k];
    return r;
  }

  /// this o inner, where inner(0) may be nonzero only in slot 0 offset:
  /// evaluates the series of *this at (inner - inner(0)) shifted by nothing,
  /// i.e. requires inner[0] == expansion point already subtracted by caller.
  Jet compose(const Jet& inner) const {
    assert(inner.size() == size());
    if (inner.c_[0] != 0.0) throw std::invalid_argument("Jet::compose: inner[0] must be 0");
    Jet r(size());
    // Horner over jets
    for (std::size_t k = size(); k-- > 0;) {
      r = r * inner;
      r.c_[0] += c_[k];
    }
    return r;
  }

 private:
  std::vector<double> c_;
};

}  // namespace hyperfrac

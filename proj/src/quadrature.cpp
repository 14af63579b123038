#include "hyperfrac/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hyperfrac {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

GaussRule compute_gauss(int n) {
  GaussRule r;
  r.nodes.resize(std::size_t(n));
  r.weights.resize(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    r.nodes[std::size_t(i)] = x;
    r.weights[std::size_t(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
  if (n < 2) throw std::invalid_argument("gauss_rule: n >= 2 required");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss(n)).first;
  return it->second;
}

double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       const GaussRule& rule) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

std::vector<AngularNode> angular_rule(int N, int n_circle, int n_polar,
                                      int n_azimuth) {
  std::vector<AngularNode> out;
  if (N == 1) {
    out.push_back({{1.0, 0.0, 0.0}, 1.0});
    out.push_back({{-1.0, 0.0, 0.0}, 1.0});
    return out;
  }
  if (N == 2) {
    if (n_circle < 4 || n_circle % 2 != 0)
      throw std::invalid_argument("angular_rule: even circle count >= 4 required");
    const double w = 2.0 * kPi / n_circle;
    for (int j = 0; j < n_circle; ++j) {
      double t = 2.0 * kPi * j / n_circle;
      out.push_back({{std::cos(t), std::sin(t), 0.0}, w});
    }
    return out;
  }
  if (N == 3) {
    if (n_polar < 2 || n_azimuth < 4 || n_azimuth % 2 != 0)
      throw std::invalid_argument("angular_rule: bad sphere rule counts");
    const GaussRule& g = gauss_rule(n_polar);
    const double wphi = 2.0 * kPi / n_azimuth;
    for (int i = 0; i < n_polar; ++i) {
      double u = g.nodes[std::size_t(i)];
      double su = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (int j = 0; j < n_azimuth; ++j) {
        double phi = 2.0 * kPi * j / n_azimuth;
        out.push_back({{su * std::cos(phi), su * std::sin(phi), u},
                       g.weights[std::size_t(i)] * wphi});
      }
    }
    return out;
  }
  throw std::invalid_argument("angular_rule: N in {1,2,3} required");
}

}  // namespace hyperfrac

#pragma once

#include <functional>
#include <vector>

#include "hyperfrac/fields.hpp"

namespace hyperfrac {

/// Gauss-Legendre rule on [-1, 1]; cached per node count, thread-safe.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_rule(int n);

double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       const GaussRule& rule);

/// Direction/weight pairs discretizing the surface measure on S^{N-1}.
/// All rules are antipodally symmetric (even counts required).
struct AngularNode {
  Vec dir;
  double weight;
};
std::vector<AngularNode> angular_rule(int N, int n_circle, int n_polar,
                                      int n_azimuth);

/// Knobs of the radial-angular scheme used by the operator evaluation.
struct QuadratureConfig {
  double r_inner = 0.25;      // series/panel handover radius, halved adaptively
  double grading = 1.7;       // geometric panel ratio
  double R_cut = 80.0;        // hard outer truncation
  double max_panel_width = 0.75;
  int nodes_per_panel = 12;
  int n_circle = 64;   // N = 2 trapezoid count
  int n_polar = 16;    // N = 3 Gauss count in cos(theta)
  int n_azimuth = 32;  // N = 3 trapezoid count in phi
  double tol = 1e-6;   // target absolute tolerance at unit field scale
};

}  // namespace hyperfrac

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hyperfrac/fields.hpp"
#include "hyperfrac/quadrature.hpp"

namespace hyperfrac {

/// Outside data: a field vanishing on the ball of a recorded clearance
/// radius r > 1 and supported inside the outer radius.
struct OutsideDatum {
  FieldPtr psi;
  double clearance = 2.0;     // psi = 0 on |x| <= clearance, clearance > 1
  double outer_radius = 3.0;  // psi = 0 on |x| >= outer_radius
};

/// The extension driven by outside data: inside the unit ball the kernel
/// integral weighted by (1 - |x|^2)^s, outside the closed ball the datum
/// itself (the weight factor kills the integral there).
class PoissonExtension {
 public:
  PoissonExtension(int N, double s, OutsideDatum datum, double inner_tol = 1e-9);

  int dim() const { return N_; }
  double order() const { return s_; }
  double kernel_constant() const { return kappa_; }
  double outer_radius() const { return datum_.outer_radius; }

  /// The y-integral of psi / ((|y|^2-1)^s |x-y|^N) over the exterior.
  double kernel_integral(const Vec& x) const;

  /// u(x); memoized per exact point.
  double eval(const Vec& x) const;

  /// Taylor coefficients of t -> u(x + t dir) for |x| strictly inside the
  /// ball, from termwise differentiation of the kernel.
  bool line_jet(const Vec& x, const Vec& dir, std::size_t len, Jet& out) const;

 private:
  int N_;
  double s_;
  int n_;
  double sigma_;
  double kappa_;
  OutsideDatum datum_;
  // fixed kernel nodes: location and weight including psi and the
  // (|y|^2-1)^{-s} factor
  std::vector<Vec> nodes_;
  std::vector<double> node_w_;
  mutable std::mutex mu_;
  mutable std::map<std::array<double, 3>, double> cache_;
};

double poisson_eval(const PoissonExtension& pe, const Vec& x);

/// ScalarField adapter so the operator module can consume the extension.
class HarmonicField final : public ScalarField {
 public:
  explicit HarmonicField(std::shared_ptr<const PoissonExtension> pe)
      : pe_(std::move(pe)) {}
  int dim() const override { return pe_->dim(); }
  double value(const Vec& x) const override { return pe_->eval(x); }
  bool line_jet(const Vec& x, const Vec& theta, std::size_t len,
                Jet& out) const override {
    return pe_->line_jet(x, theta, len, out);
  }
  double radius_for(double) const override;
  std::vector<double> kink_radii() const override { return {1.0}; }
  bool smooth() const override { return false; }

 private:
  std::shared_ptr<const PoissonExtension> pe_;
};

struct SharmonicReport {
  double max_residual = 0.0;
  double u_scale = 0.0;
  double ratio = 0.0;
  std::vector<double> residuals;
};

/// Evaluates the order-(m, s) operator on the extension at the sample
/// points and reports the residual magnitude against max |u|.
SharmonicReport verify_sharmonic(std::shared_ptr<const PoissonExtension> pe,
                                 int m, const std::vector<Vec>& points,
                                 const QuadratureConfig& cfg = {});

}  // namespace hyperfrac

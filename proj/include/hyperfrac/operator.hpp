#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperfrac/constants.hpp"
#include "hyperfrac/fields.hpp"
#include "hyperfrac/quadrature.hpp"

namespace hyperfrac {

struct EvalReport {
  double value = 0.0;
  double tail_estimate = 0.0;  // bound on omitted/approximated contributions
  int panel_count = 0;
  std::vector<std::string> warnings;
};

/// Pointwise L_{m,s} f(x): (c/2) times the hypersingular integral of the
/// symmetric difference against |y|^{-N-2s}, by radial-angular quadrature.
/// The region below the handover radius is summed in closed form from the
/// field's Taylor data; fields without exact jets get that region dropped
/// and charged to tail_estimate.
EvalReport eval_Lms(const ScalarField& f, const Vec& x, const FracParams& p,
                    const QuadratureConfig& cfg = {});

/// Principal-value form: c times the annulus integral of the one-sided
/// difference, antipodal directions paired so the odd-order terms cancel
/// exactly; the sub-annulus core is restored from the same Taylor data.
EvalReport eval_Lms_pv(const ScalarField& f, const Vec& x, const FracParams& p,
                       const QuadratureConfig& cfg = {});

/// Classical (-Laplacian)^n f(x); exact for catalog fields, high-order
/// central differences otherwise.
double eval_polyharmonic(const ScalarField& f, const Vec& x, int n);

struct EquivalenceReport {
  EvalReport direct;    // L_{m,s} f(x)
  EvalReport composed;  // order-1 evaluation at exponent sigma of (-Lap)^n f
  double discrepancy = 0.0;
};

/// Compares L_{m,s} f(x) against the composition through the classical
/// part: apply (-Laplacian)^n exactly, then the order-(1, sigma) operator.
/// For integer s the composed side is the exact classical value.
EquivalenceReport equivalence_check(const std::shared_ptr<const RadialField>& f,
                                    const Vec& x, const FracParams& p,
                                    const QuadratureConfig& cfg = {});

}  // namespace hyperfrac

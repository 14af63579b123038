#pragma once

#include "hyperfrac/fields.hpp"
#include "hyperfrac/quadrature.hpp"

namespace hyperfrac {

struct EnergyEstimate {
  double value = 0.0;
  double quadrature_error_estimate = 0.0;
};

/// Direct-space bilinear form: (c_{N,2m,s}/2) times the double integral of
/// the product of the two order-m symmetric differences against
/// |y|^{-N-2s}.  Note the constant uses 2m while the differences use m.
EnergyEstimate energy_direct(const ScalarField& u, const ScalarField& v, int m,
                             double s, const QuadratureConfig& cfg = {});

struct IbpReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_gap = 0.0;
};

/// Double-integral identity: the (n, m) difference product against the
/// kernel equals the order-(n+m) difference of u times v(x).
IbpReport discrete_ibp_check(const ScalarField& u, const ScalarField& v, int n,
                             int m, double s, const QuadratureConfig& cfg = {});

/// First-order variant: u(x) times the order-1 difference of v equals the
/// product of the two single increments.
IbpReport increment_pair_check(const ScalarField& u, const ScalarField& v,
                               double s, const QuadratureConfig& cfg = {});

}  // namespace hyperfrac

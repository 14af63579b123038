#pragma once

#include <string>
#include <vector>

#include "hyperfrac/fields.hpp"

namespace hyperfrac {

/// Real samples on [-L/2, L/2)^N with M points per axis, row-major with the
/// last axis fastest.  M must be a power of two >= 32.
struct UniformGrid {
  int N = 1;
  double L = 40.0;
  int M = 1024;
  std::vector<double> samples;

  std::size_t total() const;
  double spacing() const { return L / M; }
  double coord(int idx) const { return -0.5 * L + idx * spacing(); }
  void validate() const;  // throws std::invalid_argument
};

UniformGrid sample_field(const ScalarField& f, int N, double L, int M);

struct SymbolResult {
  UniformGrid grid;
  double imag_residue = 0.0;        // max |imaginary part| after inversion
  double outer_mass_fraction = 0.0; // |samples| mass outside the central half
  std::vector<std::string> warnings;
};

/// Applies the multiplier |xi|^{2s} in the unitary angular-frequency
/// convention: forward transform, multiply with xi = 2 pi k / L, invert.
/// The zero mode is multiplied by 0 for every s > 0.
SymbolResult symbol_apply(const UniformGrid& g, double s);

/// Fourier-side bilinear form: integral of |xi|^{2s} Fu conj(Fv).
double fourier_energy(const UniformGrid& u, const UniformGrid& v, double s);

/// Trapezoid value of the integral of u*v over the extent (periodic grid,
/// so a plain scaled sum).
double grid_inner(const UniformGrid& u, const UniformGrid& v);

}  // namespace hyperfrac

#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "hyperfrac/jet.hpp"

namespace hyperfrac {

/// Points live in at most 3 dimensions; the active dimension is carried by
/// the field.
using Vec = std::array<double, 3>;

inline double dot(const Vec& a, const Vec& b, int N) {
  double s = 0.0;
  for (int i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}
inline double norm_sq(const Vec& a, int N) { return dot(a, a, N); }
inline double norm(const Vec& a, int N) { return std::sqrt(norm_sq(a, N)); }

/// Evaluable function on R^N.  Catalog entries additionally expose exact
/// Taylor data along lines (line_jet) and exact iterated Laplacians, which
/// the operator evaluation uses near its singularity.
class ScalarField {
 public:
  virtual ~ScalarField() = default;
  virtual int dim() const = 0;
  virtual double value(const Vec& x) const = 0;

  /// Taylor coefficients of t -> f(x + t theta) at t = 0 (theta unit).
  /// Returns false if the field cannot provide exact jets.
  virtual bool line_jet(const Vec& x, const Vec& theta, std::size_t len,
                        Jet& out) const {
    (void)x, (void)theta, (void)len, (void)out;
    return false;
  }

  /// Exact (-Laplacian)^n f(x); false if unsupported.
  virtual bool neg_laplacian_at(const Vec& x, int n, double& out) const {
    (void)x, (void)n, (void)out;
    return false;
  }

  /// Radius r with |f(y)| <= eps whenever |y| >= r.
  virtual double radius_for(double eps) const = 0;

  /// Radii of spheres about the origin across which the field has reduced
  /// smoothness; quadrature panels must not straddle them.
  virtual std::vector<double> kink_radii() const { return {}; }

  virtual bool smooth() const { return true; }
};

using FieldPtr = std::shared_ptr<const ScalarField>;

/// Radial field f(x) = profile(|x|^2).
class RadialField : public ScalarField {
 public:
  virtual double profile(double q) const = 0;
  /// Taylor coefficients of the profile about q0.
  virtual Jet profile_jet(double q0, std::size_t len) const = 0;

  double value(const Vec& x) const override { return profile(norm_sq(x, dim())); }
  bool line_jet(const Vec& x, const Vec& theta, std::size_t len,
                Jet& out) const override;
  bool neg_laplacian_at(const Vec& x, int n, double& out) const override;
};

class GaussianField final : public RadialField {
 public:
  explicit GaussianField(int N) : N_(N) {}
  int dim() const override { return N_; }
  double profile(double q) const override { return std::exp(-0.5 * q); }
  Jet profile_jet(double q0, std::size_t len) const override;
  double radius_for(double eps) const override;

 private:
  int N_;
};

/// Smooth bump supported on |x| < R, value 1 at the origin.
class BumpField final : public RadialField {
 public:
  BumpField(int N, double R) : N_(N), R_(R) {}
  int dim() const override { return N_; }
  double profile(double q) const override;
  Jet profile_jet(double q0, std::size_t len) const override;
  double radius_for(double) const override { return R_; }
  double radius() const { return R_; }

 private:
  int N_;
  double R_;
};

/// Smooth bump supported on the annulus a < |x| < b.
class AnnulusBumpField final : public RadialField {
 public:
  AnnulusBumpField(int N, double a, double b, double amplitude = 1.0);
  int dim() const override { return N_; }
  double profile(double q) const override;
  Jet profile_jet(double q0, std::size_t len) const override;
  double radius_for(double) const override { return b_; }
  double inner_radius() const { return a_; }
  double outer_radius() const { return b_; }

 private:
  int N_;
  double a_, b_, amp_;
};

/// p(|x|^2) * bump_R(x) with polynomial coefficients in q = |x|^2.
class PolyBumpField final : public RadialField {
 public:
  PolyBumpField(int N, double R, std::vector<double> poly_q);
  int dim() const override { return N_; }
  double profile(double q) const override;
  Jet profile_jet(double q0, std::size_t len) const override;
  double radius_for(double) const override { return bump_.radius(); }

 private:
  int N_;
  BumpField bump_;
  std::vector<double> poly_;
};

class ProductRadialField final : public RadialField {
 public:
  ProductRadialField(std::shared_ptr<const RadialField> a,
                     std::shared_ptr<const RadialField> b)
      : a_(std::move(a)), b_(std::move(b)) {}
  int dim() const override { return a_->dim(); }
  double profile(double q) const override { return a_->profile(q) * b_->profile(q); }
  Jet profile_jet(double q0, std::size_t len) const override {
    return a_->profile_jet(q0, len) * b_->profile_jet(q0, len);
  }
  double radius_for(double eps) const override {
    return std::min(a_->radius_for(eps), b_->radius_for(eps));
  }

 private:
  std::shared_ptr<const RadialField> a_, b_;
};

/// Exact (-Laplacian)^n of a radial base field.
class NegLaplacianPowField final : public RadialField {
 public:
  NegLaplacianPowField(std::shared_ptr<const RadialField> base, int n)
      : base_(std::move(base)), n_(n) {}
  int dim() const override { return base_->dim(); }
  double profile(double q) const override;
  Jet profile_jet(double q0, std::size_t len) const override;
  double radius_for(double eps) const override;

 private:
  std::shared_ptr<const RadialField> base_;
  int n_;
};

/// f(x - h); intended for smooth catalog bases.
class ShiftedField final : public ScalarField {
 public:
  ShiftedField(FieldPtr base, const Vec& shift) : base_(std::move(base)), h_(shift) {}
  int dim() const override { return base_->dim(); }
  double value(const Vec& x) const override { return base_->value(sub(x)); }
  bool line_jet(const Vec& x, const Vec& theta, std::size_t len,
                Jet& out) const override {
    return base_->line_jet(sub(x), theta, len, out);
  }
  double radius_for(double eps) const override {
    return base_->radius_for(eps) + norm(h_, dim());
  }

 private:
  Vec sub(const Vec& x) const {
    Vec y = x;
    for (int i = 0; i < dim(); ++i) y[i] -= h_[i];
    return y;
  }
  FieldPtr base_;
  Vec h_;
};

/// f(lambda x).
class ScaledArgField final : public ScalarField {
 public:
  ScaledArgField(FieldPtr base, double lambda) : base_(std::move(base)), l_(lambda) {}
  int dim() const override { return base_->dim(); }
  double value(const Vec& x) const override { return base_->value(mul(x)); }
  bool line_jet(const Vec& x, const Vec& theta, std::size_t len,
                Jet& out) const override;
  double radius_for(double eps) const override { return base_->radius_for(eps) / l_; }

 private:
  Vec mul(const Vec& x) const {
    Vec y = x;
    for (int i = 0; i < dim(); ++i) y[i] *= l_;
    return y;
  }
  FieldPtr base_;
  double l_;
};

/// a f + b g on a shared dimension.
class SumField final : public ScalarField {
 public:
  SumField(double a, FieldPtr f, double b, FieldPtr g)
      : a_(a), b_(b), f_(std::move(f)), g_(std::move(g)) {}
  int dim() const override { return f_->dim(); }
  double value(const Vec& x) const override {
    return a_ * f_->value(x) + b_ * g_->value(x);
  }
  bool line_jet(const Vec& x, const Vec& theta, std::size_t len,
                Jet& out) const override;
  double radius_for(double eps) const override {
    double sc = std::fabs(a_) + std::fabs(b_) + 1e-300;
    return std::max(f_->radius_for(eps / sc), g_->radius_for(eps / sc));
  }
  std::vector<double> kink_radii() const override;

 private:
  double a_, b_;
  FieldPtr f_, g_;
};

/// Periodic-free sampled field on a uniform grid over [-L/2, L/2)^N with
/// per-axis cubic interpolation; zero outside the extent.
class SampledGridField final : public ScalarField {
 public:
  SampledGridField(int N, double extent, int points_per_axis,
                   std::vector<double> samples);
  int dim() const override { return N_; }
  double value(const Vec& x) const override;
  double radius_for(double) const override;
  bool smooth() const override { return false; }
  double spacing() const { return L_ / M_; }
  double extent() const { return L_; }

 private:
  int N_;
  double L_;
  int M_;
  std::vector<double> data_;
};

/// Parses the CLI field mini-grammar: name[:param[:param...]].
/// Known names: gaussian, bump[:R], annulus:a:b[:amp], polybump[:R],
/// gaussbump[:R].
FieldPtr parse_field(const std::string& spec, int N);

}  // namespace hyperfrac

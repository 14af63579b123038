#include "hyperfrac/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>

namespace hyperfrac {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& plan_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<std::complex<double>> dft(const UniformGrid& g, int direction) {
  const std::size_t n = g.total();
  std::vector<std::complex<double>> in(n), out(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = g.samples[i];
  int dims[3] = {g.M, g.M, g.M};
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft(g.N, dims, reinterpret_cast<fftw_complex*>(in.data()),
                         reinterpret_cast<fftw_complex*>(out.data()), direction,
                         FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<std::complex<double>> dft_complex(std::vector<std::complex<double>> in,
                                              int N, int M, int direction) {
  std::vector<std::complex<double>> out(in.size());
  int dims[3] = {M, M, M};
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft(N, dims, reinterpret_cast<fftw_complex*>(in.data()),
                         reinterpret_cast<fftw_complex*>(out.data()), direction,
                         FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

double freq_norm_sq(const UniformGrid& g, std::size_t flat) {
  double acc = 0.0;
  std::size_t rem = flat;
  for (int d = g.N; d-- > 0;) {
    int k = int(rem % std::size_t(g.M));
    rem /= std::size_t(g.M);
    if (k > g.M / 2) k -= g.M;
    double xi = 2.0 * kPi * k / g.L;
    acc += xi * xi;
  }
  return acc;
}

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

}  // namespace

std::size_t UniformGrid::total() const {
  std::size_t t = 1;
  for (int d = 0; d < N; ++d) t *= std::size_t(M);
  return t;
}

void UniformGrid::validate() const {
  if (N < 1 || N > 3) throw std::invalid_argument("UniformGrid: N in 1..3");
  if (!power_of_two(M) || M < 32)
    throw std::invalid_argument("UniformGrid: M must be a power of two >= 32");
  if (L <= 0.0) throw std::invalid_argument("UniformGrid: positive extent required");
  if (samples.size() != total())
    throw std::invalid_argument("UniformGrid: sample count mismatch");
}

UniformGrid sample_field(const ScalarField& f, int N, double L, int M) {
  UniformGrid g{N, L, M, {}};
  g.samples.resize(g.total());
  Vec x{0.0, 0.0, 0.0};
  std::size_t flat = 0;
  int idx[3] = {0, 0, 0};
  const std::size_t n = g.total();
  for (flat = 0; flat < n; ++flat) {
    std::size_t rem = flat;
    for (int d = N; d-- > 0;) {
      idx[d] = int(rem % std::size_t(M));
      rem /= std::size_t(M);
    }
    for (int d = 0; d < N; ++d) x[d] = g.coord(idx[d]);
    g.samples[flat] = f.value(x);
  }
  g.validate();
  return g;
}

SymbolResult symbol_apply(const UniformGrid& g, double s) {
  g.validate();
  if (!(s > 0.0)) throw std::invalid_argument("symbol_apply: s > 0 required");
  SymbolResult res;

  // padding check: mass outside the central half of the extent
  double outer = 0.0, total_mass = 0.0;
  const std::size_t n = g.total();
  for (std::size_t flat = 0; flat < n; ++flat) {
    double a = std::fabs(g.samples[flat]);
    total_mass += a;
    std::size_t rem = flat;
    bool is_outer = false;
    for (int d = g.N; d-- > 0;) {
      int k = int(rem % std::size_t(g.M));
      rem /= std::size_t(g.M);
      double x = g.coord(k);
      if (std::fabs(x) > 0.25 * g.L) is_outer = true;
    }
    if (is_outer) outer += a;
  }
  res.outer_mass_fraction = total_mass > 0.0 ? outer / total_mass : 0.0;
  if (res.outer_mass_fraction > 1e-8)
    res.warnings.push_back("field mass in padding region exceeds 1e-8 of total");

  std::vector<std::complex<double>> hat = dft(g, FFTW_FORWARD);
  for (std::size_t flat = 0; flat < n; ++flat) {
    double q = freq_norm_sq(g, flat);
    hat[flat] *= q > 0.0 ? std::pow(q, s) : 0.0;
  }
  std::vector<std::complex<double>> back =
      dft_complex(std::move(hat), g.N, g.M, FFTW_BACKWARD);

  res.grid = g;
  const double inv = 1.0 / double(n);
  for (std::size_t flat = 0; flat < n; ++flat) {
    res.grid.samples[flat] = back[flat].real() * inv;
    res.imag_residue =
        std::max(res.imag_residue, std::fabs(back[flat].imag()) * inv);
  }
  if (res.imag_residue > 1e-10)
    res.warnings.push_back("imaginary residue above 1e-10");
  return res;
}

double fourier_energy(const UniformGrid& u, const UniformGrid& v, double s) {
  u.validate();
  v.validate();
  if (u.N != v.N || u.M != v.M || u.L != v.L)
    throw std::invalid_argument("fourier_energy: grid geometry mismatch");
  if (s < 0.0) throw std::invalid_argument("fourier_energy: s >= 0 required");
  std::vector<std::complex<double>> hu = dft(u, FFTW_FORWARD);
  std::vector<std::complex<double>> hv = dft(v, FFTW_FORWARD);
  const std::size_t n = u.total();
  double acc = 0.0;
  for (std::size_t flat = 0; flat < n; ++flat) {
    double q = freq_norm_sq(u, flat);
    double sym = q > 0.0 ? std::pow(q, s) : (s == 0.0 ? 1.0 : 0.0);
    acc += sym * (hu[flat] * std::conj(hv[flat])).real();
  }
  // F u(xi_k) ~ (2 pi)^{-N/2} h^N DFT_k and d xi = (2 pi / L)^N per mode
  double scale = 1.0;
  for (int d = 0; d < u.N; ++d) scale *= u.L / (double(u.M) * double(u.M));
  return acc * scale;
}

double grid_inner(const UniformGrid& u, const UniformGrid& v) {
  u.validate();
  v.validate();
  if (u.N != v.N || u.M != v.M || u.L != v.L)
    throw std::invalid_argument("grid_inner: grid geometry mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.samples.size(); ++i)
    acc += u.samples[i] * v.samples[i];
  double h = u.spacing();
  double cell = 1.0;
  for (int d = 0; d < u.N; ++d) cell *= h;
  return acc * cell;
}

}  // namespace hyperfrac

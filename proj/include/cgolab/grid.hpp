#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace cgolab {

using cplx = std::complex<double>;

/// Periodic grid on [0, L)^n with N samples per axis. The frequency lattice
/// is (2pi/L) * m with integer m in [-N/2, N/2) per axis, stored in
/// FFT-natural order (0, 1, ..., N/2-1, -N/2, ..., -1). Linear indices are
/// row-major with axis 0 slowest.
class PeriodicGrid {
 public:
  PeriodicGrid(int dim, int samples, double length);

  int dim() const { return dim_; }
  int samples() const { return samples_; }
  double length() const { return length_; }
  std::size_t num_points() const { return num_points_; }

  /// Frequency cell d0 = 2pi/L.
  double cell() const { return cell_; }
  /// Nyquist bound pi*N/L; every |xi| component is strictly below it.
  double nyquist() const { return cell_ * samples_ / 2.0; }
  /// Physical spacing L/N.
  double spacing() const { return length_ / samples_; }
  double volume() const;

  /// Signed integer frequency component m_axis in [-N/2, N/2).
  int freq_int(std::size_t index, int axis) const;
  /// xi = d0 * m; writes dim() components.
  void frequency(std::size_t index, double* out) const;
  /// |m|^2 as an integer.
  std::int64_t freq_int_sq(std::size_t index) const;
  /// Physical point coordinates; writes dim() components.
  void point(std::size_t index, double* out) const;

  /// Linear index of an integer frequency vector (components in [-N/2, N/2)).
  std::size_t index_of_freq(std::span<const int> m) const;

  bool operator==(const PeriodicGrid& o) const {
    return dim_ == o.dim_ && samples_ == o.samples_ && length_ == o.length_;
  }

 private:
  int dim_;
  int samples_;
  double length_;
  double cell_;
  std::size_t num_points_;
};

/// Complex scalar samples in physical space, one per grid point.
struct Field {
  PeriodicGrid grid;
  std::vector<cplx> values;

  explicit Field(const PeriodicGrid& g) : grid(g), values(g.num_points()) {}
  Field(const PeriodicGrid& g, std::vector<cplx> v);
};

/// Coefficients on the frequency lattice. Convention (frozen):
///   coeff(k) = (1/N^n) * sum_x f(x) e^{-i k.x},   f(x) = sum_k coeff(k) e^{i k.x}.
struct SpectralField {
  PeriodicGrid grid;
  std::vector<cplx> coeffs;

  explicit SpectralField(const PeriodicGrid& g) : grid(g), coeffs(g.num_points()) {}
  SpectralField(const PeriodicGrid& g, std::vector<cplx> c);
};

SpectralField forward_transform(const Field& f);
Field inverse_transform(const SpectralField& g);

/// Riemann-sum L^p norm, (L/N)^{n/p} (sum |f|^p)^{1/p}; p = inf gives max modulus.
double lp_norm(const Field& f, double p);

/// Plancherel l2 of coefficients with the L^{n/2} volume factor, equal to the
/// physical L2 norm.
double spectral_l2(const SpectralField& g);

/// Pointwise product through 3/2-rule zero-padded transforms, truncated back
/// to the grid; the retained window is alias-free for any inputs.
Field dealiased_product(const Field& f, const Field& g);
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);

/// Plain pointwise product (diagnostics only).
Field pointwise_product(const Field& f, const Field& g);

// spectral calculus
SpectralField derivative(const SpectralField& g, int axis);
SpectralField laplacian(const SpectralField& g);

/// Coefficient embedding into a finer lattice of M >= N samples per axis
/// (same box, same frequencies).
std::vector<cplx> pad_coeffs(const SpectralField& g, int padded_samples);

std::complex<double> coefficient(const SpectralField& g, std::span<const int> m);

namespace detail {
/// Unnormalized multi-dimensional c2c DFT, any size; sign -1 forward.
void raw_fft(int dim, int samples, const cplx* in, cplx* out, int sign);
}  // namespace detail

}  // namespace cgolab

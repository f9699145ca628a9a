#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cgolab/grid.hpp"

namespace cgolab {

/// Dyadic integer 2^k, k >= 0. Index 1 stands for the collapsed band of
/// everything at or below the unit scale.
class Dyadic {
 public:
  explicit Dyadic(std::uint64_t v);
  std::uint64_t value() const { return v_; }
  static bool valid(std::uint64_t v) { return v > 0 && (v & (v - 1)) == 0; }

 private:
  std::uint64_t v_;
};

/// Null phase vector zeta = re + i*im with |re| = |im| = tau, re.im = 0.
/// The standard frame is zeta = tau(e1 - i e2); tilted variants carry a
/// general imaginary part. The characteristic set is the codimension-2
/// sphere {xi . re = 0, |xi + im| = tau}.
class PhaseVector {
 public:
  static PhaseVector standard(double tau, std::span<const double> e1,
                              std::span<const double> e2);
  static PhaseVector from_parts(std::vector<double> re, std::vector<double> im);

  int dim() const { return static_cast<int>(re_.size()); }
  double tau() const { return tau_; }
  const std::vector<double>& real_part() const { return re_; }
  const std::vector<double>& imag_part() const { return im_; }
  std::vector<cplx> components() const;

  /// p_zeta(xi) = -|xi|^2 + 2i zeta.xi
  cplx symbol(std::span<const double> xi) const;
  double symbol_abs(std::span<const double> xi) const;

  /// Exact Euclidean distance from xi to the characteristic sphere.
  double modulation(std::span<const double> xi) const;

  /// Distance |zeta - other| of the stacked complex vectors.
  double distance(const PhaseVector& other) const;

 private:
  PhaseVector(std::vector<double> re, std::vector<double> im, double tau)
      : re_(std::move(re)), im_(std::move(im)), tau_(tau) {}

  std::vector<double> re_, im_;
  double tau_;
};

/// Floored weight max(|p_zeta(xi)|, tau * d0 * floor_cells); keeps the
/// homogeneous calculus finite on lattice points at the characteristic set.
double symbol_weight(const PhaseVector& z, std::span<const double> xi, double d0,
                     double floor_cells = 1.0);

enum class QBand { exact, at_most, low, high };

/// Sharp modulation-band projection. Bands live in cell units of d0:
/// band 1 keeps modulation <= d0, band lambda keeps (lambda/2, lambda]*d0.
/// low is the union of bands with lambda*d0 <= tau/8, high the complement.
SpectralField q_projection(const SpectralField& f, const PhaseVector& z, QBand band,
                           Dyadic lambda = Dyadic(1));

/// Frozen smooth dyadic bump: support [1/2, 2], telescoping-normalized so
/// that sum_k chi(2^-k rho) == 1 for rho > 0.
double chi_dyadic(double rho);
/// chi_lambda(rho) with the collapsed lambda = 1 piece (== 1 near zero).
double chi_piece(double rho, std::uint64_t lambda);
/// sum of chi pieces at or below lambda.
double chi_cumulative(double rho, std::uint64_t lambda);

/// Littlewood-Paley projection by chi(|xi| / (lambda d0)).
SpectralField lp_projection(const SpectralField& f, Dyadic lambda);

/// Directional projection by chi(|xi.omega| / (lambda d0)); cumulative keeps
/// everything at or below lambda.
SpectralField directional_projection(const SpectralField& f, std::span<const double> omega,
                                     Dyadic lambda, bool cumulative);

}  // namespace cgolab

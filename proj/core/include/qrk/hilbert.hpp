#pragma once

// Pure states, orthonormal contexts and Born probabilities over C^d.
//
// Rays, not vectors, are the physical objects: nothing here canonicalizes a
// global phase, and equality of states is tested with |<u|v>| = 1.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qrk {

using Complex = std::complex<double>;

/// Orthogonality and normalization tolerance.
inline constexpr double kTolerance = 1e-9;
/// Magnitude below which a raw vector counts as zero.
inline constexpr double kZeroTolerance = 1e-12;

/// Unit-norm amplitude vector. Only constructible through normalize().
class Ket {
 public:
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  /// Same ray multiplied by a unit-modulus phase.
  Ket with_phase(double radians) const;

 private:
  explicit Ket(std::vector<Complex> amps) : amps_(std::move(amps)) {}
  friend Ket normalize(std::span<const Complex> v);

  std::vector<Complex> amps_;
};

/// Scales `v` to unit norm. Throws ZeroVector when every |v_i| < 1e-12.
Ket normalize(std::span<const Complex> v);
Ket normalize(std::initializer_list<Complex> v);
Ket normalize(std::span<const double> v);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const Ket& u, const Ket& v);

/// |<post|pre>|^2 clamped to [0, 1].
double born(const Ket& pre, const Ket& post);

bool collinear(const Ket& u, const Ket& v, double tol = kTolerance);
bool orthogonal(const Ket& u, const Ket& v, double tol = kTolerance);

/// An orthonormal basis of C^d: one measurement context.
class ContextBasis {
 public:
  /// Throws NotOrthonormal unless the Gram matrix is the identity within `tol`,
  /// DimensionMismatch unless there are exactly dim vectors of dimension dim.
  explicit ContextBasis(std::vector<Ket> vectors, double tol = kTolerance);

  static ContextBasis standard(std::size_t dim);

  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::vector<Ket>& vectors() const noexcept { return vectors_; }
  const Ket& operator[](std::size_t i) const { return vectors_[i]; }

  /// Treats the basis vectors as the columns of a unitary and applies it: sum_i k_i e_i.
  Ket apply(const Ket& k) const;

 private:
  std::vector<Ket> vectors_;
};

/// {(cos phi, sin phi), (-sin phi, cos phi)}. Throws NonFiniteAngle.
ContextBasis tilt_basis(double phi);

/// born(pre, e_i) for every basis vector, in basis order.
std::vector<double> context_probabilities(const Ket& pre, const ContextBasis& ctx);

}  // namespace qrk

#include "qrk/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qrk/errors.hpp"

namespace qrk {

namespace {

void require_same_dim(const Ket& u, const Ket& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
  }
}

}  // namespace

Ket normalize(std::span<const Complex> v) {
  if (v.empty()) throw Error(ErrorCode::ZeroVector, "empty vector");
  bool nonzero = false;
  double norm2 = 0.0;
  for (const auto& c : v) {
    nonzero = nonzero || std::abs(c) >= kZeroTolerance;
    norm2 += std::norm(c);
  }
  if (!nonzero) throw Error(ErrorCode::ZeroVector, "all components below 1e-12");
  const double scale = 1.0 / std::sqrt(norm2);
  std::vector<Complex> amps(v.begin(), v.end());
  for (auto& c : amps) c *= scale;
  return Ket(std::move(amps));
}

Ket normalize(std::initializer_list<Complex> v) {
  return normalize(std::span<const Complex>(v.begin(), v.size()));
}

Ket normalize(std::span<const double> v) {
  std::vector<Complex> c(v.begin(), v.end());
  return normalize(std::span<const Complex>(c));
}

Ket Ket::with_phase(double radians) const {
  const Complex phase = std::polar(1.0, radians);
  std::vector<Complex> amps = amps_;
  for (auto& c : amps) c *= phase;
  return Ket(std::move(amps));
}

Complex inner(const Ket& u, const Ket& v) {
  require_same_dim(u, v);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double born(const Ket& pre, const Ket& post) {
  return std::clamp(std::norm(inner(post, pre)), 0.0, 1.0);
}

bool collinear(const Ket& u, const Ket& v, double tol) {
  return std::abs(1.0 - std::abs(inner(u, v))) <= tol;
}

bool orthogonal(const Ket& u, const Ket& v, double tol) {
  return std::abs(inner(u, v)) <= tol;
}

ContextBasis::ContextBasis(std::vector<Ket> vectors, double tol) : vectors_(std::move(vectors)) {
  const std::size_t d = vectors_.size();
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "empty basis");
  for (std::size_t i = 0; i < d; ++i) {
    if (vectors_[i].dim() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "basis of " + std::to_string(d) + " vectors in dimension " +
                      std::to_string(vectors_[i].dim()));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const Complex g = inner(vectors_[i], vectors_[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > tol) {
        throw Error(ErrorCode::NotOrthonormal,
                    "Gram entry (" + std::to_string(i) + "," + std::to_string(j) + ") off by " +
                        std::to_string(std::abs(g - expected)));
      }
    }
  }
}

ContextBasis ContextBasis::standard(std::size_t dim) {
  std::vector<Ket> vs;
  vs.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Complex> e(dim);
    e[i] = 1.0;
    vs.push_back(normalize(std::span<const Complex>(e)));
  }
  return ContextBasis(std::move(vs));
}

Ket ContextBasis::apply(const Ket& k) const {
  if (k.dim() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "ket does not match basis dimension");
  }
  std::vector<Complex> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t r = 0; r < dim(); ++r) out[r] += k[i] * vectors_[i][r];
  }
  return normalize(std::span<const Complex>(out));
}

ContextBasis tilt_basis(double phi) {
  if (!std::isfinite(phi)) throw Error(ErrorCode::NonFiniteAngle, "tilt angle must be finite");
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return ContextBasis({normalize({c, s}), normalize({-s, c})}, 1e-12);
}

std::vector<double> context_probabilities(const Ket& pre, const ContextBasis& ctx) {
  if (pre.dim() != ctx.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and context dimensions differ");
  }
  std::vector<double> p;
  p.reserve(ctx.dim());
  for (const auto& e : ctx.vectors()) p.push_back(born(pre, e));
  return p;
}

}  // namespace qrk

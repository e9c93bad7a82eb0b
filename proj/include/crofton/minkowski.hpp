#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace crofton {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Entrywise validation tolerance for algebraic invariants.
inline constexpr double kEpsAlg = 1e-9;

/// Dead zone for the wall side predicate.
inline constexpr double kEpsSide = 1e-12;

/// Supported runtime dimensions of the hyperbolic space.
inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

/// Signature (n,1) bilinear form <x,y> = -x0*y0 + x1*y1 + ... + xn*yn on
/// raw coordinate vectors. Callers guarantee equal sizes.
inline double inner_form(const Vec& x, const Vec& y) {
  double s = -x[0] * y[0];
  for (Eigen::Index i = 1; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// arccosh with the argument clamped to [1, inf).
///
/// Branches: log1p-based near 1 where the naive form cancels, the direct
/// logarithm in the generic range, and log(2z) once (z-1)(z+1) would
/// overflow (z > 1e150, i.e. separations beyond ~350).
inline double acosh_stable(double z) {
  if (z < 1.0) z = 1.0;
  if (z < 1.25) {
    const double w = z - 1.0;
    return std::log1p(w + std::sqrt(2.0 * w + w * w));
  }
  if (z > 1e150) {
    return std::log(z) + std::log(2.0);
  }
  return std::log(z + std::sqrt((z - 1.0) * (z + 1.0)));
}

/// An (n+1)-tuple of reals carrying the signature (n,1) form, with the
/// timelike coordinate at index 0. Entries must be finite and n >= 2.
class MinkowskiVector {
 public:
  explicit MinkowskiVector(Vec coords) : coords_(std::move(coords)) {
    if (coords_.size() < kMinDim + 1) {
      throw std::invalid_argument("MinkowskiVector: need at least 3 coordinates");
    }
    if (!coords_.allFinite()) {
      throw std::invalid_argument("MinkowskiVector: non-finite coordinate");
    }
  }

  /// Spatial dimension n (one less than the coordinate count).
  int dim() const { return static_cast<int>(coords_.size()) - 1; }

  const Vec& coords() const { return coords_; }
  double operator[](Eigen::Index i) const { return coords_[i]; }

 private:
  Vec coords_;
};

inline double minkowski_inner(const MinkowskiVector& x, const MinkowskiVector& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("minkowski_inner: dimension mismatch (" +
                                std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()) + ")");
  }
  return inner_form(x.coords(), y.coords());
}

}  // namespace crofton

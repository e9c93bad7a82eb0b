#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "crofton/minkowski.hpp"

namespace crofton {

/// Coincidence threshold for operations that need two distinct points.
inline constexpr double kEpsCoincident = 1e-12;

/// A point on the upper sheet of the hyperboloid <x,x> = -1, x0 > 0.
///
/// The unit-norm check is taken relative to max(1, x0^2): beyond x0 ~ 1e4
/// the quadratic form cancels to the roundoff floor in double precision,
/// so an absolute tolerance would reject perfectly good far-out points.
class HyperbolicPoint {
 public:
  explicit HyperbolicPoint(MinkowskiVector v) : v_(std::move(v)) {
    const Vec& x = v_.coords();
    if (x[0] < 1.0 - kEpsAlg) {
      throw std::invalid_argument("HyperbolicPoint: not on the upper sheet");
    }
    const double q = inner_form(x, x);
    const double tol = kEpsAlg * std::max(1.0, x[0] * x[0]);
    if (std::abs(q + 1.0) > tol) {
      throw std::invalid_argument("HyperbolicPoint: <x,x> != -1");
    }
  }

  int dim() const { return v_.dim(); }
  const MinkowskiVector& vector() const { return v_; }
  const Vec& coords() const { return v_.coords(); }

 private:
  MinkowskiVector v_;
};

/// The basepoint o = (1, 0, ..., 0).
inline HyperbolicPoint basepoint(int n) {
  Vec o = Vec::Zero(n + 1);
  o[0] = 1.0;
  return HyperbolicPoint(MinkowskiVector(std::move(o)));
}

/// Rescale a raw vector onto the sheet when the drift is small; leave the
/// coordinates alone when cancellation has already flattened <x,x> (far
/// points), where no correction is recoverable.
inline void renormalize_to_sheet(Vec& x) {
  const double q = -inner_form(x, x);
  if (q > 0.0 && std::abs(q - 1.0) <= 0.25) {
    x /= std::sqrt(q);
  }
  if (x[0] < 1.0 && x[0] >= 1.0 - 1e-12) x[0] = 1.0;
}

inline double hyperbolic_distance(const HyperbolicPoint& x, const HyperbolicPoint& y) {
  return acosh_stable(-minkowski_inner(x.vector(), y.vector()));
}

/// Point at arclength fraction s in [0,1] along the geodesic from x to y:
/// gamma(sigma) = cosh(sigma) x + sinh(sigma) v, v the unit tangent at x.
inline HyperbolicPoint geodesic_point(const HyperbolicPoint& x,
                                      const HyperbolicPoint& y, double s) {
  const double d = hyperbolic_distance(x, y);
  if (d <= kEpsCoincident) {
    throw std::invalid_argument("geodesic_point: coincident endpoints");
  }
  const Vec& xv = x.coords();
  const Vec& yv = y.coords();
  Vec w = yv + inner_form(xv, yv) * xv;
  const double wn = std::sqrt(inner_form(w, w));  // = sinh(d) > 0
  w /= wn;
  const double sigma = s * d;
  Vec g = std::cosh(sigma) * xv + std::sinh(sigma) * w;
  renormalize_to_sheet(g);
  return HyperbolicPoint(MinkowskiVector(std::move(g)));
}

}  // namespace crofton

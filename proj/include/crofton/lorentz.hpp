#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "crofton/hyperboloid.hpp"
#include "crofton/minkowski.hpp"
#include "crofton/rng.hpp"

namespace crofton {

/// diag(-1, 1, ..., 1) of size n+1.
inline Mat form_matrix(int n) {
  Mat j = Mat::Identity(n + 1, n + 1);
  j(0, 0) = -1.0;
  return j;
}

/// Max deviation of L^T J L from J, scaled per entry by the product of the
/// column magnitudes so that large boosts are judged against what double
/// precision can actually represent.
inline double lorentz_defect(const Mat& m) {
  const Eigen::Index d = m.rows();
  Vec colmax(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    colmax[i] = std::max(1.0, m.col(i).cwiseAbs().maxCoeff());
  }
  double worst = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i; j < d; ++j) {
      double g = -m(0, i) * m(0, j);
      for (Eigen::Index k = 1; k < d; ++k) g += m(k, i) * m(k, j);
      const double target = (i != j) ? 0.0 : (i == 0 ? -1.0 : 1.0);
      const double dev = std::abs(g - target) / (colmax[i] * colmax[j]);
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

/// One Minkowski Gram-Schmidt pass over the columns: column 0 is
/// normalized timelike (<c,c> = -1, positive time coordinate), the rest
/// spacelike (+1), each orthogonalized against all previous columns.
inline void minkowski_orthonormalize(Mat& m) {
  const Eigen::Index d = m.rows();
  for (Eigen::Index j = 0; j < d; ++j) {
    Vec c = m.col(j);
    for (Eigen::Index k = 0; k < j; ++k) {
      const Vec ck = m.col(k);
      const double denom = (k == 0) ? -1.0 : 1.0;
      c -= (inner_form(c, ck) / denom) * ck;
    }
    const double q = inner_form(c, c);
    if (j == 0) {
      if (q >= 0.0) throw std::invalid_argument("orthonormalize: column 0 not timelike");
      c /= std::sqrt(-q);
      if (c[0] < 0.0) c = -c;
    } else {
      if (q <= 0.0) throw std::invalid_argument("orthonormalize: column not spacelike");
      c /= std::sqrt(q);
    }
    m.col(j) = c;
  }
}

/// An orthochronous element of O(n,1): preserves the Minkowski form and
/// the upper sheet. Construction applies one Gram-Schmidt repair pass when
/// the form defect exceeds kEpsAlg/10 and rejects matrices that remain bad.
class LorentzTransform {
 public:
  explicit LorentzTransform(Mat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < kMinDim + 1) {
      throw std::invalid_argument("LorentzTransform: bad shape");
    }
    if (!m_.allFinite()) {
      throw std::invalid_argument("LorentzTransform: non-finite entry");
    }
    if (m_(0, 0) <= 0.0) {
      throw std::invalid_argument("LorentzTransform: not orthochronous");
    }
    double defect = lorentz_defect(m_);
    if (defect > kEpsAlg / 10.0) {
      minkowski_orthonormalize(m_);
      defect = lorentz_defect(m_);
    }
    if (defect > kEpsAlg) {
      throw std::invalid_argument("LorentzTransform: form not preserved");
    }
  }

  int dim() const { return static_cast<int>(m_.rows()) - 1; }
  const Mat& matrix() const { return m_; }

 private:
  Mat m_;
};

inline LorentzTransform lorentz_identity(int n) {
  return LorentzTransform(Mat::Identity(n + 1, n + 1));
}

/// a_t along a spatial axis in 1..n: hyperbolic rotation of the (0,axis)
/// plane, a_t . o = (cosh t, ..., sinh t at the axis slot, ...).
inline LorentzTransform boost(int n, double t, int axis = 1) {
  if (axis < 1 || axis > n) {
    throw std::invalid_argument("boost: axis out of range");
  }
  if (std::abs(t) > 709.0) {
    throw std::domain_error("boost: |t| > 709 overflows double precision");
  }
  Mat m = Mat::Identity(n + 1, n + 1);
  const double c = std::cosh(t);
  const double s = std::sinh(t);
  m(0, 0) = c;
  m(axis, axis) = c;
  m(0, axis) = s;
  m(axis, 0) = s;
  return LorentzTransform(std::move(m));
}

/// Lorentz inverse J L^T J (no linear solve needed).
inline LorentzTransform lorentz_inverse(const LorentzTransform& g) {
  const Mat& m = g.matrix();
  Mat inv = m.transpose();
  inv.row(0) *= -1.0;
  inv.col(0) *= -1.0;
  return LorentzTransform(std::move(inv));
}

inline LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("compose: dimension mismatch");
  return LorentzTransform(a.matrix() * b.matrix());
}

inline LorentzTransform operator*(const LorentzTransform& a, const LorentzTransform& b) {
  return compose(a, b);
}

inline HyperbolicPoint apply_point(const LorentzTransform& g, const HyperbolicPoint& x) {
  if (g.dim() != x.dim()) throw std::invalid_argument("apply_point: dimension mismatch");
  Vec y = g.matrix() * x.coords();
  renormalize_to_sheet(y);
  return HyperbolicPoint(MinkowskiVector(std::move(y)));
}

inline HyperbolicPoint operator*(const LorentzTransform& g, const HyperbolicPoint& x) {
  return apply_point(g, x);
}

/// Lorentz frame whose column 0 is the given point and, when tangent is
/// non-null, whose column 1 is that unit tangent; remaining columns are
/// completed from the standard basis by pivoted Minkowski Gram-Schmidt.
/// Maps o to the point, so its inverse moves the point to o.
inline LorentzTransform frame_at(const HyperbolicPoint& x, const Vec* tangent = nullptr) {
  const int n = x.dim();
  Mat f(n + 1, n + 1);
  f.col(0) = x.coords();
  Eigen::Index next = 1;
  if (tangent != nullptr) {
    f.col(next++) = *tangent;
  }
  // Pivoted completion: greedily take the standard basis vector with the
  // largest residual after orthogonalization against the fixed columns.
  std::vector<bool> used(n + 1, false);
  while (next <= n) {
    double best = -1.0;
    Vec best_res;
    int best_k = -1;
    for (int k = 0; k <= n; ++k) {
      if (used[k]) continue;
      Vec r = Vec::Zero(n + 1);
      r[k] = 1.0;
      for (Eigen::Index j = 0; j < next; ++j) {
        const Vec cj = f.col(j);
        const double denom = (j == 0) ? -1.0 : 1.0;
        r -= (inner_form(r, cj) / denom) * cj;
      }
      const double q = inner_form(r, r);
      if (q > best) {
        best = q;
        best_res = r;
        best_k = k;
      }
    }
    if (best <= 0.0) throw std::runtime_error("frame_at: degenerate completion");
    used[best_k] = true;
    f.col(next++) = best_res / std::sqrt(best);
  }
  return LorentzTransform(std::move(f));
}

/// The canonical isometry taking x to the basepoint o.
inline LorentzTransform transform_to_origin(const HyperbolicPoint& x) {
  return lorentz_inverse(frame_at(x));
}

/// Haar-random rotation of the spatial block (QR of a Gaussian matrix with
/// the R-diagonal sign fix, determinant corrected to +1).
inline LorentzTransform random_rotation(int n, Philox& rng) {
  Mat a(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) a(i, j) = rng.next_normal();
  }
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(n - 1) *= -1.0;
  Mat m = Mat::Identity(n + 1, n + 1);
  m.block(1, 1, n, n) = q;
  return LorentzTransform(std::move(m));
}

/// R1 * boost(t,1) * R2 with Haar rotations and t uniform on
/// [-t_range, t_range]. Deterministic in the generator state.
inline LorentzTransform random_lorentz(int n, Philox& rng, double t_range = 3.0) {
  const LorentzTransform r1 = random_rotation(n, rng);
  const double t = (2.0 * rng.next_double() - 1.0) * t_range;
  const LorentzTransform r2 = random_rotation(n, rng);
  return r1 * boost(n, t) * r2;
}

/// A Haar-random point at controlled distance from o: R * boost(t,1) * o.
inline HyperbolicPoint random_point(int n, double t, Philox& rng) {
  const LorentzTransform r = random_rotation(n, rng);
  return (r * boost(n, t)) * basepoint(n);
}

}  // namespace crofton

#ifndef INVGEN_INVARIANT_PLANE_HPP
#define INVGEN_INVARIANT_PLANE_HPP

#include <Eigen/Core>
#include <complex>

namespace invgen {

/// A 2-dimensional invariant subspace of a real invertible matrix.
struct InvariantPlane {
  Eigen::MatrixXd basis;  // n x 2, linearly independent columns
  /// True when the plane came from a non-real eigenvalue a + b i via the
  /// real/imaginary parts of its eigenvector; false for the all-real-spectrum
  /// branch (leading Schur vectors).
  bool from_complex_pair = false;
  std::complex<double> eigenvalue;  // the eigenvalue that produced the plane
};

/// Every real invertible n x n matrix (n >= 2) fixes a plane: a non-real
/// eigenvalue a + b i with eigenvector w = u + i v gives the invariant span
/// of (u, v), since g u = a u - b v and g v = b u + a v; with an all-real
/// spectrum the first two Schur vectors span an invariant plane.
InvariantPlane invariant_plane(const Eigen::MatrixXd& g);

/// Max-norm of (I - P) g B where P projects onto the column span of B;
/// zero iff the span is g-invariant.
double invariant_plane_residual(const Eigen::MatrixXd& g, const Eigen::MatrixXd& basis);

}  // namespace invgen

#endif  // INVGEN_INVARIANT_PLANE_HPP

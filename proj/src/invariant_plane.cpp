#include "invgen/invariant_plane.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "invgen/errors.hpp"

namespace invgen {

InvariantPlane invariant_plane(const Eigen::MatrixXd& g) {
  const auto n = g.rows();
  if (n != g.cols()) throw Error(Errc::InvalidArgument, "matrix must be square");
  if (n < 2) throw Error(Errc::InvalidArgument, "need dimension >= 2");
  if (g.fullPivLu().rank() < n)
    throw Error(Errc::NotInvertible, "matrix must be invertible");

  const double scale = g.cwiseAbs().maxCoeff();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(g);
  const auto& values = solver.eigenvalues();

  // Prefer the eigenvalue with the largest imaginary part; a genuinely
  // non-real one yields the u, v construction.
  int best = 0;
  for (int i = 1; i < values.size(); ++i)
    if (std::abs(values[i].imag()) > std::abs(values[best].imag())) best = i;

  InvariantPlane plane;
  if (std::abs(values[best].imag()) > 1e-9 * std::max(scale, 1.0)) {
    Eigen::VectorXcd w = solver.eigenvectors().col(best);
    plane.basis.resize(n, 2);
    plane.basis.col(0) = w.real();
    plane.basis.col(1) = w.imag();
    plane.from_complex_pair = true;
    plane.eigenvalue = values[best];
    return plane;
  }

  // All-real spectrum: the leading two Schur vectors span an invariant plane
  // (g Q = Q T with T upper quasi-triangular).
  Eigen::RealSchur<Eigen::MatrixXd> schur(g);
  plane.basis = schur.matrixU().leftCols(2);
  plane.from_complex_pair = false;
  plane.eigenvalue = {schur.matrixT()(0, 0), 0.0};
  return plane;
}

double invariant_plane_residual(const Eigen::MatrixXd& g,
                                const Eigen::MatrixXd& basis) {
  Eigen::MatrixXd image = g * basis;
  // least-squares projection of the image back onto the span
  Eigen::MatrixXd coeffs = basis.colPivHouseholderQr().solve(image);
  return (image - basis * coeffs).cwiseAbs().maxCoeff();
}

}  // namespace invgen

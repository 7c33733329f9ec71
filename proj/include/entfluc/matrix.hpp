// Dense complex matrix carrier and the two spectral primitives everything
// else is built on: Hermitian eigendecomposition and the singular value
// decomposition. Backed by Eigen.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "entfluc/errors.hpp"

namespace entfluc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Default tolerance for the Hermiticity predicate. Inputs are analytically
// Hermitian; the slack absorbs construction round-off.
inline constexpr double kHermitianTol = 1e-10;

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// max_ij |M_ij - conj(M_ji)| <= tol, and M square.
inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

struct EigenSystem {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, same order
};

/// Full eigendecomposition of a Hermitian matrix. Eigenvalues come back
/// ascending; callers needing another order re-sort themselves. Eigenvectors
/// of degenerate eigenvalues are an arbitrary orthonormal basis of the
/// invariant subspace.
inline EigenSystem hermitian_eigensystem(const ComplexMatrix& m,
                                         double tol = kHermitianTol) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("hermitian_eigensystem: matrix is " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
  }
  if (!is_hermitian(m, tol)) {
    throw NotHermitian("hermitian_eigensystem: input fails the Hermiticity "
                       "predicate at tolerance " + std::to_string(tol));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigensystem: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

struct SvdResult {
  ComplexMatrix left;          // U, orthonormal columns
  RealVector singular_values;  // descending, nonnegative
  ComplexMatrix right_dagger;  // V^dagger
};

/// Thin SVD A = U diag(s) V^dagger of an arbitrary rectangular matrix.
inline SvdResult svd(const ComplexMatrix& a) {
  Eigen::BDCSVD<ComplexMatrix> solver(a,
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {solver.matrixU(), solver.singularValues(),
          ComplexMatrix(solver.matrixV().adjoint())};
}

}  // namespace entfluc

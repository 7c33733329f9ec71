// Generalized Gell-Mann generators of su(N), Bloch-vector encoding of
// density operators, and the total generator fluctuation.
//
// Basis elements, for 1 <= j < k <= N and 1 <= l <= N-1:
//   u_jk = |j><k| + |k><j|
//   v_jk = -i(|j><k| - |k><j|)
//   w_l  = sqrt(2/(l(l+1))) [ sum_{j<=l} |j><j| - l |l+1><l+1| ]
// ordered as Lambda_1 = u_12, Lambda_2 = v_12, Lambda_3 = w_1,
// Lambda_4 = u_13, ..., Lambda_{N^2-1} = w_{N-1}. For N = 2 these are the
// Pauli matrices, for N = 3 the Gell-Mann matrices.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "entfluc/errors.hpp"
#include "entfluc/matrix.hpp"

namespace entfluc::su_n {

struct GeneratorSet {
  int n = 0;
  std::vector<ComplexMatrix> lambdas;
  std::vector<std::size_t> diagonal_indices;  // positions of w_1..w_{n-1}

  std::size_t count() const { return lambdas.size(); }

  /// w_k for 1 <= k <= n-1.
  const ComplexMatrix& diagonal(int k) const {
    if (k < 1 || k > n - 1) {
      throw OutOfRange("GeneratorSet::diagonal: k = " + std::to_string(k) +
                       " outside [1, " + std::to_string(n - 1) + "]");
    }
    return lambdas[diagonal_indices[static_cast<std::size_t>(k) - 1]];
  }
};

inline GeneratorSet generators(int n) {
  if (n < 2) {
    throw InvalidDimension("su_n::generators: need n >= 2, got " +
                           std::to_string(n));
  }
  GeneratorSet set;
  set.n = n;
  set.lambdas.reserve(static_cast<std::size_t>(n) * n - 1);
  const Complex im(0.0, 1.0);
  for (int k = 2; k <= n; ++k) {
    for (int j = 1; j < k; ++j) {
      ComplexMatrix u = ComplexMatrix::Zero(n, n);
      u(j - 1, k - 1) = 1.0;
      u(k - 1, j - 1) = 1.0;
      set.lambdas.push_back(std::move(u));

      ComplexMatrix v = ComplexMatrix::Zero(n, n);
      v(j - 1, k - 1) = -im;
      v(k - 1, j - 1) = im;
      set.lambdas.push_back(std::move(v));
    }
    const int l = k - 1;
    ComplexMatrix w = ComplexMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) w(j, j) = scale;
    w(l, l) = -scale * l;
    set.diagonal_indices.push_back(set.lambdas.size());
    set.lambdas.push_back(std::move(w));
  }
  return set;
}

/// Rejects operators that are not N x N, Hermitian, unit-trace.
inline void check_density_like(const ComplexMatrix& rho, int n,
                               double tol = kHermitianTol) {
  if (rho.rows() != n || rho.cols() != n) {
    throw NotDensityLike("density operator is " + std::to_string(rho.rows()) +
                         "x" + std::to_string(rho.cols()) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
  }
  if (!is_hermitian(rho, tol)) {
    throw NotDensityLike("density operator is not Hermitian at tolerance " +
                         std::to_string(tol));
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
    throw NotDensityLike("density operator trace deviates from 1 by " +
                         std::to_string(std::abs(tr - Complex(1.0, 0.0))));
  }
}

struct BlochVector {
  int n = 0;
  RealVector components;  // a_1..a_{n^2-1}

  double squared_norm() const { return components.squaredNorm(); }
};

/// Expectation value tr(L rho), which is real for Hermitian L and rho.
/// Residual imaginary parts above `imag_tol` indicate a bad input.
inline double real_trace_product(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs,
                                 double imag_tol = 1e-12) {
  const Complex t = (lhs * rhs).trace();
  if (std::abs(t.imag()) > imag_tol * std::max(1.0, std::abs(t.real()))) {
    throw NotDensityLike("trace product has imaginary part " +
                         std::to_string(t.imag()));
  }
  return t.real();
}

/// Bloch components a_j = tr(Lambda_j rho).
inline BlochVector bloch_vector(const ComplexMatrix& rho,
                                const GeneratorSet& gens) {
  check_density_like(rho, gens.n);
  BlochVector b;
  b.n = gens.n;
  b.components.resize(static_cast<Eigen::Index>(gens.count()));
  for (std::size_t j = 0; j < gens.count(); ++j) {
    b.components[static_cast<Eigen::Index>(j)] =
        real_trace_product(gens.lambdas[j], rho);
  }
  return b;
}

/// Reconstructs rho = I/N + (1/2) sum_i a_i Lambda_i. Bloch vectors outside
/// the physical body produce operators with negative eigenvalues; those are
/// rejected rather than repaired.
inline ComplexMatrix density_from_bloch(const BlochVector& b,
                                        const GeneratorSet& gens) {
  const auto expected = static_cast<Eigen::Index>(gens.count());
  if (b.n != gens.n || b.components.size() != expected) {
    throw DimensionMismatch("density_from_bloch: got " +
                            std::to_string(b.components.size()) +
                            " components, expected " +
                            std::to_string(expected));
  }
  ComplexMatrix rho =
      ComplexMatrix::Identity(gens.n, gens.n) / static_cast<double>(gens.n);
  for (std::size_t i = 0; i < gens.count(); ++i) {
    rho += 0.5 * b.components[static_cast<Eigen::Index>(i)] * gens.lambdas[i];
  }
  const auto es = hermitian_eigensystem(rho);
  if (es.eigenvalues.minCoeff() < -1e-10) {
    throw NotPositive("density_from_bloch: reconstructed operator has "
                      "eigenvalue " +
                      std::to_string(es.eigenvalues.minCoeff()));
  }
  return rho;
}

/// Total component-wise generator fluctuation
///   sum_j tr(Lambda_j^2 rho) - sum_j (tr Lambda_j rho)^2,
/// the second term being the squared Bloch vector norm. Equals 2(N - gamma)
/// with gamma = tr rho^2.
inline double total_generator_fluctuation(const ComplexMatrix& rho,
                                          const GeneratorSet& gens) {
  check_density_like(rho, gens.n);
  double second_moment = 0.0;
  double squared_means = 0.0;
  for (const ComplexMatrix& lambda : gens.lambdas) {
    second_moment += real_trace_product(lambda * lambda, rho);
    const double mean = real_trace_product(lambda, rho);
    squared_means += mean * mean;
  }
  return second_moment - squared_means;
}

}  // namespace entfluc::su_n

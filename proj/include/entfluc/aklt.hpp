// Block entanglement of the spin-1 AKLT valence-bond-solid ground state in
// the thermodynamic limit.
//
// The reduced density operator of a contiguous block of l spins is at most
// rank 4, with a triply degenerate eigenvalue
//   p_1 = p_2 = p_3 = (1 - (-3)^{-l}) / 4,   p_4 = (1 + 3 (-3)^{-l}) / 4,
// total polarization fluctuation (3/2)(1 - 9^{-l}) and purity
// (1 + 3^{1-2l}) / 4. An independent oracle rebuilds the block spectrum from
// the bond-dimension-2 matrix product tensors and the transfer-matrix fixed
// points, without using any of the closed forms.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "entfluc/bipartite.hpp"
#include "entfluc/errors.hpp"
#include "entfluc/matrix.hpp"
#include "entfluc/su_n.hpp"

namespace entfluc::aklt {

// Beyond this the subdominant transfer weight 3^{-l} is close enough to the
// double-precision noise floor that oracle agreement claims stop meaning much.
inline constexpr int kMaxOracleBlock = 12;

inline void check_block_length(int block_length) {
  if (block_length < 1) {
    throw InvalidDimension("aklt: block length must be >= 1");
  }
}

struct ClosedFormWeights {
  double triplet;  // each of p_1 = p_2 = p_3
  double singlet;  // p_4
};

inline ClosedFormWeights closed_form_weights(int block_length) {
  check_block_length(block_length);
  // (3^l +- ...)/(4 * 3^l) keeps the weights exact in floating point for
  // small l (p_4 = 0 exactly at l = 1); 3^l is an exact double up to l = 33.
  const double pow3 = std::pow(3.0, static_cast<double>(block_length));
  const double sign = block_length % 2 == 0 ? 1.0 : -1.0;
  return {(pow3 - sign) / (4.0 * pow3), (pow3 + 3.0 * sign) / (4.0 * pow3)};
}

/// Closed-form block spectrum, descending, zero weights dropped.
inline EntanglementSpectrum closed_form_spectrum(int block_length) {
  const ClosedFormWeights w = closed_form_weights(block_length);
  std::vector<double> p;
  for (int j = 0; j < 3; ++j) {
    if (w.triplet > kDefaultRankTol) p.push_back(w.triplet);
  }
  if (w.singlet > kDefaultRankTol) p.push_back(w.singlet);
  return EntanglementSpectrum::from_probabilities(std::move(p));
}

/// Total Schmidt polarization fluctuation (3/2)(1 - 9^{-l}).
inline double fluctuation(int block_length) {
  check_block_length(block_length);
  return 1.5 * (1.0 - std::pow(9.0, -static_cast<double>(block_length)));
}

/// Block purity (1 + 3^{1-2l}) / 4.
inline double purity(int block_length) {
  check_block_length(block_length);
  return 0.25 * (1.0 + std::pow(3.0, 1.0 - 2.0 * static_cast<double>(block_length)));
}

/// The three diagonal polarization operators of the rank-4 Schmidt subspace,
/// identical to the w_1, w_2, w_3 of su(4).
inline std::array<ComplexMatrix, 3> schmidt_polarization_operators() {
  const su_n::GeneratorSet gens = su_n::generators(4);
  return {gens.diagonal(1), gens.diagonal(2), gens.diagonal(3)};
}

namespace detail {

/// Spin-1 AKLT site tensors, bond dimension 2, one 2x2 matrix per physical
/// state m = +1, 0, -1. Any gauge of the standard representation works; the
/// block spectrum is gauge-invariant.
inline std::array<ComplexMatrix, 3> site_tensors() {
  std::array<ComplexMatrix, 3> a;
  const double q = std::sqrt(2.0 / 3.0);
  const double z = 1.0 / std::sqrt(3.0);
  a[0] = ComplexMatrix::Zero(2, 2);
  a[0](0, 1) = q;  // m = +1
  a[1] = ComplexMatrix::Zero(2, 2);
  a[1](0, 0) = -z;  // m = 0
  a[1](1, 1) = z;
  a[2] = ComplexMatrix::Zero(2, 2);
  a[2](1, 0) = -q;  // m = -1
  return a;
}

/// Dominant eigenvector of a 4x4 matrix, reshaped row-major into a 2x2
/// matrix, phase-fixed and Hermitized (transfer fixed points of an injective
/// MPS are Hermitian positive up to an overall phase).
inline ComplexMatrix dominant_fixed_point(const ComplexMatrix& map) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(map);
  if (solver.info() != Eigen::Success) {
    throw Error("aklt: transfer-matrix eigensolver did not converge");
  }
  Eigen::Index best = 0;
  for (Eigen::Index j = 1; j < solver.eigenvalues().size(); ++j) {
    if (std::abs(solver.eigenvalues()[j]) >
        std::abs(solver.eigenvalues()[best])) {
      best = j;
    }
  }
  ComplexVector vec = solver.eigenvectors().col(best);
  ComplexMatrix fixed(2, 2);
  fixed << vec[0], vec[1], vec[2], vec[3];
  const Complex tr = fixed.trace();
  if (std::abs(tr) > 1e-12) fixed *= std::abs(tr) / tr;
  fixed = 0.5 * (fixed + fixed.adjoint()).eval();
  if (fixed.trace().real() < 0.0) fixed = -fixed;
  return fixed;
}

}  // namespace detail

/// Thermodynamic-limit block spectrum from the matrix product representation.
///
/// With E[(a b),(c d)] = sum_m A^m_{ac} conj(A^m_{bd}) acting on vectorized
/// 2x2 matrices, the environment of a block of length l collapses onto the
/// dominant left/right fixed points lmat, rmat, and the block operator
///   rho_{mvec, mvec'} = tr(lmat B^{mvec} rmat B^{mvec'}^dagger),
///   B^{mvec} = A^{m1} ... A^{ml},
/// shares its nonzero spectrum with the 4x4 product K G, where
///   K[(b c),(a d)] = lmat_{ab} rmat_{cd},
///   G[(b c),(a d)] = (E^l)[(a b),(d c)]   (the Gram matrix of the B's).
/// Eigenvalues of sqrt(G) K sqrt(G), normalized by their sum, are the block
/// probabilities.
inline EntanglementSpectrum mps_block_spectrum(int block_length) {
  check_block_length(block_length);
  if (block_length > kMaxOracleBlock) {
    throw BlockTooLong("aklt: oracle supports block lengths up to " +
                       std::to_string(kMaxOracleBlock));
  }
  const std::array<ComplexMatrix, 3> site = detail::site_tensors();

  ComplexMatrix transfer = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          Complex sum = 0.0;
          for (const ComplexMatrix& m : site) {
            sum += m(a, c) * std::conj(m(b, d));
          }
          transfer(2 * a + b, 2 * c + d) = sum;
        }
      }
    }
  }

  const ComplexMatrix rmat = detail::dominant_fixed_point(transfer);
  const ComplexMatrix lmat =
      detail::dominant_fixed_point(transfer.adjoint()).adjoint();

  ComplexMatrix power = ComplexMatrix::Identity(4, 4);
  for (int step = 0; step < block_length; ++step) power *= transfer;

  ComplexMatrix gram(4, 4);
  ComplexMatrix weight(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          gram(2 * b + c, 2 * a + d) = power(2 * a + b, 2 * d + c);
          weight(2 * b + c, 2 * a + d) = lmat(a, b) * rmat(c, d);
        }
      }
    }
  }
  gram = 0.5 * (gram + gram.adjoint()).eval();
  weight = 0.5 * (weight + weight.adjoint()).eval();

  const EigenSystem gram_es = hermitian_eigensystem(gram);
  ComplexMatrix sqrt_gram = ComplexMatrix::Zero(4, 4);
  for (Eigen::Index j = 0; j < 4; ++j) {
    const double value = std::max(0.0, gram_es.eigenvalues[j]);
    sqrt_gram += std::sqrt(value) * gram_es.eigenvectors.col(j) *
                 gram_es.eigenvectors.col(j).adjoint();
  }

  ComplexMatrix core = sqrt_gram * weight * sqrt_gram;
  core = 0.5 * (core + core.adjoint()).eval();
  const EigenSystem core_es = hermitian_eigensystem(core);
  const double total = core_es.eigenvalues.sum();
  if (total <= 0.0) {
    throw Error("aklt: transfer-matrix construction lost positivity");
  }
  std::vector<double> p;
  for (Eigen::Index j = 3; j >= 0; --j) {
    const double value = core_es.eigenvalues[j] / total;
    if (value > kDefaultRankTol) p.push_back(value);
  }
  return EntanglementSpectrum::from_probabilities(std::move(p));
}

}  // namespace entfluc::aklt

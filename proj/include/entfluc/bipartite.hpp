// Qudit-bath pure states, Schmidt decomposition, entanglement spectra and
// the scalar entanglement measures derived from them.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "entfluc/errors.hpp"
#include "entfluc/matrix.hpp"

namespace entfluc {

inline constexpr double kDefaultRankTol = 1e-12;

/// Normalized amplitude grid psi[j][k] of a pure state on a
/// dim_q x dim_b product space. Row index runs over the qudit.
struct BipartitePureState {
  int dim_q = 0;
  int dim_b = 0;
  ComplexMatrix amplitudes;

  explicit BipartitePureState(ComplexMatrix grid)
      : dim_q(static_cast<int>(grid.rows())),
        dim_b(static_cast<int>(grid.cols())),
        amplitudes(std::move(grid)) {
    if (dim_q < 1 || dim_b < 1) {
      throw InvalidDimension("BipartitePureState: dimensions must be >= 1");
    }
    const double norm2 = amplitudes.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-12) {
      throw NotNormalized("BipartitePureState: squared norm is " +
                          std::to_string(norm2));
    }
  }
};

/// Descending probabilities p_1 >= ... >= p_N > 0 summing to one; the
/// eigenvalue multiset of the reduced density operator.
class EntanglementSpectrum {
 public:
  static EntanglementSpectrum from_probabilities(std::vector<double> p) {
    if (p.empty()) {
      throw OutOfRange("EntanglementSpectrum: empty probability list");
    }
    std::stable_sort(p.begin(), p.end(), std::greater<double>());
    double sum = 0.0;
    for (double v : p) {
      if (v <= 0.0 || v > 1.0 + 1e-10) {
        throw OutOfRange("EntanglementSpectrum: probability " +
                         std::to_string(v) + " outside (0, 1]");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
      throw OutOfRange("EntanglementSpectrum: probabilities sum to " +
                       std::to_string(sum));
    }
    return EntanglementSpectrum(std::move(p));
  }

  int rank() const { return static_cast<int>(p_.size()); }
  const std::vector<double>& probabilities() const { return p_; }
  double operator[](int j) const { return p_[static_cast<std::size_t>(j)]; }

 private:
  explicit EntanglementSpectrum(std::vector<double> p) : p_(std::move(p)) {}
  std::vector<double> p_;
};

enum class Partition { qudit, bath };

struct SchmidtDecomposition {
  EntanglementSpectrum spectrum;
  ComplexMatrix basis_q;  // dim_q x rank, orthonormal columns
  ComplexMatrix basis_b;  // dim_b x rank, orthonormal columns
};

/// Schmidt decomposition psi = sum_j sqrt(p_j) |j_q>|j_B| via the SVD of the
/// amplitude grid. Probabilities at or below tol_rank are discarded and the
/// remainder renormalized; if the discarded mass exceeds 10*tol_rank the
/// tolerance was set above genuine spectral weight and we refuse to guess.
inline SchmidtDecomposition schmidt(const BipartitePureState& state,
                                    double tol_rank = kDefaultRankTol) {
  const SvdResult dec = svd(state.amplitudes);
  std::vector<double> kept;
  double discarded = 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index a = 0; a < dec.singular_values.size(); ++a) {
    const double p = dec.singular_values[a] * dec.singular_values[a];
    if (p > tol_rank) {
      kept.push_back(p);
      rank = a + 1;
    } else {
      discarded += p;
    }
  }
  if (discarded > 10.0 * tol_rank || kept.empty()) {
    throw RankTolerationFailure(
        "schmidt: discarded probability mass " + std::to_string(discarded) +
        " exceeds 10 * tol_rank = " + std::to_string(10.0 * tol_rank));
  }
  const double total = std::accumulate(kept.begin(), kept.end(), 0.0);
  for (double& p : kept) p /= total;
  // psi = U diag(s) V^dagger means |j_B> columns are conj(V) columns.
  return {EntanglementSpectrum::from_probabilities(std::move(kept)),
          dec.left.leftCols(rank),
          dec.right_dagger.topRows(rank).transpose()};
}

/// Partial trace of |psi><psi| over the complementary partition.
inline ComplexMatrix reduced_density(const BipartitePureState& state,
                                     Partition which) {
  ComplexMatrix rho;
  if (which == Partition::qudit) {
    rho = state.amplitudes * state.amplitudes.adjoint();
  } else {
    rho = state.amplitudes.transpose() * state.amplitudes.conjugate();
  }
  // products of conjugate factors are Hermitian only up to round-off
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return rho;
}

struct MeasureSet {
  double purity;          // gamma = sum p_j^2
  double linear_entropy;  // 1 - gamma
  double von_neumann;     // -sum p_j ln p_j
  double concurrence;     // sqrt(2(1 - gamma))
};

inline MeasureSet measures(const EntanglementSpectrum& spectrum) {
  double gamma = 0.0;
  double entropy = 0.0;
  for (double p : spectrum.probabilities()) {
    gamma += p * p;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  const double linear = 1.0 - gamma;
  return {gamma, linear, entropy, std::sqrt(std::max(0.0, 2.0 * linear))};
}

/// Variance of H_q = -ln rho_q in the Schmidt eigenbasis:
///   sum_j p_j (ln p_j)^2 - (sum_j p_j ln p_j)^2.
inline double entanglement_hamiltonian_variance(
    const EntanglementSpectrum& spectrum) {
  double mean = 0.0;
  double second = 0.0;
  for (double p : spectrum.probabilities()) {
    if (p <= 0.0) {
      throw DegenerateLog("entanglement_hamiltonian_variance: p = 0 has no "
                          "finite log-eigenvalue");
    }
    const double lp = std::log(p);
    mean += p * lp;
    second += p * lp * lp;
  }
  return second - mean * mean;
}

/// Closed form for the rank-2 standard deviation of H_q as a function of the
/// concurrence: sqrt(variance) = C ln(1 + sqrt(1 - C^2)) - C ln C.
inline double entanglement_hamiltonian_deviation_rank2(double concurrence) {
  if (concurrence < 0.0 || concurrence > 1.0 + 1e-12) {
    throw OutOfRange("entanglement_hamiltonian_deviation_rank2: concurrence " +
                     std::to_string(concurrence) + " outside [0, 1]");
  }
  if (concurrence <= 0.0) return 0.0;
  const double c = std::min(concurrence, 1.0);
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  return c * std::log1p(root) - c * std::log(c);
}

}  // namespace entfluc

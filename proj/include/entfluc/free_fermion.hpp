// Block entanglement of the one-dimensional free spinless fermion gas.
//
// For a block of M adjacent sites of the infinite chain at filling nu, the
// ground-state correlation matrix <c_m^dag c_n> is the sine kernel
// sin(pi nu (m-n)) / (pi (m-n)) with nu on the diagonal. Its eigenvalues
// p^(j) are mode occupations; each mode contributes an independent qubit
// factor with fluctuation 4 p (1 - p), and the block purity is the product
// of the per-mode factors. A finite-ring construction with floor(nu L)
// filled momenta serves as an independent check of the kernel.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "entfluc/errors.hpp"
#include "entfluc/fluctuation.hpp"
#include "entfluc/matrix.hpp"

namespace entfluc::free_fermion {

struct FermionBlockConfig {
  double filling = 0.5;  // mean fermion density per site, in (0, 1)
  int block_size = 1;    // number of adjacent sites, >= 1
};

inline void validate(const FermionBlockConfig& cfg) {
  if (!(cfg.filling > 0.0 && cfg.filling < 1.0)) {
    throw InvalidFilling("free_fermion: filling " +
                         std::to_string(cfg.filling) + " outside (0, 1)");
  }
  if (cfg.block_size < 1) {
    throw InvalidDimension("free_fermion: block_size must be >= 1");
  }
}

/// M x M sine-kernel Toeplitz matrix of correlations within the block.
inline ComplexMatrix correlation_matrix(const FermionBlockConfig& cfg) {
  validate(cfg);
  const int m = cfg.block_size;
  std::vector<double> kernel(static_cast<std::size_t>(m));
  kernel[0] = cfg.filling;
  for (int r = 1; r < m; ++r) {
    kernel[static_cast<std::size_t>(r)] =
        std::sin(std::numbers::pi * cfg.filling * r) / (std::numbers::pi * r);
  }
  ComplexMatrix corr(m, m);
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      corr(row, col) = kernel[static_cast<std::size_t>(std::abs(row - col))];
    }
  }
  return corr;
}

/// Eigenvalues of the correlation matrix, clamped into [0, 1] and sorted
/// descending. Violations beyond 1e-10 indicate a kernel bug, not round-off.
inline std::vector<double> mode_occupations(const FermionBlockConfig& cfg) {
  const EigenSystem es = hermitian_eigensystem(correlation_matrix(cfg));
  std::vector<double> occupations;
  occupations.reserve(static_cast<std::size_t>(es.eigenvalues.size()));
  for (Eigen::Index j = es.eigenvalues.size() - 1; j >= 0; --j) {
    double p = es.eigenvalues[j];
    if (p < -1e-10 || p > 1.0 + 1e-10) {
      throw SpectrumOutOfRange("free_fermion: occupation " +
                               std::to_string(p) + " outside [0, 1]");
    }
    occupations.push_back(std::min(1.0, std::max(0.0, p)));
  }
  return occupations;
}

/// S_L = 1 - prod_j (1 - 2 p^(j) (1 - p^(j))), built from the per-mode qubit
/// fluctuations through the composite purity rule.
inline double block_linear_entropy(const FermionBlockConfig& cfg) {
  const std::vector<double> occupations = mode_occupations(cfg);
  std::vector<double> fluctuations;
  fluctuations.reserve(occupations.size());
  for (double p : occupations) fluctuations.push_back(4.0 * p * (1.0 - p));
  return 1.0 - composite_purity(fluctuations);
}

struct SweepRow {
  double filling;
  int block_size;
  double linear_entropy;
  double purity;
};

/// One row per (filling, block size), fillings then block sizes ascending.
inline std::vector<SweepRow> sweep(std::vector<double> fillings,
                                   std::vector<int> block_sizes) {
  std::sort(fillings.begin(), fillings.end());
  std::sort(block_sizes.begin(), block_sizes.end());
  std::vector<SweepRow> rows;
  rows.reserve(fillings.size() * block_sizes.size());
  for (double nu : fillings) {
    for (int m : block_sizes) {
      const double s_l = block_linear_entropy({nu, m});
      rows.push_back({nu, m, s_l, 1.0 - s_l});
    }
  }
  return rows;
}

/// Correlation matrix of a periodic ring of ring_size sites with the
/// floor(nu L) lowest-|k| momentum modes filled:
///   <c_m^dag c_n> = (1/L) sum_{filled k} exp(i 2 pi k (m-n) / L).
/// Converges entrywise to the sine kernel as O(1/L); an even mode count has
/// no exactly symmetric window, so k runs over {-Nf/2, ..., Nf/2 - 1}.
inline ComplexMatrix finite_ring_oracle(const FermionBlockConfig& cfg,
                                        std::int64_t ring_size) {
  validate(cfg);
  const int m = cfg.block_size;
  if (ring_size < 100 * static_cast<std::int64_t>(m)) {
    throw OutOfRange("finite_ring_oracle: ring_size must be >= 100 * "
                     "block_size");
  }
  const auto filled =
      static_cast<std::int64_t>(std::floor(cfg.filling * static_cast<double>(ring_size)));
  std::int64_t k_min = 0;
  std::int64_t k_max = -1;
  if (filled > 0) {
    if (filled % 2 == 1) {
      k_min = -(filled - 1) / 2;
      k_max = (filled - 1) / 2;
    } else {
      k_min = -filled / 2;
      k_max = filled / 2 - 1;
    }
  }
  std::vector<Complex> kernel(2 * static_cast<std::size_t>(m) - 1);
  for (int r = -(m - 1); r <= m - 1; ++r) {
    Complex sum = 0.0;
    for (std::int64_t k = k_min; k <= k_max; ++k) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(r) / static_cast<double>(ring_size);
      sum += Complex(std::cos(phase), std::sin(phase));
    }
    kernel[static_cast<std::size_t>(r + m - 1)] =
        sum / static_cast<double>(ring_size);
  }
  ComplexMatrix corr(m, m);
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      corr(row, col) = kernel[static_cast<std::size_t>(row - col + m - 1)];
    }
  }
  return corr;
}

}  // namespace entfluc::free_fermion

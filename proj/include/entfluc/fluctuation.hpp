// Schmidt polarization expectations and fluctuations. The total fluctuation
// of the diagonal su(N) generators evaluated on diag(p_1..p_N) obeys
//   sum_k [tr(w_k^2 rho) - (tr w_k rho)^2] = 2(1 - gamma) = C^2,
// which is the identity every report in this module cross-checks.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "entfluc/bipartite.hpp"
#include "entfluc/errors.hpp"
#include "entfluc/matrix.hpp"
#include "entfluc/su_n.hpp"

namespace entfluc {

struct FluctuationReport {
  int dimension = 0;                  // su(N) dimension used for evaluation
  std::vector<double> per_component;  // variance of w_1..w_{N-1}
  double total = 0.0;                 // sum of per_component
  double purity = 0.0;
  double linear_entropy = 0.0;
  double concurrence = 0.0;
  double generator_total = 0.0;       // variance over the full generator set
  double residual_main = 0.0;         // |total - 2(1 - purity)|
  double residual_generator = 0.0;    // |generator_total - 2(N - purity)|
};

/// <w_k> = sqrt(2/(k(k+1))) [ sum_{j<=k} p_j - k p_{k+1} ], the weighted
/// relative probability of the first k Schmidt states against state k+1.
inline std::vector<double> polarization_expectations(
    const EntanglementSpectrum& spectrum) {
  const int n = spectrum.rank();
  if (n < 2) {
    throw RankTooSmall("polarization_expectations: rank " + std::to_string(n) +
                       " has no diagonal generators");
  }
  std::vector<double> means(static_cast<std::size_t>(n) - 1);
  double prefix = 0.0;
  for (int k = 1; k < n; ++k) {
    prefix += spectrum[k - 1];
    const double scale = std::sqrt(2.0 / (static_cast<double>(k) * (k + 1)));
    means[static_cast<std::size_t>(k) - 1] =
        scale * (prefix - static_cast<double>(k) * spectrum[k]);
  }
  return means;
}

/// Per-component and total polarization fluctuation of a spectrum, computed
/// from the defining generator variances on rho = diag(p), with the closed
/// forms recorded as residuals rather than substituted for the computation.
///
/// embed_dim evaluates the same spectrum inside su(embed_dim >= rank) by
/// padding with zero probabilities; the default uses the spectrum's rank
/// (rank-1 spectra are padded to su(2), where every variance vanishes).
inline FluctuationReport schmidt_polarization_fluctuation(
    const EntanglementSpectrum& spectrum, int embed_dim = 0) {
  const int rank = spectrum.rank();
  if (embed_dim != 0 && embed_dim < rank) {
    throw DimensionMismatch("schmidt_polarization_fluctuation: embed_dim " +
                            std::to_string(embed_dim) + " < rank " +
                            std::to_string(rank));
  }
  const int dim = std::max(embed_dim == 0 ? rank : embed_dim, 2);
  const su_n::GeneratorSet gens = su_n::generators(dim);

  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < rank; ++j) rho(j, j) = spectrum[j];

  FluctuationReport report;
  report.dimension = dim;
  report.per_component.resize(static_cast<std::size_t>(dim) - 1);
  for (int k = 1; k < dim; ++k) {
    const ComplexMatrix& w = gens.diagonal(k);
    const double second = su_n::real_trace_product(w * w, rho);
    const double mean = su_n::real_trace_product(w, rho);
    report.per_component[static_cast<std::size_t>(k) - 1] =
        second - mean * mean;
  }
  for (double v : report.per_component) report.total += v;

  const MeasureSet m = measures(spectrum);
  report.purity = m.purity;
  report.linear_entropy = m.linear_entropy;
  report.concurrence = m.concurrence;
  report.generator_total = su_n::total_generator_fluctuation(rho, gens);
  report.residual_main = std::abs(report.total - 2.0 * (1.0 - m.purity));
  report.residual_generator =
      std::abs(report.generator_total - 2.0 * (dim - m.purity));
  return report;
}

/// Purity of a product of independent subsystems from their individual
/// polarization fluctuations: gamma = prod_j (1 - f_j / 2).
inline double composite_purity(const std::vector<double>& component_fluctuations) {
  double gamma = 1.0;
  for (double f : component_fluctuations) {
    if (!(f >= 0.0 && f < 2.0)) {
      throw OutOfRange("composite_purity: component fluctuation " +
                       std::to_string(f) + " outside [0, 2)");
    }
    gamma *= 1.0 - 0.5 * f;
  }
  return gamma;
}

/// Residual of the two-component identity
///   f1 + f2 - f1 f2 / 2 = 2(1 - gamma),  gamma = (1 - f1/2)(1 - f2/2).
/// Zero up to round-off; returned rather than asserted so callers can log it.
inline double two_component_relation_residual(double f1, double f2) {
  const double gamma = composite_purity({f1, f2});
  return std::abs(f1 + f2 - 0.5 * f1 * f2 - 2.0 * (1.0 - gamma));
}

}  // namespace entfluc

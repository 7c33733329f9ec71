// Seeded property battery behind the `validate` command: every structural
// identity the library relies on, evaluated on deterministic random
// ensembles, reported as max residuals against fixed tolerances.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "entfluc/aklt.hpp"
#include "entfluc/bipartite.hpp"
#include "entfluc/fluctuation.hpp"
#include "entfluc/free_fermion.hpp"
#include "entfluc/io.hpp"
#include "entfluc/matrix.hpp"
#include "entfluc/random_states.hpp"
#include "entfluc/su_n.hpp"

namespace entfluc::validation {

struct PropertyResult {
  std::string name;
  int samples = 0;
  double tolerance = 0.0;
  double max_residual = 0.0;
  bool pass = false;
};

struct Summary {
  std::uint64_t seed = 0;
  int n_samples = 0;
  std::vector<PropertyResult> properties;
  bool all_pass = false;
};

namespace detail {

inline const std::vector<std::pair<int, int>>& haar_dims() {
  static const std::vector<std::pair<int, int>> dims = {
      {2, 2}, {2, 3}, {3, 3}, {4, 5}, {6, 7}};
  return dims;
}

struct Recorder {
  int samples = 0;
  double max_residual = 0.0;

  void record(double residual) {
    ++samples;
    max_residual = std::max(max_residual, std::abs(residual));
  }
};

inline PropertyResult finish(const std::string& name, const Recorder& rec,
                             double tolerance) {
  return {name, rec.samples, tolerance, rec.max_residual,
          rec.max_residual <= tolerance};
}

// |Delta^2 w - 2(1-gamma)| and |Delta^2 w - C^2| on Haar random states.
inline PropertyResult main_relation(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const auto& [dq, db] = haar_dims()[static_cast<std::size_t>(i) % haar_dims().size()];
    const BipartitePureState state = haar_random_pure(dq, db, src);
    const SchmidtDecomposition dec = schmidt(state);
    const FluctuationReport report = schmidt_polarization_fluctuation(dec.spectrum);
    rec.record(report.residual_main);
    rec.record(report.total - report.concurrence * report.concurrence);
  }
  return finish("main_relation", rec, 1e-10);
}

inline PropertyResult generator_orthonormality(int) {
  Recorder rec;
  for (int n = 2; n <= 8; ++n) {
    const su_n::GeneratorSet gens = su_n::generators(n);
    for (std::size_t i = 0; i < gens.count(); ++i) {
      rec.record(std::abs(gens.lambdas[i].trace()));
      for (std::size_t j = i; j < gens.count(); ++j) {
        const Complex overlap = (gens.lambdas[i] * gens.lambdas[j]).trace();
        const double expected = i == j ? 2.0 : 0.0;
        rec.record(std::abs(overlap - Complex(expected, 0.0)));
      }
    }
  }
  return finish("generator_orthonormality", rec, 1e-12);
}

inline PropertyResult generator_casimir(int) {
  Recorder rec;
  for (int n = 2; n <= 8; ++n) {
    const su_n::GeneratorSet gens = su_n::generators(n);
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const ComplexMatrix& lambda : gens.lambdas) sum += lambda * lambda;
    const double casimir = 2.0 * (static_cast<double>(n) * n - 1.0) / n;
    rec.record(max_abs(sum - casimir * ComplexMatrix::Identity(n, n)));
  }
  return finish("generator_casimir", rec, 1e-12);
}

inline ComplexMatrix random_mixed_state(int n, int dim_b, SeededSource& src) {
  const BipartitePureState pure = haar_random_pure(n, dim_b, src);
  return reduced_density(pure, Partition::qudit);
}

inline PropertyResult bloch_roundtrip(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const int n = 2 + i % 5;
    const su_n::GeneratorSet gens = su_n::generators(n);
    const ComplexMatrix rho = random_mixed_state(n, n + i % 2, src);
    const su_n::BlochVector b = su_n::bloch_vector(rho, gens);
    rec.record(max_abs(su_n::density_from_bloch(b, gens) - rho));
  }
  return finish("bloch_roundtrip", rec, 1e-12);
}

inline PropertyResult bloch_norm_identity(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const int n = 2 + i % 5;
    const su_n::GeneratorSet gens = su_n::generators(n);
    const ComplexMatrix rho = random_mixed_state(n, n + i % 3, src);
    const double gamma = (rho * rho).trace().real();
    const double expected = 2.0 * (n * gamma - 1.0) / n;
    rec.record(su_n::bloch_vector(rho, gens).squared_norm() - expected);
  }
  return finish("bloch_norm_identity", rec, 1e-10);
}

inline PropertyResult generator_fluctuation(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const int n = 2 + i % 5;
    const su_n::GeneratorSet gens = su_n::generators(n);
    const ComplexMatrix rho = random_mixed_state(n, n + i % 3, src);
    const double gamma = (rho * rho).trace().real();
    rec.record(su_n::total_generator_fluctuation(rho, gens) -
               2.0 * (n - gamma));
  }
  return finish("generator_fluctuation", rec, 1e-10);
}

// sum_k tr(w_k^2 rho) = 2(N-1)/N on random spectra, via generator traces.
inline PropertyResult mean_square_sum(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const int rank = 2 + i % 5;
    const EntanglementSpectrum spectrum =
        random_product_spectrum({rank}, src).front();
    const su_n::GeneratorSet gens = su_n::generators(rank);
    ComplexMatrix rho = ComplexMatrix::Zero(rank, rank);
    for (int j = 0; j < rank; ++j) rho(j, j) = spectrum[j];
    double sum = 0.0;
    for (int k = 1; k < rank; ++k) {
      const ComplexMatrix& w = gens.diagonal(k);
      sum += su_n::real_trace_product(w * w, rho);
    }
    rec.record(sum - 2.0 * (rank - 1.0) / rank);
  }
  return finish("mean_square_sum", rec, 1e-12);
}

// sum_{j<k} p_j p_k = (1 - gamma)/2.
inline PropertyResult pair_product_identity(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const int rank = 2 + i % 6;
    const EntanglementSpectrum spectrum =
        random_product_spectrum({rank}, src).front();
    double pairs = 0.0;
    for (int j = 0; j < rank; ++j) {
      for (int k = j + 1; k < rank; ++k) pairs += spectrum[j] * spectrum[k];
    }
    rec.record(pairs - 0.5 * measures(spectrum).linear_entropy);
  }
  return finish("pair_product_identity", rec, 1e-12);
}

inline PropertyResult schmidt_reduced_consistency(SeededSource src,
                                                  int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const auto& [dq, db] = haar_dims()[static_cast<std::size_t>(i) % haar_dims().size()];
    const BipartitePureState state = haar_random_pure(dq, db, src);
    const SchmidtDecomposition dec = schmidt(state);
    const EigenSystem es =
        hermitian_eigensystem(reduced_density(state, Partition::qudit));
    // eigenvalues ascending; spectrum descending, zero-padded to dim_q
    for (int j = 0; j < dq; ++j) {
      const double expected =
          j < dec.spectrum.rank() ? dec.spectrum[j] : 0.0;
      rec.record(es.eigenvalues[dq - 1 - j] - expected);
    }
  }
  return finish("schmidt_reduced_consistency", rec, 1e-10);
}

inline PropertyResult rank_padding_invariance(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const int rank = 2 + i % 4;
    const EntanglementSpectrum spectrum =
        random_product_spectrum({rank}, src).front();
    const double base = schmidt_polarization_fluctuation(spectrum).total;
    for (int extra : {1, 3}) {
      const double padded =
          schmidt_polarization_fluctuation(spectrum, rank + extra).total;
      rec.record(padded - base);
    }
  }
  return finish("rank_padding_invariance", rec, 1e-10);
}

inline PropertyResult ordering_invariance(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const int rank = 2 + i % 5;
    const EntanglementSpectrum spectrum =
        random_product_spectrum({rank}, src).front();
    const double base = schmidt_polarization_fluctuation(spectrum).total;
    // evaluate the defining variances under a random permutation of p
    std::vector<double> shuffled = spectrum.probabilities();
    for (std::size_t j = shuffled.size(); j > 1; --j) {
      const auto pick = static_cast<std::size_t>(src.next_u64() % j);
      std::swap(shuffled[pick], shuffled[j - 1]);
    }
    const su_n::GeneratorSet gens = su_n::generators(rank);
    ComplexMatrix rho = ComplexMatrix::Zero(rank, rank);
    for (int j = 0; j < rank; ++j) rho(j, j) = shuffled[static_cast<std::size_t>(j)];
    double total = 0.0;
    for (int k = 1; k < rank; ++k) {
      const ComplexMatrix& w = gens.diagonal(k);
      const double mean = su_n::real_trace_product(w, rho);
      total += su_n::real_trace_product(w * w, rho) - mean * mean;
    }
    rec.record(total - base);
  }
  return finish("ordering_invariance", rec, 1e-12);
}

inline PropertyResult two_component_identity(SeededSource src, int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const double f1 = 2.0 * src.next_unit();
    const double f2 = 2.0 * src.next_unit();
    rec.record(two_component_relation_residual(f1, f2));
  }
  return finish("two_component_identity", rec, 1e-12);
}

inline PropertyResult composite_multiplicativity(SeededSource src,
                                                 int n_samples) {
  Recorder rec;
  for (int i = 0; i < n_samples; ++i) {
    const std::vector<int> ranks = {2 + i % 3, 2 + (i / 3) % 3};
    const auto spectra = random_product_spectrum(ranks, src);
    std::vector<double> fluctuations;
    double explicit_gamma = 1.0;
    for (const auto& spectrum : spectra) {
      fluctuations.push_back(schmidt_polarization_fluctuation(spectrum).total);
      explicit_gamma *= measures(spectrum).purity;
    }
    rec.record(composite_purity(fluctuations) - explicit_gamma);
  }
  return finish("composite_multiplicativity", rec, 1e-12);
}

inline PropertyResult fermion_particle_hole(int) {
  Recorder rec;
  for (double nu : {0.1, 0.25, 0.4}) {
    for (int m : {1, 5, 20, 60}) {
      rec.record(free_fermion::block_linear_entropy({nu, m}) -
                 free_fermion::block_linear_entropy({1.0 - nu, m}));
    }
  }
  return finish("fermion_particle_hole", rec, 1e-10);
}

inline PropertyResult aklt_oracle_agreement(int) {
  Recorder rec;
  for (int l = 1; l <= 8; ++l) {
    const auto closed = aklt::closed_form_spectrum(l).probabilities();
    const auto oracle = aklt::mps_block_spectrum(l).probabilities();
    for (std::size_t j = 0; j < 4; ++j) {
      const double a = j < closed.size() ? closed[j] : 0.0;
      const double b = j < oracle.size() ? oracle[j] : 0.0;
      rec.record(a - b);
    }
  }
  return finish("aklt_oracle_agreement", rec, 1e-10);
}

inline PropertyResult aklt_pipeline_closure(int) {
  Recorder rec;
  for (int l = 1; l <= 20; ++l) {
    const EntanglementSpectrum spectrum = aklt::closed_form_spectrum(l);
    const FluctuationReport report = schmidt_polarization_fluctuation(spectrum);
    rec.record(report.total - aklt::fluctuation(l));
    rec.record(report.purity - aklt::purity(l));
  }
  return finish("aklt_pipeline_closure", rec, 1e-12);
}

}  // namespace detail

/// Runs every property with streams split from `seed`. Deterministic: the
/// same (seed, n_samples) yields an identical summary.
inline Summary run(std::uint64_t seed, int n_samples) {
  if (n_samples < 1) {
    throw OutOfRange("validation: n_samples must be >= 1");
  }
  const SeededSource root(seed);
  Summary summary;
  summary.seed = seed;
  summary.n_samples = n_samples;
  std::uint64_t stream = 0;
  auto next = [&]() { return root.split(stream++); };

  summary.properties.push_back(detail::main_relation(next(), n_samples));
  summary.properties.push_back(detail::generator_orthonormality(n_samples));
  summary.properties.push_back(detail::generator_casimir(n_samples));
  summary.properties.push_back(detail::bloch_roundtrip(next(), n_samples));
  summary.properties.push_back(detail::bloch_norm_identity(next(), n_samples));
  summary.properties.push_back(detail::generator_fluctuation(next(), n_samples));
  summary.properties.push_back(detail::mean_square_sum(next(), n_samples));
  summary.properties.push_back(detail::pair_product_identity(next(), n_samples));
  summary.properties.push_back(
      detail::schmidt_reduced_consistency(next(), n_samples));
  summary.properties.push_back(
      detail::rank_padding_invariance(next(), n_samples));
  summary.properties.push_back(detail::ordering_invariance(next(), n_samples));
  summary.properties.push_back(
      detail::two_component_identity(next(), n_samples));
  summary.properties.push_back(
      detail::composite_multiplicativity(next(), n_samples));
  summary.properties.push_back(detail::fermion_particle_hole(n_samples));
  summary.properties.push_back(detail::aklt_oracle_agreement(n_samples));
  summary.properties.push_back(detail::aklt_pipeline_closure(n_samples));

  summary.all_pass = true;
  for (const PropertyResult& property : summary.properties) {
    summary.all_pass = summary.all_pass && property.pass;
  }
  return summary;
}

inline nlohmann::ordered_json to_json(const Summary& summary) {
  nlohmann::ordered_json j;
  j["seed"] = summary.seed;
  j["n_samples"] = summary.n_samples;
  j["algorithm"] = SeededSource::kAlgorithm;
  auto properties = nlohmann::ordered_json::array();
  for (const PropertyResult& property : summary.properties) {
    nlohmann::ordered_json p;
    p["name"] = property.name;
    p["samples"] = property.samples;
    p["tolerance"] = property.tolerance;
    p["max_residual"] = property.max_residual;
    p["pass"] = property.pass;
    properties.push_back(std::move(p));
  }
  j["properties"] = std::move(properties);
  j["all_pass"] = summary.all_pass;
  return j;
}

}  // namespace entfluc::validation

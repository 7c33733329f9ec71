// Deterministic pseudo-random sources and the state/spectrum ensembles used
// by the property and acceptance suites.
//
// The generator is xoshiro256++ seeded through splitmix64, with Gaussians
// from an explicit Box-Muller transform. Platform default generators and
// std::normal_distribution are deliberately avoided: their output sequences
// are implementation-defined, and identical (seed, algorithm) pairs must
// reproduce identical streams everywhere.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "entfluc/bipartite.hpp"
#include "entfluc/errors.hpp"
#include "entfluc/matrix.hpp"

namespace entfluc {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SeededSource {
 public:
  static constexpr const char* kAlgorithm = "xoshiro256++";

  explicit SeededSource(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the paired sample is cached.
  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

  Complex next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re, im};
  }

  /// Disjoint child stream: child_seed = splitmix64(seed ^ (stream+1)*phi64),
  /// derived from the original seed so splits are order-independent.
  SeededSource split(std::uint64_t stream) const {
    std::uint64_t x = seed_ ^ ((stream + 1) * 0x9E3779B97F4A7C15ULL);
    return SeededSource(splitmix64_next(x));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Haar-distributed pure state on a dim_q x dim_b product space: amplitudes
/// drawn as iid standard complex Gaussians (row-major fill order), then
/// normalized. Unitary invariance on each factor follows from the rotational
/// invariance of the Gaussian measure.
inline BipartitePureState haar_random_pure(int dim_q, int dim_b,
                                           SeededSource& src) {
  if (dim_q < 1 || dim_b < 1) {
    throw InvalidDimension("haar_random_pure: dimensions must be >= 1");
  }
  ComplexMatrix grid(dim_q, dim_b);
  double norm = 0.0;
  do {
    for (int j = 0; j < dim_q; ++j) {
      for (int k = 0; k < dim_b; ++k) {
        grid(j, k) = src.next_complex_gaussian();
      }
    }
    norm = grid.norm();
  } while (norm == 0.0);
  return BipartitePureState(grid / norm);
}

/// One spectrum per requested rank, each sampled uniformly on the
/// probability simplex (normalized unit exponentials), sorted descending.
inline std::vector<EntanglementSpectrum> random_product_spectrum(
    const std::vector<int>& ranks, SeededSource& src) {
  std::vector<EntanglementSpectrum> spectra;
  spectra.reserve(ranks.size());
  for (int rank : ranks) {
    if (rank < 1) {
      throw InvalidDimension("random_product_spectrum: rank must be >= 1");
    }
    std::vector<double> weights(static_cast<std::size_t>(rank));
    double sum = 0.0;
    for (double& w : weights) {
      do {
        w = -std::log(1.0 - src.next_unit());
      } while (w <= 0.0);
      sum += w;
    }
    for (double& w : weights) w /= sum;
    spectra.push_back(EntanglementSpectrum::from_probabilities(std::move(weights)));
  }
  return spectra;
}

}  // namespace entfluc

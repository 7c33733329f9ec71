#include "entfluc/free_fermion.hpp"

#include <cmath>
#include <numbers>
#include <gtest/gtest.h>

#include "entfluc/bipartite.hpp"
#include "entfluc/fluctuation.hpp"

namespace {

namespace ff = entfluc::free_fermion;
using entfluc::ComplexMatrix;

TEST(FreeFermion, KernelEntriesAtHalfFilling) {
  const ComplexMatrix corr = ff::correlation_matrix({0.5, 3});
  EXPECT_NEAR(corr(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(corr(0, 1).real(), 1.0 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(corr(1, 0).real(), 1.0 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(corr(0, 2).real(), 0.0, 1e-15);
  EXPECT_NEAR(corr(0, 1).imag(), 0.0, 1e-16);
}

TEST(FreeFermion, SingleSiteBlock) {
  const ComplexMatrix corr = ff::correlation_matrix({0.3, 1});
  ASSERT_EQ(corr.rows(), 1);
  EXPECT_NEAR(corr(0, 0).real(), 0.3, 1e-15);

  const auto occ = ff::mode_occupations({0.3, 1});
  ASSERT_EQ(occ.size(), 1u);
  EXPECT_NEAR(occ[0], 0.3, 1e-15);
}

TEST(FreeFermion, ConfigValidation) {
  EXPECT_THROW(ff::correlation_matrix({0.0, 3}), entfluc::InvalidFilling);
  EXPECT_THROW(ff::correlation_matrix({1.0, 3}), entfluc::InvalidFilling);
  EXPECT_THROW(ff::correlation_matrix({0.5, 0}), entfluc::InvalidDimension);
}

// 2x2 eigenproblem of [[1/2, 1/pi], [1/pi, 1/2]] by hand
TEST(FreeFermion, TwoSiteOccupations) {
  const auto occ = ff::mode_occupations({0.5, 2});
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_NEAR(occ[0], 0.5 + 1.0 / std::numbers::pi, 1e-14);
  EXPECT_NEAR(occ[1], 0.5 - 1.0 / std::numbers::pi, 1e-14);
}

TEST(FreeFermion, OccupationsWithinUnitInterval) {
  for (double nu : {0.1, 0.5, 0.9}) {
    for (int m : {5, 40, 120}) {
      for (double p : ff::mode_occupations({nu, m})) {
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
      }
    }
  }
}

// particle-hole map: occupations at 1 - nu are the mirrors 1 - p
TEST(FreeFermion, ParticleHoleMirror) {
  for (double nu : {0.2, 0.35}) {
    for (int m : {3, 17}) {
      const auto occ = ff::mode_occupations({nu, m});
      auto mirrored = ff::mode_occupations({1.0 - nu, m});
      ASSERT_EQ(occ.size(), mirrored.size());
      for (std::size_t j = 0; j < occ.size(); ++j) {
        EXPECT_NEAR(occ[j], 1.0 - mirrored[mirrored.size() - 1 - j], 1e-11);
      }
    }
  }
}

TEST(FreeFermion, OccupationTraceIdentity) {
  for (double nu : {0.25, 0.5, 0.8}) {
    for (int m : {7, 64}) {
      double sum = 0.0;
      for (double p : ff::mode_occupations({nu, m})) sum += p;
      EXPECT_NEAR(sum, nu * m, 1e-9);
    }
  }
}

TEST(FreeFermion, SingleSiteLinearEntropy) {
  EXPECT_NEAR(ff::block_linear_entropy({0.5, 1}), 0.5, 1e-15);
  // one factor: S_L = 2 nu (1 - nu)
  EXPECT_NEAR(ff::block_linear_entropy({0.2, 1}), 2.0 * 0.2 * 0.8, 1e-15);
}

TEST(FreeFermion, DiluteLimitIsAlmostPure) {
  EXPECT_LE(ff::block_linear_entropy({1e-4, 6}), 2e-3);
}

TEST(FreeFermion, LinearEntropyParticleHoleSymmetry) {
  for (double nu : {0.1, 0.25, 0.4}) {
    for (int m : {1, 5, 20, 60}) {
      EXPECT_NEAR(ff::block_linear_entropy({nu, m}),
                  ff::block_linear_entropy({1.0 - nu, m}), 1e-10);
    }
  }
}

TEST(FreeFermion, SweepIsSortedAndMonotonic) {
  std::vector<int> blocks;
  for (int m = 1; m <= 50; ++m) blocks.push_back(m);
  const auto rows = ff::sweep({0.5, 0.25}, blocks);
  ASSERT_EQ(rows.size(), 100u);
  // fillings ascending, blocks ascending within each filling
  EXPECT_EQ(rows.front().filling, 0.25);
  EXPECT_EQ(rows.back().filling, 0.5);
  double prev = -1.0;
  for (std::size_t i = 50; i < 100; ++i) {
    EXPECT_EQ(rows[i].filling, 0.5);
    EXPECT_EQ(rows[i].block_size, static_cast<int>(i) - 49);
    EXPECT_GT(rows[i].linear_entropy, prev);
    EXPECT_NEAR(rows[i].purity, 1.0 - rows[i].linear_entropy, 1e-15);
    prev = rows[i].linear_entropy;
  }
}

// saturation toward unity is logarithmic: gamma ~ M^{-1/4} at half filling,
// frozen here from the product-formula computation itself
TEST(FreeFermion, LargeBlockSaturation) {
  const double s_l = ff::block_linear_entropy({0.5, 1000});
  EXPECT_NEAR(s_l, 0.900157, 2e-4);
  EXPECT_GT(s_l, ff::block_linear_entropy({0.5, 500}));
}

TEST(FreeFermion, HalfFillingDominatesAtFixedBlock) {
  const double denser = ff::block_linear_entropy({0.5, 100});
  const double mid = ff::block_linear_entropy({0.25, 100});
  const double dilute = ff::block_linear_entropy({0.1, 100});
  EXPECT_GT(denser, mid);
  EXPECT_GT(mid, dilute);
}

TEST(FreeFermion, RingOracleMatchesKernel) {
  const std::int64_t ring = 1 << 14;
  for (double nu : {0.5, 0.3}) {
    const ComplexMatrix oracle = ff::finite_ring_oracle({nu, 20}, ring);
    const ComplexMatrix kernel = ff::correlation_matrix({nu, 20});
    EXPECT_LE(entfluc::max_abs(oracle - kernel), 1e-3) << "nu = " << nu;
  }
}

TEST(FreeFermion, RingOracleDiagonalIsModeCount) {
  const std::int64_t ring = 4096;
  const ComplexMatrix oracle = ff::finite_ring_oracle({0.37, 4}, ring);
  const double expected =
      std::floor(0.37 * static_cast<double>(ring)) / static_cast<double>(ring);
  EXPECT_NEAR(oracle(2, 2).real(), expected, 1e-14);
  EXPECT_NEAR(oracle(2, 2).imag(), 0.0, 1e-14);
}

TEST(FreeFermion, RingOracleOccupationsConverge) {
  const auto es = entfluc::hermitian_eigensystem(
      ff::finite_ring_oracle({0.5, 2}, 1 << 14), 1e-8);
  const auto occ = ff::mode_occupations({0.5, 2});
  EXPECT_NEAR(es.eigenvalues[1], occ[0], 1e-3);
  EXPECT_NEAR(es.eigenvalues[0], occ[1], 1e-3);
}

TEST(FreeFermion, RingOracleDemandsLargeRing) {
  EXPECT_THROW(ff::finite_ring_oracle({0.5, 10}, 500), entfluc::OutOfRange);
}

// the product formula agrees with the explicit 2^M-state tensor spectrum
TEST(FreeFermion, CompositePathMatchesExplicitSpectrum) {
  for (int m : {2, 5, 9, 12}) {
    const auto occ = ff::mode_occupations({0.5, m});
    std::vector<double> tensor = {1.0};
    for (double p : occ) {
      std::vector<double> next;
      next.reserve(tensor.size() * 2);
      for (double a : tensor) {
        next.push_back(a * p);
        next.push_back(a * (1.0 - p));
      }
      tensor = std::move(next);
    }
    double explicit_purity = 0.0;
    for (double p : tensor) explicit_purity += p * p;
    EXPECT_NEAR(1.0 - ff::block_linear_entropy({0.5, m}), explicit_purity,
                1e-10)
        << "M = " << m;
  }
}

}  // namespace

#include "entfluc/aklt.hpp"

#include <cmath>
#include <gtest/gtest.h>

#include "entfluc/fluctuation.hpp"
#include "entfluc/su_n.hpp"

namespace {

namespace aklt = entfluc::aklt;
using entfluc::ComplexMatrix;

TEST(Aklt, ClosedFormSpectrumLengthOne) {
  const auto spectrum = aklt::closed_form_spectrum(1);
  ASSERT_EQ(spectrum.rank(), 3);  // p_4 = 0 drops out
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(spectrum[j], 1.0 / 3.0, 1e-15);
}

TEST(Aklt, ClosedFormSpectrumLengthTwo) {
  const auto w = aklt::closed_form_weights(2);
  EXPECT_NEAR(w.triplet, 2.0 / 9.0, 1e-16);
  EXPECT_NEAR(w.singlet, 1.0 / 3.0, 1e-16);

  const auto spectrum = aklt::closed_form_spectrum(2);
  ASSERT_EQ(spectrum.rank(), 4);
  // descending: the singlet weight leads for even block lengths
  EXPECT_NEAR(spectrum[0], 1.0 / 3.0, 1e-15);
  for (int j = 1; j < 4; ++j) EXPECT_NEAR(spectrum[j], 2.0 / 9.0, 1e-15);
}

TEST(Aklt, SpectrumApproachesMaximallyMixed) {
  const auto spectrum = aklt::closed_form_spectrum(20);
  ASSERT_EQ(spectrum.rank(), 4);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(spectrum[j], 0.25, 1e-9);
}

TEST(Aklt, TripleDegeneracyIsExact) {
  for (int l = 1; l <= 20; ++l) {
    const auto w = aklt::closed_form_weights(l);
    const auto spectrum = aklt::closed_form_spectrum(l);
    int triplet_count = 0;
    for (int j = 0; j < spectrum.rank(); ++j) {
      if (spectrum[j] == w.triplet) ++triplet_count;
    }
    EXPECT_EQ(triplet_count, 3) << "l = " << l;
  }
}

TEST(Aklt, FluctuationClosedForm) {
  EXPECT_NEAR(aklt::fluctuation(1), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(aklt::fluctuation(2), 1.5 * 80.0 / 81.0, 1e-15);
  EXPECT_NEAR(aklt::fluctuation(50), 1.5, 1e-15);
}

TEST(Aklt, PurityClosedForm) {
  EXPECT_NEAR(aklt::purity(1), 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(aklt::purity(2), 7.0 / 27.0, 1e-16);
  EXPECT_NEAR(aklt::purity(40), 0.25, 1e-15);
}

TEST(Aklt, PurityMatchesSpectrum) {
  for (int l = 1; l <= 20; ++l) {
    const auto spectrum = aklt::closed_form_spectrum(l);
    EXPECT_NEAR(entfluc::measures(spectrum).purity, aklt::purity(l), 1e-14);
  }
}

TEST(Aklt, RelationClosure) {
  for (int l = 1; l <= 20; ++l) {
    EXPECT_NEAR(2.0 * (1.0 - aklt::purity(l)), aklt::fluctuation(l), 1e-14);
  }
}

TEST(Aklt, ExponentialConvergenceIsExact) {
  for (int l = 1; l <= 16; ++l) {
    const double gap = std::abs(aklt::purity(l) - 0.25);
    const double expected = 0.25 * std::pow(3.0, 1.0 - 2.0 * l);
    EXPECT_NEAR(gap, expected, 1e-14) << "l = " << l;
  }
}

TEST(Aklt, FluctuationMatchesGenericPipeline) {
  for (int l = 1; l <= 20; ++l) {
    const auto report =
        entfluc::schmidt_polarization_fluctuation(aklt::closed_form_spectrum(l));
    EXPECT_NEAR(report.total, aklt::fluctuation(l), 1e-12) << "l = " << l;
  }
}

TEST(Aklt, PolarizationOperatorsMatchDisplay) {
  const auto ops = aklt::schmidt_polarization_operators();
  ComplexMatrix w1 = ComplexMatrix::Zero(4, 4);
  w1(0, 0) = 1.0;
  w1(1, 1) = -1.0;
  ComplexMatrix w2 = ComplexMatrix::Zero(4, 4);
  const double c2 = 1.0 / std::sqrt(3.0);
  w2(0, 0) = c2;
  w2(1, 1) = c2;
  w2(2, 2) = -2.0 * c2;
  ComplexMatrix w3 = ComplexMatrix::Zero(4, 4);
  const double c3 = 1.0 / std::sqrt(6.0);
  w3(0, 0) = c3;
  w3(1, 1) = c3;
  w3(2, 2) = c3;
  w3(3, 3) = -3.0 * c3;
  EXPECT_LE(entfluc::max_abs(ops[0] - w1), 1e-15);
  EXPECT_LE(entfluc::max_abs(ops[1] - w2), 1e-15);
  EXPECT_LE(entfluc::max_abs(ops[2] - w3), 1e-15);

  const auto gens = entfluc::su_n::generators(4);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_LE(entfluc::max_abs(ops[static_cast<std::size_t>(k) - 1] -
                               gens.diagonal(k)),
              1e-15);
  }
}

TEST(Aklt, OracleMatchesClosedFormLengthOne) {
  const auto oracle = aklt::mps_block_spectrum(1);
  ASSERT_EQ(oracle.rank(), 3);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(oracle[j], 1.0 / 3.0, 1e-12);
}

TEST(Aklt, OracleMatchesClosedFormUpToEight) {
  for (int l = 1; l <= 8; ++l) {
    const auto closed = aklt::closed_form_spectrum(l).probabilities();
    const auto oracle = aklt::mps_block_spectrum(l).probabilities();
    for (std::size_t j = 0; j < 4; ++j) {
      const double a = j < closed.size() ? closed[j] : 0.0;
      const double b = j < oracle.size() ? oracle[j] : 0.0;
      EXPECT_NEAR(a, b, 1e-10) << "l = " << l << ", j = " << j;
    }
  }
}

TEST(Aklt, OraclePipelineAgreesWithClosedFluctuation) {
  for (int l : {1, 2, 5, 8}) {
    const auto report =
        entfluc::schmidt_polarization_fluctuation(aklt::mps_block_spectrum(l));
    EXPECT_NEAR(report.total, aklt::fluctuation(l), 1e-10);
  }
}

TEST(Aklt, OracleGuards) {
  EXPECT_THROW(aklt::mps_block_spectrum(13), entfluc::BlockTooLong);
  EXPECT_THROW(aklt::mps_block_spectrum(0), entfluc::InvalidDimension);
  EXPECT_THROW(aklt::closed_form_spectrum(0), entfluc::InvalidDimension);
}

}  // namespace

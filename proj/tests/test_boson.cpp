#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "juddian/boson.hpp"
#include "juddian/numerics/sym_eig.hpp"

using namespace juddian;

TEST(Ladder, SmallestCutoff) {
  const ladder_ops ops = ladder_matrices({1});
  EXPECT_EQ(ops.create(0, 0), 0.0);
  EXPECT_EQ(ops.create(0, 1), 0.0);
  EXPECT_EQ(ops.create(1, 0), 1.0);
  EXPECT_EQ(ops.create(1, 1), 0.0);
  EXPECT_EQ(ops.annihilate(0, 1), 1.0);
  EXPECT_EQ(ops.annihilate(1, 0), 0.0);
}

TEST(Ladder, CommutatorHasBoundaryDefectOnly) {
  const std::size_t m = 50;
  const ladder_ops ops = ladder_matrices({m});
  const matrix comm = ops.annihilate * ops.create - ops.create * ops.annihilate;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      const double expected = i != j ? 0.0 : (i == m ? -static_cast<double>(m) : 1.0);
      EXPECT_NEAR(comm(i, j), expected, 1e-12) << i << "," << j;
    }
  }
}

TEST(Ladder, NumberIsCreateTimesAnnihilate) {
  const ladder_ops ops = ladder_matrices({30});
  const matrix prod = ops.create * ops.annihilate;
  EXPECT_LE((prod - ops.number).max_abs(), 1e-13);
  EXPECT_EQ(ops.annihilate.transpose().data().size(), ops.create.data().size());
  EXPECT_EQ((ops.annihilate.transpose() - ops.create).max_abs(), 0.0);
}

// a = b - z keeps the commutator: the shift cancels exactly.
TEST(Ladder, CoherentShiftPreservesCommutator) {
  const std::size_t m = 40;
  const ladder_ops ops = ladder_matrices({m});
  const double z = 0.8;
  const matrix shift = z * matrix::identity(m + 1);
  const matrix a = ops.annihilate - shift;
  const matrix ad = ops.create - shift;
  const matrix ca = a * ad - ad * a;
  const matrix cb = ops.annihilate * ops.create - ops.create * ops.annihilate;
  EXPECT_LE((ca - cb).max_abs(), 1e-12);
}

TEST(Displacement, ZeroIsIdentity) {
  const matrix d = displacement_matrix({0.0}, {20});
  EXPECT_EQ((d - matrix::identity(21)).max_abs(), 0.0);
}

TEST(Displacement, VacuumOverlap) {
  const matrix d = displacement_matrix({1.0}, {100});
  EXPECT_NEAR(d(0, 0), std::exp(-0.5), 1e-12);
  EXPECT_NEAR(d(0, 0), 0.6065306597, 1e-10);
}

// Column 0 against the closed-form coherent-state expansion.
TEST(Displacement, CoherentStateColumn) {
  const double z = 0.5;
  const matrix d = displacement_matrix({z}, {100});
  double amp = std::exp(-z * z / 2.0);  // n = 0
  for (std::size_t n = 0; n <= 100; ++n) {
    if (n > 0) amp *= z / std::sqrt(static_cast<double>(n));
    EXPECT_NEAR(d(n, 0), amp, 1e-12) << "n = " << n;
  }
}

TEST(Displacement, NearOrthogonal) {
  const std::size_t m = 100;
  for (double z : {0.3, 1.0, 1.52, 2.5, -1.7}) {
    const matrix d = displacement_matrix({z}, {m});
    const matrix dtd = d.transpose() * d;
    const auto lead = m - 4 * static_cast<std::size_t>(std::ceil(z * z));
    double worst = 0.0;
    for (std::size_t i = 0; i < lead; ++i)
      for (std::size_t j = 0; j < lead; ++j) worst = std::max(worst, std::abs(dtd(i, j) - (i == j ? 1.0 : 0.0)));
    EXPECT_LE(worst, 1e-10) << "z = " << z;
  }
}

TEST(Displacement, OppositeShiftsInvert) {
  const matrix dp = displacement_matrix({1.1}, {100});
  const matrix dm = displacement_matrix({-1.1}, {100});
  const matrix prod = dm * dp;
  for (std::size_t i = 0; i < 60; ++i)
    for (std::size_t j = 0; j < 60; ++j) EXPECT_NEAR(prod(i, j), i == j ? 1.0 : 0.0, 1e-10);
}

TEST(Displacement, RejectsTruncationUnsafeAmplitude) {
  EXPECT_THROW(displacement_matrix({5.1}, {100}), cutoff_error);
  EXPECT_NO_THROW(displacement_matrix({5.0}, {100}));
  EXPECT_THROW(displacement_matrix({1.2}, {5}), cutoff_error);
  EXPECT_THROW(displacement_matrix({NAN}, {10}), domain_error);
}

TEST(Squeeze, Examples) {
  auto p = squeeze_params(0.3);
  EXPECT_NEAR(p.omega, 0.8, 1e-15);
  EXPECT_NEAR(p.sigma, 1.0 / 3.0, 1e-15);
  p = squeeze_params(0.4);
  EXPECT_NEAR(p.omega, 0.6, 1e-15);
  EXPECT_NEAR(p.sigma, 0.5, 1e-15);
  p = squeeze_params(0.0);
  EXPECT_EQ(p.omega, 1.0);
  EXPECT_EQ(p.sigma, 0.0);
  EXPECT_THROW(squeeze_params(0.5), domain_error);
  EXPECT_THROW(squeeze_params(-0.7), domain_error);
}

TEST(Squeeze, PhysicalBranchSolvesQuadratic) {
  for (double lam = -0.499; lam < 0.5; lam += 0.0125) {
    const auto p = squeeze_params(lam);
    EXPECT_LT(std::abs(p.sigma), 1.0);
    EXPECT_NEAR(-p.sigma + lam + lam * p.sigma * p.sigma, 0.0, 1e-14) << lam;
    EXPECT_NEAR(std::tanh(p.rho / 2.0), std::abs(p.sigma), 1e-12);
    EXPECT_EQ(p.beta, 0.0);
    if (lam != 0.0) {
      EXPECT_NEAR(p.sigma, (1.0 - p.omega) / (2.0 * lam), 1e-12);
    }
  }
}

TEST(DisplacedOscillator, MatrixEntries) {
  const sym_matrix h0 = displaced_osc_hamiltonian(0.0, {10});
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(h0(n, n), n + 0.5);
  const sym_matrix h = displaced_osc_hamiltonian(0.7, {10});
  EXPECT_EQ(h(0, 1), 0.7);
  EXPECT_EQ(h(1, 0), 0.7);
  EXPECT_EQ(h(0, 2), 0.0);
}

TEST(DisplacedOscillator, SpectrumIsShiftInvariant) {
  for (double lam : {0.0, 0.5, 1.0, 1.5}) {
    const eig_result r = sym_eig(displaced_osc_hamiltonian(lam, {100}));
    for (std::size_t n = 0; n < 10; ++n) EXPECT_NEAR(r.values[n], n + 0.5, 1e-8) << "lambda " << lam;
  }
}

TEST(SqueezedOscillator, MatrixEntries) {
  const sym_matrix h0 = squeezed_osc_hamiltonian(0.0, {10});
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(h0(n, n), n + 0.5);
  const sym_matrix h = squeezed_osc_hamiltonian(0.3, {10});
  EXPECT_DOUBLE_EQ(h(0, 2), std::sqrt(2.0) * 0.3);
  EXPECT_EQ(h(0, 1), 0.0);
  EXPECT_THROW(squeezed_osc_hamiltonian(0.5, {10}), domain_error);
}

TEST(SqueezedOscillator, ScaledLadder) {
  const eig_result r = sym_eig(squeezed_osc_hamiltonian(0.3, {200}));
  for (std::size_t n = 0; n < 10; ++n) EXPECT_NEAR(r.values[n], (n + 0.5) * 0.8, 1e-6);
}

TEST(SqueezedOscillator, UniformGaps) {
  for (double lam : {0.05, 0.2, 0.35}) {
    const double omega = squeeze_params(lam).omega;
    const eig_result r = sym_eig(squeezed_osc_hamiltonian(lam, {200}));
    for (std::size_t n = 0; n + 1 < 8; ++n) EXPECT_NEAR(r.values[n + 1] - r.values[n], omega, 1e-6);
  }
}

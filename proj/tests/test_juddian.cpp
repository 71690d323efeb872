#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "juddian/juddian.hpp"

using namespace juddian;

namespace {

const model_params resonant{1.0, 1.0, 0.0};

// Coefficients (ascending powers of x) of N! * reduced determinant at
// omega_tilde = 1/2, computed once in exact rational arithmetic with an
// independent computer-algebra run and frozen here.
const std::vector<double> exact_n3{-1575.0 / 64.0, 751.0 / 2.0, -820.0, 384.0};
const std::vector<double> exact_n4{99225.0 / 256.0, -62631.0 / 8.0, 25515.0, -23776.0, 6144.0};

double block_norm(const std::vector<double>& v, int parity) {
  double s = 0.0;
  for (std::size_t n = 0; 2 * n + 1 < v.size(); ++n) {
    for (spin sp : {spin::up, spin::down})
      if (parity_of(n, sp) == parity) s += v[basis_index(n, sp)] * v[basis_index(n, sp)];
  }
  return std::sqrt(s);
}

}  // namespace

TEST(Baseline, Examples) {
  EXPECT_NEAR(baseline_energy(1, 0.4330127019), 0.8125000000, 1e-10);
  EXPECT_NEAR(baseline_energy(4, 1.5164984830), 1.7002323511, 1e-9);
  EXPECT_EQ(baseline_energy(3, 0.0), 3.0);
}

TEST(FullSystem, FirstOrderDeterminantVanishesOnCondition) {
  // det is proportional to omega_tilde^2 + 4x - 1 for every omega_tilde
  for (double wt : {0.25, 0.5, 0.9}) {
    const double x0 = (1.0 - wt * wt) / 4.0;
    EXPECT_NEAR(full_system_determinant(1, wt, x0), 0.0, 1e-14);
    const double ratio = full_system_determinant(1, wt, 0.1) / (wt * wt + 0.4 - 1.0);
    for (double x : {0.02, 0.3, 0.7, 1.3})
      EXPECT_NEAR(full_system_determinant(1, wt, x) / (wt * wt + 4.0 * x - 1.0), ratio, 1e-12 * std::abs(ratio));
  }
}

TEST(FullSystem, SecondOrderSignChangesBracketQuadraticRoots) {
  const double r1 = (29.0 - std::sqrt(481.0)) / 64.0;
  const double r2 = (29.0 + std::sqrt(481.0)) / 64.0;
  for (double r : {r1, r2}) {
    const double lo = full_system_determinant(2, 0.5, r - 1e-6);
    const double hi = full_system_determinant(2, 0.5, r + 1e-6);
    EXPECT_LT(lo * hi, 0.0) << "root " << r;
  }
}

TEST(FullSystem, ShapeAndNonRootFullRank) {
  const matrix a = build_full_system(3, 0.5, 0.2);
  EXPECT_EQ(a.rows(), 7u);
  EXPECT_EQ(a.cols(), 7u);
  EXPECT_THROW(null_vector(a), full_rank_error);
  EXPECT_THROW(build_full_system(0, 0.5, 0.2), domain_error);
  EXPECT_THROW(build_full_system(1, 0.5, -0.1), domain_error);
}

TEST(FullSystem, ReducedEliminationMatchesFullRows) {
  // A null vector of the reduced system, extended by the elimination
  // formulas, must annihilate the full system.
  const juddian_point pt = juddian_points(3, resonant).points[1];
  const matrix red = reduced_system_matrix(3, 0.5, pt.x);
  const std::vector<double> p = null_vector(red);
  std::vector<double> v(p);
  for (int n = 0; n < 3; ++n) v.push_back(0.5 * p[n] / (3 - n));
  v.push_back(-2.0 * pt.lambda * std::sqrt(3.0) * p[2] / 0.5);
  const matrix full = build_full_system(3, 0.5, pt.x);
  EXPECT_LE(norm2(full.apply(v)), 1e-10 * full.frobenius_norm());
}

TEST(CompatibilityPolynomial, ClosedFormsForFirstTwoOrders) {
  for (double wt : {0.1, 0.25, 0.5, 0.75, 1.3}) {
    const polynomial p1 = compatibility_polynomial(1, wt);
    const polynomial e1{wt * wt - 1.0, 4.0};
    ASSERT_EQ(p1.degree(), 1);
    for (int k = 0; k <= 1; ++k) EXPECT_NEAR(p1.coeff(k), e1.coeff(k), 1e-12 * e1.max_abs_coeff());

    const double w2 = wt * wt;
    const polynomial p2 = compatibility_polynomial(2, wt);
    const polynomial e2{w2 * w2 - 5.0 * w2 + 4.0, 12.0 * w2 - 32.0, 32.0};
    ASSERT_EQ(p2.degree(), 2);
    EXPECT_GT(p2.leading(), 0.0);
    for (int k = 0; k <= 2; ++k) EXPECT_NEAR(p2.coeff(k), e2.coeff(k), 1e-12 * e2.max_abs_coeff()) << "k " << k;
  }
}

TEST(CompatibilityPolynomial, FrozenHigherOrders) {
  const polynomial p3 = compatibility_polynomial(3, 0.5);
  const polynomial p4 = compatibility_polynomial(4, 0.5);
  for (std::size_t k = 0; k < exact_n3.size(); ++k) EXPECT_NEAR(p3.coeff(k), exact_n3[k], 1e-12 * 820.0);
  for (std::size_t k = 0; k < exact_n4.size(); ++k) EXPECT_NEAR(p4.coeff(k), exact_n4[k], 1e-12 * 25515.0);
}

TEST(CompatibilityPolynomial, ThirdOrderRootsAtResonance) {
  const root_report r = poly_real_roots(compatibility_polynomial(3, 0.5), {1e-12, 3.0});
  ASSERT_EQ(r.roots.size(), 3u);
  const double expected_g[] = {0.1400889590, 0.3664714887, 0.6163829153};
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::sqrt(r.roots[k]) / 2.0, expected_g[k], 1e-10);
}

TEST(JuddianPoints, FirstOrderResonance) {
  const auto set = juddian_points(1, resonant);
  ASSERT_EQ(set.points.size(), 1u);
  const auto& p = set.points[0];
  EXPECT_NEAR(p.g, 0.2165063510, 1e-10);
  EXPECT_NEAR(p.E, 0.8125000000, 1e-12);
  EXPECT_EQ(p.root_index, 1);
  EXPECT_LE(p.det_residual, 1e-12);
  EXPECT_FALSE(set.shortfall);
}

TEST(JuddianPoints, FourthOrderResonance) {
  const auto set = juddian_points(4, resonant);
  ASSERT_EQ(set.points.size(), 4u);
  const double expected_g[] = {0.1234229399, 0.3199075781, 0.5243395120, 0.7582492415};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(set.points[k].g, expected_g[k], 1e-9);
    EXPECT_EQ(set.points[k].root_index, k + 1);
    EXPECT_EQ(set.points[k].E, baseline_energy(4, set.points[k].lambda));
  }
}

TEST(JuddianPoints, BoundaryRootIsFiltered) {
  const model_params p{1.0, 2.0, 0.0};  // omega_tilde = 1: root at x = 0
  const auto set = juddian_points(1, p);
  EXPECT_TRUE(set.points.empty());
  EXPECT_TRUE(set.shortfall);
}

TEST(JuddianPoints, RejectsDegenerateInput) {
  EXPECT_THROW(juddian_points(1, {1.0, 0.0, 0.0}), domain_error);
  EXPECT_THROW(juddian_points(1, {1.0, -1.0, 0.0}), domain_error);
  EXPECT_THROW(juddian_points(0, resonant), domain_error);
}

TEST(JuddianPoints, GScalesWithOmega) {
  // Same omega_tilde, omega = 2: lambda unchanged, g doubles.
  const auto a = juddian_points(2, resonant).points;
  const auto b = juddian_points(2, {2.0, 2.0, 0.0}).points;
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].lambda, b[k].lambda);
    EXPECT_DOUBLE_EQ(b[k].g, 2.0 * a[k].g);
  }
}

TEST(JuddianPoints, BaselineMembershipIsExact) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : juddian_points(n, resonant).points) EXPECT_EQ(p.E, static_cast<double>(n) - p.lambda * p.lambda);
}

TEST(JuddianPoints, BranchInvariance) {
  for (int n = 1; n <= 5; ++n) {
    const auto a = juddian_points(n, resonant, branch::plus).points;
    const auto b = juddian_points(n, resonant, branch::minus).points;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_NEAR(a[k].lambda, b[k].lambda, 1e-12);
      EXPECT_NEAR(a[k].g, b[k].g, 1e-12);
      EXPECT_NEAR(a[k].E, b[k].E, 1e-12);
      EXPECT_EQ(b[k].displacement, branch::minus);
      EXPECT_LE(b[k].det_residual, 1e-12);
    }
  }
}

// Roots of the reduced tridiagonal determinant against sign changes of the
// full (2N+1) determinant.
TEST(JuddianPoints, FullAndReducedRootsAgree) {
  for (double wt : {0.25, 0.5, 0.75}) {
    for (int n = 1; n <= 8; ++n) {
      const bracket br{1e-9, 2.0 * n};
      const auto reduced = poly_real_roots(compatibility_polynomial(n, wt), br, {20000}).roots;
      const auto full = sign_change_roots([&](double x) { return full_system_determinant(n, wt, x); }, br, 20000);
      ASSERT_EQ(reduced.size(), full.size()) << "N " << n << " wt " << wt;
      for (std::size_t k = 0; k < full.size(); ++k) EXPECT_NEAR(reduced[k], full[k], 1e-10) << "N " << n << " wt " << wt;
    }
  }
}

TEST(ReconstructState, FirstOrderCoefficients) {
  const auto pt = juddian_points(1, resonant).points[0];
  const juddian_state st = reconstruct_state(pt, {100});
  ASSERT_EQ(st.p.size(), 1u);
  ASSERT_EQ(st.q.size(), 2u);
  EXPECT_GT(st.p[0], 0.0);
  EXPECT_NEAR(st.q[0], pt.omega_tilde * st.p[0] / (1 - 0), 1e-14);
  EXPECT_NEAR(st.q[1], -2.0 * pt.lambda * st.p[0] / pt.omega_tilde, 1e-14);
  EXPECT_NEAR(norm2(st.fock_vector), 1.0, 1e-10);
  EXPECT_EQ(st.fock_vector.size(), 2u * 101u);
}

TEST(ReconstructState, ResidualAndMixedParityForFirstTenPoints) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& pt : juddian_points(n, resonant).points) {
      const juddian_state st = reconstruct_state(pt, {100});
      EXPECT_LE(eigen_residual(pt, st, {100}), 1e-6);
      EXPECT_NEAR(norm2(st.fock_vector), 1.0, 1e-10);
      double coeff_norm = 0.0;
      for (double v : st.p) coeff_norm += v * v;
      for (double v : st.q) coeff_norm += v * v;
      EXPECT_NEAR(coeff_norm, 1.0, 1e-10);
      EXPECT_NE(st.q.back(), 0.0);
      EXPECT_GE(block_norm(st.fock_vector, +1), 1e-3);
      EXPECT_GE(block_norm(st.fock_vector, -1), 1e-3);
    }
  }
}

TEST(ReconstructState, OffLocusIsRejected) {
  auto pt = juddian_points(2, resonant).points[0];
  pt.x += 1e-3;
  pt.lambda = std::sqrt(pt.x);
  EXPECT_THROW(reconstruct_state(pt, {100}), full_rank_error);
}

TEST(ReconstructState, CutoffTooSmallForDisplacement) {
  const auto pt = juddian_points(4, resonant).points[3];  // lambda^2 ~ 2.3
  EXPECT_THROW(reconstruct_state(pt, {8}), cutoff_error);
}

TEST(AlternateBranch, SwapKeepsPointAndIsInvolution) {
  const auto pt = juddian_points(3, resonant).points[2];
  const auto alt = alternate_branch(pt);
  EXPECT_EQ(alt.lambda, pt.lambda);
  EXPECT_EQ(alt.g, pt.g);
  EXPECT_EQ(alt.E, pt.E);
  EXPECT_EQ(alt.displacement, branch::minus);
  const auto back = alternate_branch(alt);
  EXPECT_EQ(back.displacement, branch::plus);
  EXPECT_EQ(back.x, pt.x);
}

// The alternate Ansatz is the parity image of the original one: its
// coefficients are (-1)^n times the original ones, up to overall sign.
TEST(AlternateBranch, StateIsParityImage) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& pt : juddian_points(n, resonant).points) {
      const auto alt = alternate_branch(pt);
      const juddian_state s = reconstruct_state(pt, {100});
      const juddian_state a = reconstruct_state(alt, {100});
      EXPECT_LE(eigen_residual(alt, a, {100}), 1e-6);
      EXPECT_EQ(a.displacement, branch::minus);
      const double sign = a.p[0] / s.p[0] > 0 ? 1.0 : -1.0;
      for (std::size_t k = 0; k < s.p.size(); ++k)
        EXPECT_NEAR(a.p[k], sign * (k % 2 ? -1.0 : 1.0) * s.p[k], 1e-10);
      for (std::size_t k = 0; k < s.q.size(); ++k)
        EXPECT_NEAR(a.q[k], sign * (k % 2 ? -1.0 : 1.0) * s.q[k], 1e-10);

      // Fock vector equals +-(Pi psi); the overall sign is its own.
      std::vector<double> image(s.fock_vector.size());
      for (std::size_t m = 0; 2 * m < image.size(); ++m)
        for (spin sp : {spin::up, spin::down})
          image[basis_index(m, sp)] = parity_of(m, sp) * s.fock_vector[basis_index(m, sp)];
      const double ov = dot(a.fock_vector, image);
      EXPECT_NEAR(std::abs(ov), 1.0, 1e-10);
      for (std::size_t i = 0; i < image.size(); ++i) EXPECT_NEAR(a.fock_vector[i], ov * image[i], 1e-9);
    }
  }
}

TEST(VerifyPoint, FirstAndLastTablePoints) {
  const auto first = verify_point(juddian_points(1, resonant).points[0], {100});
  EXPECT_LE(first.point.degeneracy_gap, 1e-6);
  EXPECT_LE(first.eigen_residual, 1e-6);

  const auto last_pt = juddian_points(4, resonant).points[3];
  EXPECT_NEAR(last_pt.g, 0.7582492415, 1e-9);
  const auto last = verify_point(last_pt, {100});
  EXPECT_NEAR(last.E_plus, 1.7002323511, 1e-6);
  EXPECT_NEAR(last.E_minus, 1.7002323511, 1e-6);
}

TEST(VerifyPoint, PerturbedCouplingOpensGap) {
  auto pt = juddian_points(1, resonant).points[0];
  pt.g += 1e-3;
  const auto v = verify_point(pt, {100});
  EXPECT_GT(v.point.degeneracy_gap, 1e-3);
}

TEST(VerifyPoint, FarOffPointHasNoNearbyLevel) {
  auto pt = juddian_points(1, resonant).points[0];
  pt.E += 0.2;
  EXPECT_THROW(verify_point(pt, {100}), cutoff_error);
}

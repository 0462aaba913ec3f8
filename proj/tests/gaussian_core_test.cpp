#include "gkpft/gaussian_core.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gkpft/noise_model.hpp"
#include "gkpft/symplectic.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gkpft;
using gkpft_test::diag_cov;
using gkpft_test::int_mat;
using gkpft_test::make_cov;

TEST(Rational, NormalizationAndArithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(7) - Rational(7), Rational(0));
  EXPECT_EQ((-Rational(3, 4)).num(), -3);
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_EQ(Rational(-4, 2).str(), "-2");
  EXPECT_EQ(Rational(3, 2).str(), "3/2");
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}

TEST(Rational, Errors) {
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::invalid_argument);
  EXPECT_THROW(Rational(INT64_MAX) * Rational(3), std::overflow_error);
}

TEST(Mat, Basics) {
  const auto f = two_mode_fourier_exact();
  EXPECT_EQ(f * f.transposed(), Mat<Rational>::identity(4));
  EXPECT_THROW(Mat<Rational>(2, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW((Mat<Rational>(2) + Mat<Rational>(4)), std::invalid_argument);
}

TEST(SymbolicCovariance, ConstructionContracts) {
  EXPECT_THROW(SymbolicCovariance(Mat<Rational>(3), Mat<Rational>(3)), std::invalid_argument);
  EXPECT_THROW(SymbolicCovariance(Mat<Rational>(2), Mat<Rational>(4)), std::invalid_argument);
  EXPECT_THROW(make_cov(2, {0, 1, 0, 0}, {0, 0, 0, 0}), std::invalid_argument);
}

TEST(NoiseModel, Contracts) {
  EXPECT_THROW(NoiseModel(0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(NoiseModel(0.1, -1.0), std::invalid_argument);
  EXPECT_TRUE(NoiseModel::symmetric(0.01).is_symmetric());
  EXPECT_DOUBLE_EQ(NoiseModel::symmetric(0.01).sigma2(), 0.01);
  EXPECT_THROW(NoiseModel(0.1, 0.2).sigma2(), std::logic_error);
  EXPECT_FALSE(NoiseModel(0.1, 0.2).is_symmetric());
}

TEST(SymplecticMap, CanonicalMapsPreserveTheForm) {
  for (double m : {0.0, 1.0, -1.0, 2.0, 0.5, -3.25}) {
    EXPECT_TRUE(SymplecticMap::shear_step(m).is_symplectic(1e-12)) << "m=" << m;
  }
  EXPECT_TRUE(SymplecticMap::two_mode_fourier().is_symplectic(1e-12));
  EXPECT_TRUE(SymplecticMap::cz(-1.0).is_symplectic(1e-12));
  EXPECT_TRUE(SymplecticMap::cz(1.0).is_symplectic(1e-12));
  EXPECT_THROW(SymplecticMap(Mat<double>(3)), std::invalid_argument);

  // Not symplectic: a bare projector.
  EXPECT_FALSE(SymplecticMap(Mat<double>::diagonal({0.0, 1.0})).is_symplectic(1e-12));
}

TEST(SingleModeStep, StandardInputShearOne) {
  // m=1 on the standard input produces [[3d+e, -d], [-d, d+e]].
  const auto eta0 = make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 1});
  const auto out = single_mode_step(eta0, Rational(1));
  EXPECT_EQ(out, make_cov(2, {3, -1, -1, 1}, {1, 0, 0, 1}));
}

TEST(SingleModeStep, PureNoiseInjectionOnZero) {
  const auto out = single_mode_step(SymbolicCovariance::zero(2), Rational(0));
  EXPECT_EQ(out, make_cov(2, {0, 0, 0, 0}, {0, 0, 0, 1}));
}

TEST(SingleModeStep, StandardInputShearZero) {
  const auto eta0 = make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 1});
  const auto out = single_mode_step(eta0, Rational(0));
  EXPECT_EQ(out, make_cov(2, {2, 0, 0, 1}, {1, 0, 0, 1}));
}

TEST(SingleModeStep, DimensionContract) {
  EXPECT_THROW(single_mode_step(SymbolicCovariance::zero(4), Rational(0)),
               std::invalid_argument);
}

TEST(CorrectMap, SingleModeExamples) {
  // [[2d+2e, 0], [0, d+2e]] -> [[d, 0], [0, 2d+2e]]
  const auto eta3 = make_cov(2, {2, 0, 0, 1}, {2, 0, 0, 2});
  EXPECT_EQ(correct_map(eta3), make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 2}));

  // delta * identity -> [[d, 0], [0, 2d]]
  const auto eta = diag_cov({1, 1}, {0, 0});
  EXPECT_EQ(correct_map(eta), make_cov(2, {1, 0, 0, 2}, {0, 0, 0, 0}));
}

TEST(CorrectMap, TwoModeExample) {
  const auto eta4 = diag_cov({2, 2, 1, 1}, {2, 2, 1, 1});
  EXPECT_EQ(correct_map(eta4), diag_cov({1, 1, 2, 2}, {0, 0, 1, 1}));
}

TEST(TwoModeStep, ZeroAndScaledIdentity) {
  EXPECT_EQ(two_mode_step(SymbolicCovariance::zero(4)),
            diag_cov({0, 0, 0, 0}, {0, 0, 1, 1}));
  // The two-mode Fourier map is orthogonal, so c*I is invariant up to the noise.
  const auto c_id = diag_cov({3, 3, 3, 3}, {0, 0, 0, 0});
  EXPECT_EQ(two_mode_step(c_id), diag_cov({3, 3, 3, 3}, {0, 0, 1, 1}));
  EXPECT_THROW(two_mode_step(SymbolicCovariance::zero(2)), std::invalid_argument);
}

TEST(TwoModeStep, CzInputAdvancesToFirstRow) {
  const auto eta0_prime = make_cov(4,
                                   {1, 0, 0, -1,   //
                                    0, 1, -1, 0,   //
                                    0, -1, 3, 0,   //
                                    -1, 0, 0, 3},
                                   {0, 0, 0, 0,   //
                                    0, 0, 0, 0,   //
                                    0, 0, 2, 0,   //
                                    0, 0, 0, 2});
  const auto eta1 = make_cov(4,
                             {3, 0, 0, 1,   //
                              0, 3, 1, 0,   //
                              0, 1, 1, 0,   //
                              1, 0, 0, 1},
                             {2, 0, 0, 0,   //
                              0, 2, 0, 0,   //
                              0, 0, 1, 0,   //
                              0, 0, 0, 1});
  EXPECT_EQ(two_mode_step(eta0_prime), eta1);
}

TEST(CzInject, StandardInput) {
  const auto eta0 = diag_cov({1, 1, 2, 2}, {0, 0, 1, 1});
  const auto expected = make_cov(4,
                                 {1, 0, 0, -1,   //
                                  0, 1, -1, 0,   //
                                  0, -1, 3, 0,   //
                                  -1, 0, 0, 3},
                                 {0, 0, 0, 0,   //
                                  0, 0, 0, 0,   //
                                  0, 0, 2, 0,   //
                                  0, 0, 0, 2});
  EXPECT_EQ(cz_inject(eta0), expected);
  EXPECT_EQ(cz_inject(SymbolicCovariance::zero(4)), diag_cov({0, 0, 0, 0}, {0, 0, 1, 1}));
  EXPECT_THROW(cz_inject(SymbolicCovariance::zero(2)), std::invalid_argument);
  EXPECT_THROW(cz_exact(2), std::invalid_argument);
}

TEST(CzInject, MatchesDenseNumericOracle) {
  // Random PSD coefficient matrices; numeric result at delta = epsilon = 0.01
  // must equal an independent dense-matrix evaluation.
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> entry(-2, 2);
  const NoiseModel noise = NoiseModel::symmetric(0.01);

  for (int trial = 0; trial < 20; ++trial) {
    Mat<Rational> md(4);
    Mat<Rational> me(4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        md(r, c) = Rational(entry(rng));
        me(r, c) = Rational(entry(rng));
      }
    const SymbolicCovariance eta(md.transposed() * md, me.transposed() * me);
    ASSERT_TRUE(eta.is_psd_at(noise));

    const Mat<double> numeric = cz_inject(eta, -1).evaluate(noise);

    std::vector<double> dense(16), cz(16);
    const Mat<double> eta_num = eta.evaluate(noise);
    const Mat<double> cz_map = SymplecticMap::cz(-1.0).entries();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        dense[static_cast<std::size_t>(r) * 4 + c] = eta_num(r, c);
        cz[static_cast<std::size_t>(r) * 4 + c] = cz_map(r, c);
      }
    auto out = oracles::dense_mul(oracles::dense_mul(cz, dense, 4),
                                  oracles::dense_transpose(cz, 4), 4);
    out[2 * 4 + 2] += noise.epsilon;
    out[3 * 4 + 3] += noise.epsilon;

    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        EXPECT_NEAR(numeric(r, c), out[static_cast<std::size_t>(r) * 4 + c], 1e-12);
  }
}

TEST(Evolution, SymmetryIsPreservedExactly) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Mat<Rational> d(4);
    Mat<Rational> e(4);
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) {
        d(r, c) = d(c, r) = Rational(entry(rng));
        e(r, c) = e(c, r) = Rational(entry(rng), 2);
      }
    const SymbolicCovariance eta(d, e);
    EXPECT_TRUE(two_mode_step(eta).is_symmetric());
    EXPECT_TRUE(cz_inject(eta).is_symmetric());
    EXPECT_TRUE(correct_map(eta).is_symmetric());
  }
  std::uniform_int_distribution<int> num(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Mat<Rational> d(2);
    Mat<Rational> e(2);
    for (int r = 0; r < 2; ++r)
      for (int c = r; c < 2; ++c) {
        d(r, c) = d(c, r) = Rational(num(rng));
        e(r, c) = e(c, r) = Rational(num(rng));
      }
    const SymbolicCovariance eta(d, e);
    const Rational m(num(rng), 3);
    EXPECT_TRUE(single_mode_step(eta, m).is_symmetric());
    EXPECT_TRUE(correct_map(eta).is_symmetric());
  }
}

TEST(Matrix, CholeskyAndEigenvalues) {
  const Mat<double> a(2, {4.0, 2.0, 2.0, 3.0});
  const Mat<double> l = cholesky(a);
  EXPECT_LE(max_abs_diff(l * l.transposed(), a), 1e-14);

  const auto eig = symmetric_eigenvalues(Mat<double>::diagonal({3.0, -1.0}));
  EXPECT_TRUE((eig[0] == 3.0 && eig[1] == -1.0) || (eig[0] == -1.0 && eig[1] == 3.0));
  EXPECT_FALSE(is_positive_semidefinite(Mat<double>::diagonal({1.0, -0.5})));
  EXPECT_TRUE(is_positive_semidefinite(Mat<double>::diagonal({1.0, 0.0})));
}

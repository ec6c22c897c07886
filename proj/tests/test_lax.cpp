#include <gtest/gtest.h>

#include <random>

#include "gz/error.hpp"
#include "gz/lax.hpp"
#include "gz/matpoly.hpp"
#include "gz/random.hpp"
#include "oracles.hpp"

using namespace gz;

namespace {

TimeMatrixFunction constant(const Matrix& a) {
  return [a](double) { return a; };
}

double max_diff(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  double d = 0.0;
  for (std::size_t q = 0; q < a.size(); ++q) d = std::max(d, (a[q] - b[q]).norm());
  return d;
}

// Exact solution for constant alpha: beta(t) = e^{-(t-a) alpha} beta(a) e^{(t-a) alpha}.
Matrix closed_form(const Matrix& alpha, const Matrix& beta_a, double s) {
  return oracle::taylor_exp(-s * alpha) * beta_a * oracle::taylor_exp(s * alpha);
}

LaxTangent constant_tangent(const LaxPath& p, const Matrix& da, const Matrix& db) {
  return {std::vector<Matrix>(p.grid.size(), da), std::vector<Matrix>(p.grid.size(), db)};
}

}  // namespace

TEST(LaxIntegrate, ZeroAlphaKeepsBetaConstant) {
  std::mt19937_64 rng(81);
  const Matrix beta = random_matrix(3, 3, rng);
  const LaxPath p = lax_integrate(constant(Matrix::Zero(3, 3)), beta, 0.0, 1.0, 50);
  ASSERT_EQ(p.grid.size(), 51u);
  for (const Matrix& b : p.beta) EXPECT_EQ(b, beta);
  EXPECT_LE(p.residual, 1e-12);
}

TEST(LaxIntegrate, CommutingDiagonals) {
  Vector da(3), db(3);
  da << 1.0, Complex(0.0, 2.0), -0.5;
  db << 0.3, 0.7, Complex(1.0, 1.0);
  const Matrix beta = db.asDiagonal();
  const LaxPath p = lax_integrate([&](double t) { return Matrix(Matrix(da.asDiagonal()) * (1.0 + t)); }, beta, 0.0, 1.0, 40);
  for (const Matrix& b : p.beta) EXPECT_EQ(b, beta);
}

TEST(LaxIntegrate, ConstantAlphaClosedForm) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 4;
    const Matrix alpha = clamp_norm(random_matrix(n, n, rng), 1.0);
    const Matrix beta = clamp_norm(random_matrix(n, n, rng), 1.0);
    const LaxPath p = lax_integrate(constant(alpha), beta, 0.5, 1.5, 200);
    double worst = 0.0;
    for (std::size_t q = 0; q < p.grid.size(); ++q)
      worst = std::max(worst, (p.beta[q] - closed_form(alpha, beta, p.grid[q] - 0.5)).norm());
    EXPECT_LE(worst, 1e-8);
    EXPECT_LE(p.drift, 1e-8);
    EXPECT_LE(p.residual, 1e-6);
    EXPECT_GE(p.richardson, 0.0);
    EXPECT_LE(p.richardson, 1e-8);
  }
}

TEST(LaxIntegrate, IsospectralForTimeDependentAlpha) {
  std::mt19937_64 rng(83);
  const Matrix a0 = clamp_norm(random_matrix(3, 3, rng), 0.5);
  const Matrix a1 = clamp_norm(random_matrix(3, 3, rng), 0.5);
  const Matrix beta = clamp_norm(random_matrix(3, 3, rng), 1.0);
  const LaxPath p = lax_integrate([&](double t) { return Matrix(a0 + t * a1); }, beta, 0.0, 1.0, 200);
  const Polynomial start = charpoly(beta);
  for (const Matrix& b : p.beta) EXPECT_LE(charpoly(b).max_coeff_distance(start), 1e-8);
  EXPECT_LE(isospectral_drift(p), 1e-8);
}

TEST(LaxIntegrate, RejectsBadArguments) {
  EXPECT_THROW(lax_integrate(constant(Matrix::Zero(2, 2)), Matrix::Zero(2, 2), 1.0, 0.0, 10), DomainError);
  EXPECT_THROW(lax_integrate(constant(Matrix::Zero(2, 2)), Matrix::Zero(2, 2), 0.0, 1.0, 0), DomainError);
  EXPECT_THROW(lax_integrate(constant(Matrix::Zero(3, 3)), Matrix::Zero(2, 2), 0.0, 1.0, 10), DomainError);
}

TEST(Differentiate, ExactOnQuartics) {
  std::vector<double> grid;
  std::vector<Matrix> values;
  for (int q = 0; q <= 20; ++q) {
    const double t = 0.05 * q;
    grid.push_back(t);
    values.push_back(Matrix::Constant(1, 1, Complex(t * t * t * t - 2.0 * t, t * t)));
  }
  const auto d = differentiate(grid, values);
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double t = grid[q];
    EXPECT_LE(std::abs(d[q](0, 0) - Complex(4.0 * t * t * t - 2.0, 2.0 * t)), 1e-11);
  }
}

TEST(GaugeApply, IdentityGauge) {
  std::mt19937_64 rng(84);
  const LaxPath p = lax_integrate(constant(clamp_norm(random_matrix(3, 3, rng), 1.0)), random_matrix(3, 3, rng), 0.0, 1.0, 40);
  const LaxPath q = gauge_apply(std::vector<Matrix>(p.grid.size(), Matrix::Identity(3, 3)), p);
  EXPECT_LE(max_diff(q.alpha, p.alpha), 1e-15);
  EXPECT_LE(max_diff(q.beta, p.beta), 1e-15);
}

TEST(GaugeApply, ConstantGauge) {
  std::mt19937_64 rng(85);
  const LaxPath p = lax_integrate(constant(clamp_norm(random_matrix(3, 3, rng), 1.0)), random_matrix(3, 3, rng), 0.0, 1.0, 40);
  const Matrix g = random_matrix(3, 3, rng) + 2.0 * Matrix::Identity(3, 3);
  const Matrix g_inv = g.inverse();
  const LaxPath q = gauge_apply([&](double) { return g; }, p);
  for (std::size_t k = 0; k < p.grid.size(); ++k) {
    EXPECT_LE((q.alpha[k] - g * p.alpha[k] * g_inv).norm(), 1e-12);
    EXPECT_LE((q.beta[k] - g * p.beta[k] * g_inv).norm(), 1e-12);
  }
}

TEST(GaugeApply, CovariantResidual) {
  std::mt19937_64 rng(86);
  const Matrix alpha = clamp_norm(random_matrix(3, 3, rng), 1.0);
  const Matrix gen = clamp_norm(random_matrix(3, 3, rng), 1.0);
  for (int steps : {100, 200}) {
    const LaxPath p = lax_integrate(constant(alpha), clamp_norm(random_matrix(3, 3, rng), 1.0), 0.0, 1.0, steps);
    const LaxPath q = gauge_apply([&](double t) { return Matrix(matexp(t * gen)); }, p);
    const double h = 1.0 / steps;
    EXPECT_LE(lax_residual(q), 5.0 * lax_residual(p) + 10.0 * h * h);
  }
}

TEST(GaugeApply, RejectsGridMismatch) {
  const LaxPath p = lax_integrate(constant(Matrix::Zero(2, 2)), Matrix::Identity(2, 2), 0.0, 1.0, 10);
  EXPECT_THROW(gauge_apply(std::vector<Matrix>(5, Matrix::Identity(2, 2)), p), DomainError);
}

TEST(GaugeFix, ZeroAlpha) {
  std::mt19937_64 rng(87);
  const Matrix beta = random_matrix(3, 3, rng);
  const LaxPath p = lax_integrate(constant(Matrix::Zero(3, 3)), beta, 0.0, 1.0, 20);
  const GaugeFix fix = gauge_fix_regular(p);
  EXPECT_EQ(fix.g_b, Matrix(Matrix::Identity(3, 3)));
  EXPECT_EQ(fix.X, beta);
}

TEST(GaugeFix, ConstantAlphaClosedForm) {
  std::mt19937_64 rng(88);
  for (int n = 1; n <= 4; ++n) {
    const Matrix alpha = clamp_norm(random_matrix(n, n, rng), 1.0);
    const Matrix beta = clamp_norm(random_matrix(n, n, rng), 1.0);
    const LaxPath p = lax_integrate(constant(alpha), beta, 0.0, 1.0, 200);
    const GaugeFix fix = gauge_fix_regular(p);
    EXPECT_LE((fix.g_b - oracle::taylor_exp(alpha)).norm(), 1e-8);
    EXPECT_LE((fix.X - beta).norm(), 1e-8);
    EXPECT_LE(charpoly(fix.X).max_coeff_distance(charpoly(beta)), 1e-8);
    EXPECT_LE(fix.drift, 1e-8);
  }
}

TEST(GaugeFix, RoundTrip) {
  std::mt19937_64 rng(89);
  for (int n = 2; n <= 4; ++n) {
    const Matrix a0 = clamp_norm(random_matrix(n, n, rng), 0.7);
    const Matrix a1 = clamp_norm(random_matrix(n, n, rng), 0.3);
    const LaxPath p = lax_integrate([&](double t) { return Matrix(a0 + t * a1); }, clamp_norm(random_matrix(n, n, rng), 1.0), 0.0, 1.0, 200);
    const GaugeFix fix = gauge_fix_regular(p);
    const LaxPath fixed = gauge_apply(fix.g_path, p);
    for (const Matrix& a : fixed.alpha) EXPECT_LE(a.norm(), 1e-6);
    std::vector<Matrix> inverse;
    for (const Matrix& g : fix.g_path) inverse.push_back(g.inverse());
    const LaxPath back = gauge_apply(inverse, fixed);
    EXPECT_LE(max_diff(back.alpha, p.alpha), 1e-6);
    EXPECT_LE(max_diff(back.beta, p.beta), 1e-6);
  }
}

TEST(GaugeFix, RejectsNonSolution) {
  LaxPath p = lax_integrate(constant(Matrix::Identity(2, 2)), Matrix::Identity(2, 2), 0.0, 1.0, 20);
  Matrix bump = Matrix::Zero(2, 2);
  bump(0, 1) = 1.0;
  for (std::size_t q = 0; q < p.grid.size(); ++q) p.beta[q] += p.grid[q] * bump;
  EXPECT_THROW(gauge_fix_regular(p), ValidationError);
}

TEST(LaxSymplectic, Examples) {
  std::mt19937_64 rng(90);
  const Matrix beta = random_matrix(3, 3, rng);
  const LaxPath p = lax_integrate(constant(Matrix::Zero(3, 3)), beta, 0.0, 1.0, 10);
  const Matrix da1 = random_matrix(3, 3, rng), db1 = random_matrix(3, 3, rng);
  const Matrix da2 = random_matrix(3, 3, rng), db2 = random_matrix(3, 3, rng);
  const LaxTangent t1 = constant_tangent(p, da1, db1);
  const LaxTangent t2 = constant_tangent(p, da2, db2);
  EXPECT_EQ(lax_symplectic(p, t1, t1), Complex(0.0));
  EXPECT_EQ(lax_symplectic(p, t1, constant_tangent(p, Matrix::Zero(3, 3), Matrix::Zero(3, 3))), Complex(0.0));
  const Complex expected = (da1 * db2 - da2 * db1).trace();
  EXPECT_LE(std::abs(lax_symplectic(p, t1, t2) - expected), 1e-13);
}

TEST(LaxSymplectic, AntisymmetricAndBilinear) {
  std::mt19937_64 rng(91);
  const LaxPath p = lax_integrate(constant(clamp_norm(random_matrix(2, 2, rng), 1.0)), random_matrix(2, 2, rng), 0.0, 2.0, 30);
  auto random_tangent = [&]() {
    LaxTangent t;
    for (std::size_t q = 0; q < p.grid.size(); ++q) {
      t.alpha.push_back(random_matrix(2, 2, rng));
      t.beta.push_back(random_matrix(2, 2, rng));
    }
    return t;
  };
  const LaxTangent t1 = random_tangent(), t2 = random_tangent(), t3 = random_tangent();
  const Complex c(0.3, -1.2);
  LaxTangent mix = t2;
  for (std::size_t q = 0; q < p.grid.size(); ++q) {
    mix.alpha[q] = c * t2.alpha[q] + t3.alpha[q];
    mix.beta[q] = c * t2.beta[q] + t3.beta[q];
  }
  const Complex w12 = lax_symplectic(p, t1, t2);
  EXPECT_LE(std::abs(w12 + lax_symplectic(p, t2, t1)), 1e-13);
  EXPECT_LE(std::abs(lax_symplectic(p, t1, mix) - (c * w12 + lax_symplectic(p, t1, t3))), 1e-12);
  LaxTangent short_tangent = t1;
  short_tangent.alpha.pop_back();
  EXPECT_THROW(lax_symplectic(p, short_tangent, t2), DomainError);
}

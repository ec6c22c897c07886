#include <gtest/gtest.h>

#include <random>

#include "gz/error.hpp"
#include "gz/gzcore.hpp"
#include "gz/matpoly.hpp"
#include "gz/random.hpp"
#include "gz/spaces.hpp"

using namespace gz;

namespace {

Matrix shift(int n) { return companion_of(Polynomial::monomial(n)); }

CotangentPoint random_cotangent(int n, std::mt19937_64& rng) {
  return cotangent_validate(random_matrix(n, n, rng) + 2.0 * Matrix::Identity(n, n), random_matrix(n, n, rng));
}

GZGroupElement random_lambda(int n, std::mt19937_64& rng) {
  GZGroupElement g = GZGroupElement::zero(n);
  for (auto& p : g.params) p = random_unit_disk(rng);
  return g;
}

double coord_defect(const GZCoordinates& a, const GZCoordinates& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    worst = std::max(worst, std::abs(a.values[k] - b.values[k]) / (1.0 + std::abs(a.values[k])));
  return worst;
}

}  // namespace

TEST(VnValidate, ShiftWithFirstBasisVector) {
  for (int n = 1; n <= 5; ++n) EXPECT_NO_THROW(vn_validate(shift(n), Vector::Unit(n, 0)));
}

TEST(VnValidate, RejectsScalarMatrix) {
  Vector b(2);
  b << 1.0, Complex(0.0, 2.0);
  EXPECT_THROW(vn_validate(Matrix::Identity(2, 2), b), ValidationError);
}

TEST(VnValidate, RandomPointsAgreeWithRankOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix b_mat = random_matrix(4, 4, rng);
    const Vector b = random_vector(4, rng);
    Matrix k(4, 4);
    Vector col = b;
    for (int j = 0; j < 4; ++j) {
      k.col(j) = col;
      col = b_mat * col;
    }
    Eigen::JacobiSVD<Matrix> svd(k);
    ASSERT_GT(svd.singularValues()(3), 1e-8 * svd.singularValues()(0));
    EXPECT_NO_THROW(vn_validate(b_mat, b));
  }
}

TEST(VnValidate, RejectsShapeMismatch) {
  EXPECT_THROW(vn_validate(Matrix::Identity(3, 3), Vector::Ones(2)), DomainError);
}

TEST(VnIso, Shift) {
  for (int n = 1; n <= 4; ++n) {
    const VnChart c = vn_iso(vn_validate(shift(n), Vector::Unit(n, 0)));
    EXPECT_EQ(c.krylov, Matrix(Matrix::Identity(n, n)));
    ASSERT_EQ(c.traces.size(), static_cast<std::size_t>(n));
    for (Complex t : c.traces) EXPECT_EQ(t, Complex(0.0));
  }
}

TEST(VnIso, DiagonalExample) {
  Matrix b_mat = Matrix::Zero(2, 2);
  b_mat(0, 0) = 1.0;
  b_mat(1, 1) = 2.0;
  const VnChart c = vn_iso(vn_validate(b_mat, Vector::Ones(2)));
  Matrix expected(2, 2);
  expected << 1.0, 1.0, 1.0, 2.0;
  EXPECT_EQ(c.krylov, expected);
  EXPECT_EQ(c.traces, (ComplexList{3.0, 5.0}));
}

TEST(VnFlow, CentreScalesVector) {
  std::mt19937_64 rng(42);
  const int n = 3;
  const VnPoint p = vn_validate(random_matrix(n, n, rng), random_vector(n, rng));
  const Complex z(0.2, 0.9);
  const VnPoint q = vn_gz_flow(p, GZGroupElement::single(n, {n, 1}, z));
  EXPECT_LE((q.B - p.B).norm(), 1e-14);
  EXPECT_LE((q.b - std::exp(z) * p.b).norm(), 1e-14);
}

TEST(VnFlow, ZeroIsIdentity) {
  std::mt19937_64 rng(43);
  const VnPoint p = vn_validate(random_matrix(3, 3, rng), random_vector(3, rng));
  const VnPoint q = vn_gz_flow(p, GZGroupElement::zero(3));
  EXPECT_LE(point_distance(p, q), 1e-15);
}

TEST(VnFlow, PreservesValidityAndMoments) {
  std::mt19937_64 rng(44);
  for (int n = 1; n <= 5; ++n) {
    const VnPoint p = vn_validate(random_matrix(n, n, rng), random_vector(n, rng));
    const VnPoint q = vn_gz_flow(p, random_lambda(n, rng));
    EXPECT_EQ(krylov_rank(q.B, q.b), n);
    EXPECT_NO_THROW(vn_validate(q.B, q.b));
    EXPECT_LE(coord_defect(gz_map(p.B), gz_map(q.B)), 1e-9);
  }
}

TEST(VnFlow, BComponentIsGzFlow) {
  std::mt19937_64 rng(45);
  const VnPoint p = vn_validate(random_matrix(4, 4, rng), random_vector(4, rng));
  const GZGroupElement l = random_lambda(4, rng);
  EXPECT_LE((vn_gz_flow(p, l).B - gz_flow(p.B, l)).norm(), 1e-13);
}

TEST(Cotangent, RejectsSingularG) {
  Matrix g(2, 2);
  g << 1.0, 2.0, 2.0, 4.0;
  EXPECT_THROW(cotangent_validate(g, Matrix::Identity(2, 2)), ValidationError);
  EXPECT_THROW(cotangent_validate(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DomainError);
}

TEST(Cotangent, RightMoment) {
  std::mt19937_64 rng(46);
  const CotangentPoint x = random_cotangent(3, rng);
  EXPECT_LE((right_moment(x) + x.g.inverse() * x.B * x.g).norm(), 1e-12);
}

TEST(Symplectic, VanishesOnZeroTangents) {
  std::mt19937_64 rng(47);
  const CotangentPoint x = cotangent_validate(Matrix::Identity(3, 3), Matrix::Zero(3, 3));
  const Matrix rho = random_matrix(3, 3, rng);
  const Matrix z = Matrix::Zero(3, 3);
  EXPECT_EQ(tgl_symplectic(x, rho, z, random_matrix(3, 3, rng), z), Complex(0.0));
}

TEST(Symplectic, CanonicalPairing) {
  std::mt19937_64 rng(48);
  const CotangentPoint x = random_cotangent(3, rng);
  const Matrix rho1 = random_matrix(3, 3, rng);
  const Matrix b2 = random_matrix(3, 3, rng);
  const Matrix z = Matrix::Zero(3, 3);
  EXPECT_LE(std::abs(tgl_symplectic(x, rho1, z, z, b2) - (rho1 * b2).trace()), 1e-14);
}

TEST(Symplectic, AntisymmetricAndCanonicalAtZero) {
  std::mt19937_64 rng(49);
  const CotangentPoint x = random_cotangent(4, rng);
  const Matrix r1 = random_matrix(4, 4, rng), b1 = random_matrix(4, 4, rng);
  const Matrix r2 = random_matrix(4, 4, rng), b2 = random_matrix(4, 4, rng);
  EXPECT_LE(std::abs(tgl_symplectic(x, r1, b1, r2, b2) + tgl_symplectic(x, r2, b2, r1, b1)), 1e-13);
  const CotangentPoint zero_b = cotangent_validate(x.g, Matrix::Zero(4, 4));
  EXPECT_LE(std::abs(tgl_symplectic(zero_b, r1, b1, r2, b2) - (r1 * b2 - r2 * b1).trace()), 1e-13);
}

TEST(TglFlow, LeftCentreFixesB) {
  std::mt19937_64 rng(50);
  const CotangentPoint x = random_cotangent(3, rng);
  const Complex z(0.3, 0.1);
  for (int i = 1; i <= 3; ++i) {
    const CotangentPoint y = tgl_flow(x, Side::Left, {3, i}, z);
    EXPECT_LE((y.B - x.B).norm(), 1e-12);
    Matrix p = Matrix::Identity(3, 3);
    for (int j = 1; j < i; ++j) p = p * x.B;
    EXPECT_LE((y.g - matexp(z * p) * x.g).norm(), 1e-12);
  }
}

TEST(TglFlow, RightFlowsFixB) {
  std::mt19937_64 rng(51);
  for (int n = 1; n <= 4; ++n) {
    const CotangentPoint x = random_cotangent(n, rng);
    for (GZIndex idx : gz_indices(n)) {
      const CotangentPoint y = tgl_flow(x, Side::Right, idx, random_unit_disk(rng));
      EXPECT_EQ(y.B, x.B);
      EXPECT_LE(coord_defect(gz_map(right_moment(x)), gz_map(right_moment(y))), 1e-9);
    }
  }
}

TEST(TglFlow, DescentOfLeftFlows) {
  std::mt19937_64 rng(52);
  for (int n = 1; n <= 4; ++n) {
    const CotangentPoint x = random_cotangent(n, rng);
    for (GZIndex idx : gz_indices(n)) {
      const Complex z = random_unit_disk(rng);
      const CotangentPoint y = tgl_flow(x, Side::Left, idx, z);
      EXPECT_EQ(y.B, gz_flow_single(x.B, idx, z));
      EXPECT_EQ(right_moment(y).rows(), n);
    }
  }
}

TEST(TildeA, CentreLeftEqualsCentreRightInverse) {
  std::mt19937_64 rng(53);
  for (int n = 1; n <= 4; ++n) {
    const CotangentPoint x = random_cotangent(n, rng);
    const Complex z = random_unit_disk(rng);
    const CotangentPoint l = tilde_a_flow(x, GZGroupElement::single(n, {n, 1}, z), GZGroupElement::zero(n));
    const CotangentPoint r = tilde_a_flow(x, GZGroupElement::zero(n), GZGroupElement::single(n, {n, 1}, -z));
    EXPECT_LE(point_distance(l, r), 1e-13 * (1.0 + point_norm(x)));
  }
}

TEST(TildeA, LeftOnlyIsComposition) {
  std::mt19937_64 rng(54);
  const int n = 3;
  const CotangentPoint x = random_cotangent(n, rng);
  const GZGroupElement left = random_lambda(n, rng);
  CotangentPoint expected = x;
  for (GZIndex idx : gz_indices(n)) expected = tgl_flow(expected, Side::Left, idx, left[idx]);
  const CotangentPoint got = tilde_a_flow(x, left, GZGroupElement::zero(n));
  EXPECT_LE(point_distance(expected, got), 1e-14 * (1.0 + point_norm(x)));
}

TEST(TildeA, LeftAndRightCommute) {
  std::mt19937_64 rng(55);
  for (int n = 2; n <= 4; ++n) {
    const CotangentPoint x = random_cotangent(n, rng);
    const GZIndex p = gz_unflat(static_cast<int>(rng() % static_cast<unsigned>(gz_count(n))));
    const GZIndex q = gz_unflat(static_cast<int>(rng() % static_cast<unsigned>(gz_count(n))));
    const Complex z = random_unit_disk(rng), w = random_unit_disk(rng);
    const CotangentPoint a = tgl_flow(tgl_flow(x, Side::Left, p, z), Side::Right, q, w);
    const CotangentPoint b = tgl_flow(tgl_flow(x, Side::Right, q, w), Side::Left, p, z);
    EXPECT_LE(point_distance(a, b) / (1.0 + point_norm(x)), 1e-9);
  }
}

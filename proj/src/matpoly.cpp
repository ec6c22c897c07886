#include "gz/matpoly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "gz/error.hpp"

namespace gz {

namespace {

void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols()) throw_domain(std::string(who) + ": matrix is not square");
}

// Faddeev-LeVerrier: returns c_0..c_n (c_n = 1) and the last auxiliary matrix M_n.
std::pair<ComplexList, Matrix> faddeev_leverrier(const Matrix& a) {
  const auto n = a.rows();
  ComplexList c(static_cast<std::size_t>(n) + 1, Complex(0.0));
  c[static_cast<std::size_t>(n)] = 1.0;
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m;
    m.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
  }
  return {std::move(c), std::move(m)};
}

}  // namespace

Matrix leading_minor(const Matrix& a, int m) {
  require_square(a, "leading_minor");
  if (m < 1 || m > a.rows())
    throw_domain("leading_minor: size " + std::to_string(m) + " outside 1.." + std::to_string(a.rows()));
  return a.topLeftCorner(m, m);
}

Polynomial charpoly(const Matrix& a) {
  require_square(a, "charpoly");
  if (a.rows() == 0) return Polynomial{1.0};
  auto [c, unused] = faddeev_leverrier(a);
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

Matrix adjugate(const Matrix& a) {
  require_square(a, "adjugate");
  if (a.rows() == 0) return Matrix(0, 0);
  auto [c, m] = faddeev_leverrier(a);
  return (a.rows() % 2 == 1) ? m : Matrix(-m);
}

Matrix matexp(const Matrix& a) {
  require_square(a, "matexp");
  const auto n = a.rows();
  if (n == 0) return Matrix(0, 0);
  // Higham (2005), degree 13.
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 == 0.0) return Matrix::Identity(n, n);
  int s = 0;
  if (norm1 > theta13) s = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / theta13))));
  const Matrix x = a / std::ldexp(1.0, s);

  const Matrix id = Matrix::Identity(n, n);
  const Matrix x2 = x * x;
  const Matrix x4 = x2 * x2;
  const Matrix x6 = x4 * x2;
  const Matrix u_inner = x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id;
  const Matrix u = x * u_inner;
  const Matrix v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;
  Matrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

Matrix companion_of(const Polynomial& p) {
  if (!p.is_monic()) throw_domain("companion_of: polynomial is not monic");
  const int n = p.degree();
  Matrix c = Matrix::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p[i];
  return c;
}

namespace {

// Parlett-Reinsch diagonal balancing with powers of two (exact in floating point).
Matrix balance(Matrix a) {
  const auto n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
  return a;
}

}  // namespace

ComplexList roots(const Polynomial& p) {
  if (p.is_zero()) throw_domain("roots: zero polynomial");
  if (p.degree() == 0) return {};
  const Polynomial monic = p * (Complex(1.0) / p.leading());
  // Exact leading 1 after normalisation.
  ComplexList c = monic.coefficients();
  c.back() = 1.0;
  const Matrix comp = companion_of(Polynomial(std::move(c)));
  if (comp.rows() == 1) return {comp(0, 0)};
  Eigen::ComplexEigenSolver<Matrix> es(balance(comp), false);
  if (es.info() != Eigen::Success) throw NumericalError("roots: eigenvalue iteration failed");
  const Vector& ev = es.eigenvalues();
  return ComplexList(ev.data(), ev.data() + ev.size());
}

ComplexList newton_convert(std::span<const Complex> values, NewtonDirection direction) {
  if (values.empty()) throw_domain("newton_convert: empty input");
  const std::size_t n = values.size();
  // a[j] = coefficient of z^{n-j}, a[0] = 1 (the "e"-style indexing of Newton's identities).
  ComplexList a(n + 1, Complex(0.0));
  a[0] = 1.0;
  if (direction == NewtonDirection::PowerSumsToCoeffs) {
    for (std::size_t k = 1; k <= n; ++k) {
      Complex acc = values[k - 1];
      for (std::size_t j = 1; j < k; ++j) acc += a[j] * values[k - j - 1];
      a[k] = -acc / static_cast<double>(k);
    }
    ComplexList out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[n - i];
    return out;
  }
  for (std::size_t j = 1; j <= n; ++j) a[j] = values[n - j];
  ComplexList p(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = static_cast<double>(k) * a[k];
    for (std::size_t j = 1; j < k; ++j) acc += a[j] * p[k - j - 1];
    p[k - 1] = -acc;
  }
  return p;
}

Polynomial power_sums_to_charpoly(std::span<const Complex> power_sums) {
  ComplexList c = newton_convert(power_sums, NewtonDirection::PowerSumsToCoeffs);
  c.push_back(1.0);
  return Polynomial(std::move(c));
}

ComplexList charpoly_to_power_sums(const Polynomial& monic) {
  if (!monic.is_monic()) throw_domain("charpoly_to_power_sums: polynomial is not monic");
  if (monic.degree() == 0) return {};
  const ComplexList& c = monic.coefficients();
  return newton_convert(std::span<const Complex>(c.data(), c.size() - 1), NewtonDirection::CoeffsToPowerSums);
}

int numerical_rank(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double thresh = rel_tol * static_cast<double>(std::max(m.rows(), m.cols())) * sv(0);
  return static_cast<int>((sv.array() > thresh).count());
}

Matrix krylov_matrix(const Matrix& b_mat, const Vector& b) {
  require_square(b_mat, "krylov_matrix");
  if (b.size() != b_mat.rows()) throw_domain("krylov_matrix: vector length does not match matrix");
  const auto n = b_mat.rows();
  Matrix k(n, n);
  Vector col = b;
  for (Eigen::Index j = 0; j < n; ++j) {
    k.col(j) = col;
    col = b_mat * col;
  }
  return k;
}

int krylov_rank(const Matrix& b_mat, const Vector& b, double rel_tol) {
  return numerical_rank(krylov_matrix(b_mat, b), rel_tol);
}

std::vector<Cluster> cluster_points(std::span<const Complex> points, double tol) {
  if (!(tol > 0.0)) throw_domain("cluster_points: tolerance must be positive");
  const std::size_t n = points.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const Complex& p = points[static_cast<std::size_t>(x)];
    const Complex& q = points[static_cast<std::size_t>(y)];
    return p.real() < q.real() || (p.real() == q.real() && p.imag() < q.imag());
  });
  double max_abs = 0.0;
  for (const auto& p : points) max_abs = std::max(max_abs, std::abs(p));
  const double radius = tol * (1.0 + max_abs);

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (std::abs(points[a] - points[b]) <= radius) {
        const int ra = find(static_cast<int>(a));
        const int rb = find(static_cast<int>(b));
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }

  std::vector<Cluster> out;
  std::vector<int> slot(n, -1);
  for (int idx : order) {
    const int root = find(idx);
    int& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<int>(out.size());
      out.push_back({});
    }
    Cluster& c = out[static_cast<std::size_t>(s)];
    c.members.push_back(idx);
    c.representative += points[static_cast<std::size_t>(idx)];
    ++c.multiplicity;
  }
  for (auto& c : out) c.representative /= static_cast<double>(c.multiplicity);
  return out;
}

bool all_finite(const Matrix& a) { return a.allFinite(); }

double scale_of(const Matrix& a) { return std::max(1.0, a.norm()); }

}  // namespace gz

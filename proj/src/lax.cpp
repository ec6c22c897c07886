#include "gz/lax.hpp"

#include <cmath>

#include "gz/error.hpp"
#include "gz/matpoly.hpp"

namespace gz {

namespace {

std::vector<double> uniform_grid(double a, double b, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  const double h = (b - a) / steps;
  for (int j = 0; j <= steps; ++j) grid[static_cast<std::size_t>(j)] = a + h * j;
  grid.back() = b;
  return grid;
}

bool is_uniform(const std::vector<double>& grid) {
  if (grid.size() < 3) return true;
  const double h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  for (std::size_t j = 1; j < grid.size(); ++j)
    if (std::abs(grid[j] - grid[j - 1] - h) > 1e-9 * std::abs(h)) return false;
  return true;
}

void check_path(const LaxPath& path) {
  const std::size_t len = path.grid.size();
  if (len < 2) throw_domain("Lax path needs at least two grid points");
  if (path.alpha.size() != len || path.beta.size() != len) throw_domain("Lax path: grid mismatch");
  for (std::size_t j = 1; j < len; ++j)
    if (!(path.grid[j] > path.grid[j - 1])) throw_domain("Lax path: grid must be strictly increasing");
  const auto n = path.beta.front().rows();
  for (std::size_t j = 0; j < len; ++j)
    if (path.alpha[j].rows() != n || path.alpha[j].cols() != n || path.beta[j].rows() != n || path.beta[j].cols() != n)
      throw_domain("Lax path: matrices must be square of a common size");
}

std::vector<Matrix> rk4_beta(const TimeMatrixFunction& alpha, const Matrix& beta_a, const std::vector<double>& grid) {
  auto rhs = [&](double t, const Matrix& beta) { return Matrix(commutator(beta, alpha(t))); };
  std::vector<Matrix> out{beta_a};
  out.reserve(grid.size());
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    const double t = grid[j];
    const double h = grid[j + 1] - t;
    const Matrix& y = out.back();
    const Matrix k1 = rhs(t, y);
    const Matrix k2 = rhs(t + h / 2, y + h / 2 * k1);
    const Matrix k3 = rhs(t + h / 2, y + h / 2 * k2);
    const Matrix k4 = rhs(t + h, y + h * k3);
    out.push_back(y + h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }
  return out;
}

// alpha at t_j + h/2 by cubic interpolation of the samples.
Matrix midpoint(const std::vector<Matrix>& f, std::size_t j) {
  const std::size_t last = f.size() - 1;
  if (f.size() < 4) return 0.5 * (f[j] + f[j + 1]);
  if (j == 0) return (5.0 * f[0] + 15.0 * f[1] - 5.0 * f[2] + f[3]) / 16.0;
  if (j + 1 == last) return (f[last - 3] - 5.0 * f[last - 2] + 15.0 * f[last - 1] + 5.0 * f[last]) / 16.0;
  return (-f[j - 1] + 9.0 * f[j] + 9.0 * f[j + 1] - f[j + 2]) / 16.0;
}

double condition_number(const Matrix& g) {
  Eigen::JacobiSVD<Matrix> svd(g);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1) : INFINITY;
}

}  // namespace

std::vector<Matrix> differentiate(const std::vector<double>& grid, const std::vector<Matrix>& f) {
  const std::size_t len = grid.size();
  if (f.size() != len || len < 2) throw_domain("differentiate: grid mismatch");
  std::vector<Matrix> d(len);
  if (len >= 5 && is_uniform(grid)) {
    const double h = (grid.back() - grid.front()) / static_cast<double>(len - 1);
    const double c = 1.0 / (12.0 * h);
    const std::size_t e = len - 1;
    d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for (std::size_t j = 2; j + 2 <= e; ++j) d[j] = c * (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]);
    d[e - 1] = -c * (-3.0 * f[e] - 10.0 * f[e - 1] + 18.0 * f[e - 2] - 6.0 * f[e - 3] + f[e - 4]);
    d[e] = -c * (-25.0 * f[e] + 48.0 * f[e - 1] - 36.0 * f[e - 2] + 16.0 * f[e - 3] - 3.0 * f[e - 4]);
    return d;
  }
  if (len == 2) {
    d[0] = d[1] = (f[1] - f[0]) / (grid[1] - grid[0]);
    return d;
  }
  // Second-order three-point formulas on a general grid.
  auto three_point = [&](std::size_t j0, double t) {
    const double t0 = grid[j0], t1 = grid[j0 + 1], t2 = grid[j0 + 2];
    const double w0 = (2 * t - t1 - t2) / ((t0 - t1) * (t0 - t2));
    const double w1 = (2 * t - t0 - t2) / ((t1 - t0) * (t1 - t2));
    const double w2 = (2 * t - t0 - t1) / ((t2 - t0) * (t2 - t1));
    return Matrix(w0 * f[j0] + w1 * f[j0 + 1] + w2 * f[j0 + 2]);
  };
  d[0] = three_point(0, grid[0]);
  for (std::size_t j = 1; j + 1 < len; ++j) d[j] = three_point(j - 1, grid[j]);
  d[len - 1] = three_point(len - 3, grid[len - 1]);
  return d;
}

double lax_residual(const LaxPath& path) {
  check_path(path);
  const std::vector<Matrix> dbeta = differentiate(path.grid, path.beta);
  double worst = 0.0;
  for (std::size_t j = 0; j < path.grid.size(); ++j)
    worst = std::max(worst, (dbeta[j] - commutator(path.beta[j], path.alpha[j])).norm());
  return worst;
}

double isospectral_drift(const LaxPath& path) {
  const Polynomial p0 = charpoly(path.beta.front());
  double worst = 0.0;
  for (const Matrix& b : path.beta) worst = std::max(worst, charpoly(b).max_coeff_distance(p0));
  return worst;
}

LaxPath lax_integrate(const TimeMatrixFunction& alpha, const Matrix& beta_a, double a, double b, int steps,
                      bool richardson) {
  if (!(a < b)) throw_domain("lax_integrate: need a < b");
  if (steps < 1) throw_domain("lax_integrate: need N >= 1");
  if (beta_a.rows() != beta_a.cols()) throw_domain("lax_integrate: beta(a) must be square");
  LaxPath path;
  path.grid = uniform_grid(a, b, steps);
  path.beta = rk4_beta(alpha, beta_a, path.grid);
  for (double t : path.grid) {
    path.alpha.push_back(alpha(t));
    if (path.alpha.back().rows() != beta_a.rows() || path.alpha.back().cols() != beta_a.cols())
      throw_domain("lax_integrate: alpha(t) has the wrong size");
  }
  path.residual = lax_residual(path);
  path.drift = isospectral_drift(path);
  if (richardson) {
    const auto fine = rk4_beta(alpha, beta_a, uniform_grid(a, b, 2 * steps));
    double worst = 0.0;
    for (std::size_t j = 0; j < path.beta.size(); ++j) worst = std::max(worst, (path.beta[j] - fine[2 * j]).norm());
    path.richardson = worst;
  }
  return path;
}

LaxPath gauge_apply(const std::vector<Matrix>& g, const LaxPath& path) {
  check_path(path);
  if (g.size() != path.grid.size()) throw_domain("gauge_apply: grid mismatch");
  const std::vector<Matrix> dg = differentiate(path.grid, g);
  LaxPath out;
  out.grid = path.grid;
  for (std::size_t j = 0; j < g.size(); ++j) {
    Eigen::FullPivLU<Matrix> lu(g[j]);
    if (!lu.isInvertible()) throw NumericalError("gauge_apply: g(t) is singular");
    const Matrix g_inv = lu.inverse();
    out.alpha.push_back(g[j] * path.alpha[j] * g_inv - dg[j] * g_inv);
    out.beta.push_back(g[j] * path.beta[j] * g_inv);
  }
  out.residual = lax_residual(out);
  out.drift = isospectral_drift(out);
  return out;
}

LaxPath gauge_apply(const TimeMatrixFunction& g, const LaxPath& path) {
  std::vector<Matrix> samples;
  samples.reserve(path.grid.size());
  for (double t : path.grid) samples.push_back(g(t));
  return gauge_apply(samples, path);
}

GaugeFix gauge_fix_regular(const LaxPath& path, double residual_tol) {
  check_path(path);
  const double residual = lax_residual(path);
  if (residual > residual_tol)
    throw ValidationError("gauge_fix_regular: path is not a Lax solution (residual " + std::to_string(residual) + ")");
  const auto n = path.beta.front().rows();
  GaugeFix out;
  out.g_path.push_back(Matrix::Identity(n, n));
  for (std::size_t j = 0; j + 1 < path.grid.size(); ++j) {
    const double h = path.grid[j + 1] - path.grid[j];
    const Matrix& g = out.g_path.back();
    const Matrix mid = midpoint(path.alpha, j);
    const Matrix k1 = g * path.alpha[j];
    const Matrix k2 = (g + h / 2 * k1) * mid;
    const Matrix k3 = (g + h / 2 * k2) * mid;
    const Matrix k4 = (g + h * k3) * path.alpha[j + 1];
    out.g_path.push_back(g + h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }
  std::vector<Matrix> xs;
  for (std::size_t j = 0; j < out.g_path.size(); ++j) {
    const Matrix& g = out.g_path[j];
    const double cond = condition_number(g);
    out.condition = std::max(out.condition, cond);
    if (!(cond < 1e12)) throw NumericalError("gauge_fix_regular: g(t) lost invertibility (condition " + std::to_string(cond) + ")");
    xs.push_back(g * path.beta[j] * g.partialPivLu().inverse());
  }
  out.g_b = out.g_path.back();
  out.X = xs.back();
  for (const Matrix& x : xs) out.drift = std::max(out.drift, (x - out.X).norm());
  return out;
}

Complex lax_symplectic(const LaxPath& path, const LaxTangent& t1, const LaxTangent& t2) {
  const std::size_t len = path.grid.size();
  for (const LaxTangent* t : {&t1, &t2})
    if (t->alpha.size() != len || t->beta.size() != len) throw_domain("lax_symplectic: grid mismatch");
  Complex total = 0.0;
  for (std::size_t j = 0; j + 1 < len; ++j) {
    auto density = [&](std::size_t q) {
      return (t1.alpha[q] * t2.beta[q] - t2.alpha[q] * t1.beta[q]).trace();
    };
    total += 0.5 * (path.grid[j + 1] - path.grid[j]) * (density(j) + density(j + 1));
  }
  return total;
}

}  // namespace gz

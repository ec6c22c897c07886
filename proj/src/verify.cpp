#include "gz/verify.hpp"

#include <cmath>
#include <numbers>

#include "gz/error.hpp"

namespace gz::verify {

namespace {

Complex checked(const ScalarFunction& f, std::span<const Complex> x) {
  const Complex v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NumericalError("fd_gradient: non-finite function value");
  return v;
}

}  // namespace

Vector fd_gradient(const ScalarFunction& f, std::span<const Complex> x, const FdOptions& opts) {
  const auto d = static_cast<Eigen::Index>(x.size());
  Vector grad(d);
  std::vector<Complex> y(x.begin(), x.end());
  const Complex i_unit(0.0, 1.0);
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const Complex x0 = x[ju];
    const double h = (opts.method == FdMethod::Central ? opts.step : opts.radius) * (1.0 + std::abs(x0));
    if (opts.method == FdMethod::Central) {
      // Divide by the displacement actually realised in floating point.
      auto central = [&](Complex dir) {
        const Complex plus = x0 + dir * h;
        const Complex minus = x0 - dir * h;
        y[ju] = plus;
        const Complex fp = checked(f, y);
        y[ju] = minus;
        const Complex fm = checked(f, y);
        return (fp - fm) / (plus - minus);
      };
      // Along 1 this is d/dx, along i it is -i d/dy; the Wirtinger derivative is their mean.
      grad(j) = 0.5 * (central(1.0) + central(i_unit));
    } else {
      const Complex f0 = checked(f, x);
      const int nodes = opts.contour_nodes;
      Complex acc = 0.0;
      for (int k = 0; k < nodes; ++k) {
        const Complex node = x0 + h * std::polar(1.0, 2.0 * std::numbers::pi * k / nodes);
        y[ju] = node;
        acc += (checked(f, y) - f0) / (node - x0);
      }
      grad(j) = acc / static_cast<double>(nodes);
    }
    y[ju] = x0;
  }
  return grad;
}

Matrix matrix_gradient(const MatrixFunction& f, const Matrix& b, const FdOptions& opts) {
  const auto n = b.rows();
  const auto m = b.cols();
  std::vector<Complex> flat(static_cast<std::size_t>(n * m));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j) flat[static_cast<std::size_t>(i * m + j)] = b(i, j);
  auto wrapped = [&](std::span<const Complex> v) {
    Matrix x(n, m);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < m; ++j) x(i, j) = v[static_cast<std::size_t>(i * m + j)];
    return f(x);
  };
  const Vector g = fd_gradient(wrapped, flat, opts);
  Matrix grad(m, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j) grad(j, i) = g(i * m + j);
  return grad;
}

Complex lie_poisson_bracket_from_gradients(const Matrix& grad_f, const Matrix& grad_g, const Matrix& b) {
  return (b * commutator(grad_f, grad_g)).trace();
}

Complex lie_poisson_bracket(const MatrixFunction& f, const MatrixFunction& g, const Matrix& b,
                            const FdOptions& opts) {
  return lie_poisson_bracket_from_gradients(matrix_gradient(f, b, opts), matrix_gradient(g, b, opts), b);
}

Complex chart_poisson_bracket(const Chart& chart, const ScalarFunction& f, const ScalarFunction& g,
                              std::span<const Complex> x, const FdOptions& opts) {
  if (static_cast<int>(x.size()) != chart.dimension) throw_domain("chart_poisson_bracket: point dimension mismatch");
  const Matrix p = chart.tensor(x);
  if (p.rows() != chart.dimension || p.cols() != chart.dimension)
    throw_domain("chart_poisson_bracket: tensor has wrong shape");
  const double asym = (p + p.transpose()).norm();
  if (asym > 1e-10 * std::max(1.0, p.norm())) throw NumericalError("chart_poisson_bracket: tensor is not antisymmetric");
  const Vector df = fd_gradient(f, x, opts);
  const Vector dg = fd_gradient(g, x, opts);
  return (df.transpose() * p * dg)(0, 0);
}

}  // namespace gz::verify

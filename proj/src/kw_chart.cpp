#include "gz/kw_chart.hpp"

#include <cmath>

#include "gz/error.hpp"
#include "gz/random.hpp"

namespace gz {

namespace {

Vector gradient_of(const ChartFunction& f, std::span<const Complex> x, const verify::FdOptions& opts) {
  if (f.gradient) return f.gradient(x);
  return verify::fd_gradient(f.value, x, opts);
}

Matrix omega_at(std::span<const Complex> x) {
  const auto size = static_cast<Eigen::Index>(x.size() / 2);
  Matrix omega = Matrix::Zero(2 * size, 2 * size);
  for (Eigen::Index l = 0; l < size; ++l) {
    const Complex inv = 1.0 / x[static_cast<std::size_t>(size + l)];
    omega(size + l, l) = inv;   // d rho / rho ^ d z
    omega(l, size + l) = -inv;
  }
  return omega;
}

}  // namespace

ComplexList OpenStratumChart::point() const {
  ComplexList x = poles;
  x.insert(x.end(), rho.begin(), rho.end());
  return x;
}

void chart_validate(const OpenStratumChart& c, double tol) {
  c.k.check();
  if (c.size() != c.k.total() || c.rho.size() != c.poles.size())
    throw_domain("chart: expected |k| poles and residual values");
  double scale = 1.0;
  for (Complex z : c.poles) scale = std::max(scale, 1.0 + std::abs(z));
  for (std::size_t a = 0; a < c.poles.size(); ++a) {
    if (c.rho[a] == Complex(0.0)) throw_domain("chart: residual value rho must be nonzero");
    for (std::size_t b = a + 1; b < c.poles.size(); ++b)
      if (std::abs(c.poles[a] - c.poles[b]) <= tol * scale) throw_domain("chart: coincident poles");
  }
}

ChartFunction chart_r(int size, int l) {
  return {"r" + std::to_string(l + 1), [l](std::span<const Complex> x) { return x[static_cast<std::size_t>(l)]; },
          [size, l](std::span<const Complex>) { return Vector(Vector::Unit(2 * size, l)); }};
}

ChartFunction chart_rho(int size, int l) {
  const int at = size + l;
  return {"rho" + std::to_string(l + 1), [at](std::span<const Complex> x) { return x[static_cast<std::size_t>(at)]; },
          [size, at](std::span<const Complex>) { return Vector(Vector::Unit(2 * size, at)); }};
}

ChartFunction chart_s(int size, int l) {
  const int at = size + l;
  return {"s" + std::to_string(l + 1),
          [at](std::span<const Complex> x) { return 1.0 / x[static_cast<std::size_t>(at)]; },
          [size, at](std::span<const Complex> x) {
            const Complex r = x[static_cast<std::size_t>(at)];
            return Vector(Vector::Unit(2 * size, at) * (-1.0 / (r * r)));
          }};
}

Matrix chart_symplectic_matrix(const OpenStratumChart& c) {
  const ComplexList x = c.point();
  return omega_at(x);
}

Matrix chart_poisson_tensor(const OpenStratumChart& c) {
  const Eigen::Index size = c.size();
  Matrix p = Matrix::Zero(2 * size, 2 * size);
  for (Eigen::Index l = 0; l < size; ++l) {
    p(l, size + l) = -c.rho[static_cast<std::size_t>(l)];
    p(size + l, l) = c.rho[static_cast<std::size_t>(l)];
  }
  return p;
}

Complex chart_bracket(const OpenStratumChart& c, const ChartFunction& f, const ChartFunction& g,
                      const verify::FdOptions& opts) {
  chart_validate(c);
  const ComplexList x = c.point();
  const Vector df = gradient_of(f, x, opts);
  const Vector dg = gradient_of(g, x, opts);
  return (df.transpose() * chart_poisson_tensor(c) * dg)(0, 0);
}

verify::Chart sympl_chart(const MultiDegree& k) {
  const int size = k.total();
  verify::Chart chart;
  chart.dimension = 2 * size;
  for (int l = 0; l < size; ++l) chart.names.push_back("z" + std::to_string(l + 1));
  for (int l = 0; l < size; ++l) chart.names.push_back("rho" + std::to_string(l + 1));
  chart.tensor = [](std::span<const Complex> x) { return Matrix(-omega_at(x).fullPivLu().inverse()); };
  return chart;
}

Complex chart_bracket_fd(const OpenStratumChart& c, const ChartFunction& f, const ChartFunction& g,
                         const verify::FdOptions& opts) {
  chart_validate(c);
  const ComplexList x = c.point();
  return verify::chart_poisson_bracket(sympl_chart(c.k), f.value, g.value, x, opts);
}

OpenStratumChart random_chart(const MultiDegree& k, std::mt19937_64& rng) {
  k.check();
  OpenStratumChart c;
  c.k = k;
  std::uniform_real_distribution<double> modulus(0.5, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  while (c.size() < k.total()) {
    const Complex z = 2.0 * random_unit_disk(rng);
    bool far = true;
    for (Complex p : c.poles) far = far && std::abs(p - z) >= 0.05;
    if (far) c.poles.push_back(z);
  }
  for (int l = 0; l < k.total(); ++l) c.rho.push_back(std::polar(modulus(rng), phase(rng)));
  return c;
}

}  // namespace gz

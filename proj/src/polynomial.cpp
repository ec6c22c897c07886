#include "gz/polynomial.hpp"

#include <algorithm>

namespace gz {

Polynomial::Polynomial(ComplexList coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::monomial(int degree, Complex c) {
  ComplexList v(static_cast<std::size_t>(degree) + 1, Complex(0.0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  ComplexList c{Complex(1.0)};
  for (const Complex& r : roots) {
    ComplexList next(c.size() + 1, Complex(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex Polynomial::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& a) const {
  Matrix acc = Matrix::Zero(a.rows(), a.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    acc.diagonal().array() += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  ComplexList d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  ComplexList r(std::max(coeffs_.size(), o.coeffs_.size()), Complex(0.0));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = (*this)[static_cast<int>(k)] + o[static_cast<int>(k)];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Complex(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  ComplexList r(coeffs_.size() + o.coeffs_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(Complex s) const {
  ComplexList r = coeffs_;
  for (auto& c : r) c *= s;
  return Polynomial(std::move(r));
}

double Polynomial::max_coeff_distance(const Polynomial& o) const {
  const int top = std::max(degree(), o.degree());
  double d = 0.0;
  for (int k = 0; k <= top; ++k) d = std::max(d, std::abs((*this)[k] - o[k]));
  return d;
}

}  // namespace gz

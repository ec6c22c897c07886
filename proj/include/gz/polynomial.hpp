#pragma once

#include <initializer_list>
#include <span>

#include "gz/types.hpp"

namespace gz {

/// Complex polynomial stored by ascending coefficients. Trailing zeros are
/// trimmed on construction, so the last coefficient is the leading one
/// (the zero polynomial has an empty coefficient list).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(ComplexList coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial monomial(int degree, Complex c = 1.0);
  /// prod_j (z - r_j)
  static Polynomial from_roots(std::span<const Complex> roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Complex(1.0); }
  Complex leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

  /// Coefficient of z^k; zero outside the stored range.
  Complex operator[](int k) const;
  const ComplexList& coefficients() const { return coeffs_; }

  Complex operator()(Complex z) const;
  Matrix operator()(const Matrix& a) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(Complex s) const;

  /// Largest coefficient difference, padding the shorter list with zeros.
  double max_coeff_distance(const Polynomial& o) const;

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  ComplexList coeffs_;
};

}  // namespace gz

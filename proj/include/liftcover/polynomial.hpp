#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liftcover/matrix.hpp"

namespace liftcover {

/// Polynomial with integer coefficients, lowest degree first. Trailing zero
/// coefficients are stripped, so the zero polynomial has no coefficients.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<BigInt> coefficients);
  ExactPolynomial(std::initializer_list<long long> coefficients);

  static ExactPolynomial monomial(std::size_t degree, const BigInt& coefficient = 1);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  BigInt coefficient(std::size_t i) const;
  const BigInt& leading() const;

  ExactPolynomial derivative() const;

  /// Sign of p(num / 2^shift), computed exactly.
  int sign_at_dyadic(const BigInt& numerator, unsigned shift) const;
  double evaluate(double x) const;

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  ExactPolynomial operator-() const;

  bool operator==(const ExactPolynomial&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coefficients_;
};

/// Exact quotient of a by b. Throws Defect when b does not divide a over Z.
ExactPolynomial exact_divide(const ExactPolynomial& a, const ExactPolynomial& b);

/// Monic characteristic polynomial det(xI - A), by fraction-free (Bareiss)
/// elimination on xI - A over Z[x]. Every pivot is a leading principal minor
/// of xI - A and hence monic, so each division is exact.
ExactPolynomial char_poly(const SquareMatrix& a);

/// Largest real root located by Sturm-sequence bisection on dyadic rationals,
/// to absolute width `tol`. nullopt when p has no real root.
std::optional<double> largest_real_root(const ExactPolynomial& p, double tol = 1e-12);

/// e.g. "x^2 - 3*x + 1".
std::string to_string(const ExactPolynomial& p);

}  // namespace liftcover

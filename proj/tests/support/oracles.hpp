#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "liftcover/matrix.hpp"
#include "liftcover/polynomial.hpp"

namespace oracle {

using liftcover::BigInt;
using liftcover::ExactPolynomial;
using liftcover::Residue;
using liftcover::SquareMatrix;

using PolyMatrix = std::vector<std::vector<ExactPolynomial>>;

inline ExactPolynomial cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  ExactPolynomial total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ExactPolynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    const ExactPolynomial term = m[0][c] * cofactor_det(minor);
    total = c % 2 == 0 ? total + term : total - term;
  }
  return total;
}

/// det(xI - A) by Laplace expansion along the first row.
inline ExactPolynomial char_poly_cofactor(const SquareMatrix& a) {
  const std::size_t n = a.size();
  PolyMatrix m(n, std::vector<ExactPolynomial>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = ExactPolynomial(std::vector<BigInt>{-a(r, c)});
      if (r == c) m[r][c] = m[r][c] + ExactPolynomial{0, 1};
    }
  return cofactor_det(m);
}

inline BigInt det_cofactor(const SquareMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    SquareMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(r - 1, jj++) = a(r, j);
    const BigInt term = a(0, c) * det_cofactor(minor);
    total += c % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

/// Adjugate divided by the determinant; requires det = +-1.
inline SquareMatrix inverse_adjugate(const SquareMatrix& a) {
  const std::size_t n = a.size();
  const BigInt det = det_cofactor(a);
  SquareMatrix inv(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      SquareMatrix minor(n - 1);
      for (std::size_t i = 0, ii = 0; i < n; ++i) {
        if (i == c) continue;
        for (std::size_t j = 0, jj = 0; j < n; ++j)
          if (j != r) minor(ii, jj++) = a(i, j);
        ++ii;
      }
      const BigInt cof = n == 1 ? BigInt(1) : det_cofactor(minor);
      inv(r, c) = ((r + c) % 2 == 0 ? cof : BigInt(-cof)) / det;
    }
  return inv;
}

/// Plain triple loop over the integers, reduced at the end.
inline std::vector<Residue> product_then_reduce(const SquareMatrix& a, const SquareMatrix& b, Residue k) {
  const std::size_t n = a.size();
  std::vector<Residue> out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += a(r, i) * b(i, c);
      BigInt m = acc % k;
      if (m < 0) m += k;
      out[r * n + c] = static_cast<Residue>(m);
    }
  return out;
}

/// Enumerates all of Z_k^d.
inline std::uint64_t brute_primitive_count(std::uint64_t k, unsigned d) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= k;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code, g = k;
    for (unsigned i = 0; i < d; ++i) {
      g = std::gcd(g, rest % k);
      rest /= k;
    }
    if (g == 1) ++count;
  }
  return count;
}

inline std::uint64_t brute_totient(std::uint64_t k) {
  std::uint64_t n = 0;
  for (std::uint64_t a = 1; a <= k; ++a)
    if (std::gcd(a, k) == 1) ++n;
  return n;
}

/// Integer matrix with entries uniform in [-bound, bound].
inline SquareMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t n, long long bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  SquareMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  return m;
}

}  // namespace oracle

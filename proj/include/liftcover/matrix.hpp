#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace liftcover {

using BigInt = boost::multiprecision::cpp_int;
using Residue = std::int64_t;

/// Largest modulus accepted for residue arithmetic; products of two residues
/// then fit in a signed 64-bit accumulator.
inline constexpr Residue kMaxModulus = 2147483647;

/// Canonical representative of `value` in {0, ..., k-1}.
Residue canonical_residue(Residue value, Residue k);
Residue canonical_residue(const BigInt& value, Residue k);

/// Throws InvalidArgument unless 2 <= k <= kMaxModulus.
void require_modulus(Residue k);

/// Dense n x n matrix over the integers, row-major, exact.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n);

  static SquareMatrix identity(std::size_t n);
  static SquareMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static SquareMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> copy;
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(copy);
  }

  std::size_t size() const noexcept { return n_; }

  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * n_ + c];
  }
  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * n_ + c];
  }
  std::span<const BigInt> row(std::size_t r) const {
    return {entries_.data() + r * n_, n_};
  }

  bool is_identity() const;

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

/// Dense n x n matrix over Z_k. Entries are kept in {0, ..., k-1} on every
/// write; the modulus is fixed for the lifetime of the value.
class ResidueMatrix {
 public:
  ResidueMatrix() = default;
  ResidueMatrix(std::size_t n, Residue modulus);

  static ResidueMatrix identity(std::size_t n, Residue modulus);
  static ResidueMatrix from_rows(const std::vector<std::vector<Residue>>& rows,
                                 Residue modulus);
  /// Row-major flat list of n*n entries, reduced mod k.
  static ResidueMatrix from_flat(std::span<const Residue> entries,
                                 Residue modulus);

  std::size_t size() const noexcept { return n_; }
  Residue modulus() const noexcept { return k_; }

  Residue operator()(std::size_t r, std::size_t c) const {
    return entries_[r * n_ + c];
  }
  void set(std::size_t r, std::size_t c, Residue value) {
    entries_[r * n_ + c] = canonical_residue(value, k_);
  }
  std::span<const Residue> entries() const { return entries_; }

  bool is_identity() const;

  bool operator==(const ResidueMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  Residue k_ = 0;
  std::vector<Residue> entries_;
};

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b);
ResidueMatrix multiply(const ResidueMatrix& a, const ResidueMatrix& b);

inline SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  return multiply(a, b);
}
inline ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  return multiply(a, b);
}

SquareMatrix transpose(const SquareMatrix& a);
ResidueMatrix transpose(const ResidueMatrix& a);
SquareMatrix negate(const SquareMatrix& a);
SquareMatrix scale(const SquareMatrix& a, const BigInt& factor);
SquareMatrix add(const SquareMatrix& a, const SquareMatrix& b);

/// Non-negative integer power by repeated squaring.
SquareMatrix power(const SquareMatrix& a, std::uint64_t exponent);
ResidueMatrix power(const ResidueMatrix& a, std::uint64_t exponent);

ResidueMatrix mod_reduce(const SquareMatrix& a, Residue k);
/// Integer matrix with entries in {0, ..., k-1}.
SquareMatrix lift_to_integers(const ResidueMatrix& a);

/// Block-diagonal J with 2x2 blocks [[0,1],[-1,0]].
class SymplecticForm {
 public:
  explicit SymplecticForm(std::size_t genus);

  std::size_t genus() const noexcept { return genus_; }
  std::size_t dimension() const noexcept { return 2 * genus_; }
  const SquareMatrix& matrix() const noexcept { return matrix_; }

  /// x^T J y for integer vectors.
  BigInt pair(std::span<const BigInt> x, std::span<const BigInt> y) const;
  Residue pair(std::span<const Residue> x, std::span<const Residue> y,
               Residue k) const;

 private:
  std::size_t genus_;
  SquareMatrix matrix_;
};

/// Symplectic form sized to match `a` (which must have even dimension).
SymplecticForm form_for(std::size_t dimension);

bool is_symplectic(const SquareMatrix& a, const SymplecticForm& j);
bool is_symplectic(const ResidueMatrix& a, const SymplecticForm& j);

/// -J A^T J; rejects non-symplectic input and post-checks A * result = I.
SquareMatrix symplectic_inverse(const SquareMatrix& a, const SymplecticForm& j);
ResidueMatrix symplectic_inverse(const ResidueMatrix& a,
                                 const SymplecticForm& j);

std::string to_string(const SquareMatrix& a);
std::string to_string(const ResidueMatrix& a);

}  // namespace liftcover

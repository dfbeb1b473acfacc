#include "liftcover/matrix.hpp"

#include <sstream>

#include "liftcover/error.hpp"

namespace liftcover {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix dimensions differ: " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

void require_same_modulus(Residue a, Residue b) {
  if (a != b) {
    throw Error(ErrorCode::ModulusMismatch,
                "moduli differ: " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

void require_form_matches(std::size_t n, const SymplecticForm& j) {
  if (n != j.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix of size " + std::to_string(n) +
                    " does not match a symplectic form of dimension " +
                    std::to_string(j.dimension()));
  }
}

}  // namespace

Residue canonical_residue(Residue value, Residue k) {
  Residue r = value % k;
  return r < 0 ? r + k : r;
}

Residue canonical_residue(const BigInt& value, Residue k) {
  BigInt r = value % k;
  if (r < 0) r += k;
  return r.convert_to<Residue>();
}

void require_modulus(Residue k) {
  if (k < 2 || k > kMaxModulus) {
    throw Error(ErrorCode::InvalidArgument,
                "modulus must lie in [2, " + std::to_string(kMaxModulus) +
                    "], got " + std::to_string(k));
  }
}

// ---------------------------------------------------------------------------
// SquareMatrix

SquareMatrix::SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::from_rows(
    const std::vector<std::vector<BigInt>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows.size(), rows[r].size());
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

SquareMatrix SquareMatrix::from_rows(
    const std::vector<std::vector<long long>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows.size(), rows[r].size());
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool SquareMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ResidueMatrix

ResidueMatrix::ResidueMatrix(std::size_t n, Residue modulus)
    : n_(n), k_(modulus), entries_(n * n, 0) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
  require_modulus(modulus);
}

ResidueMatrix ResidueMatrix::identity(std::size_t n, Residue modulus) {
  ResidueMatrix m(n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ResidueMatrix ResidueMatrix::from_rows(
    const std::vector<std::vector<Residue>>& rows, Residue modulus) {
  ResidueMatrix m(rows.size(), modulus);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows.size(), rows[r].size());
    for (std::size_t c = 0; c < rows.size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ResidueMatrix ResidueMatrix::from_flat(std::span<const Residue> entries,
                                       Residue modulus) {
  std::size_t n = 0;
  while (n * n < entries.size()) ++n;
  if (n == 0 || n * n != entries.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(entries.size()) +
                    " entries do not form a square matrix");
  }
  ResidueMatrix m(n, modulus);
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.set(i / n, i % n, entries[i]);
  return m;
}

bool ResidueMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Arithmetic

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_size(a.size(), b.size());
  const std::size_t n = a.size();
  SquareMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt& lhs = a(r, i);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (b(i, c) != 0) out(r, c) += lhs * b(i, c);
      }
    }
  }
  return out;
}

ResidueMatrix multiply(const ResidueMatrix& a, const ResidueMatrix& b) {
  require_same_size(a.size(), b.size());
  require_same_modulus(a.modulus(), b.modulus());
  const std::size_t n = a.size();
  const Residue k = a.modulus();
  ResidueMatrix out(n, k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Residue acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc = (acc + a(r, i) * b(i, c)) % k;
      out.set(r, c, acc);
    }
  }
  return out;
}

SquareMatrix transpose(const SquareMatrix& a) {
  SquareMatrix t(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) t(c, r) = a(r, c);
  return t;
}

ResidueMatrix transpose(const ResidueMatrix& a) {
  ResidueMatrix t(a.size(), a.modulus());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) t.set(c, r, a(r, c));
  return t;
}

SquareMatrix negate(const SquareMatrix& a) { return scale(a, BigInt(-1)); }

SquareMatrix scale(const SquareMatrix& a, const BigInt& factor) {
  SquareMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = a(r, c) * factor;
  return out;
}

SquareMatrix add(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_size(a.size(), b.size());
  SquareMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

SquareMatrix power(const SquareMatrix& a, std::uint64_t exponent) {
  SquareMatrix result = SquareMatrix::identity(a.size());
  SquareMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

ResidueMatrix power(const ResidueMatrix& a, std::uint64_t exponent) {
  ResidueMatrix result = ResidueMatrix::identity(a.size(), a.modulus());
  ResidueMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

ResidueMatrix mod_reduce(const SquareMatrix& a, Residue k) {
  ResidueMatrix out(a.size(), k);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      out.set(r, c, canonical_residue(a(r, c), k));
  return out;
}

SquareMatrix lift_to_integers(const ResidueMatrix& a) {
  SquareMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = a(r, c);
  return out;
}

// ---------------------------------------------------------------------------
// Symplectic form

SymplecticForm::SymplecticForm(std::size_t genus)
    : genus_(genus), matrix_(2 * (genus == 0 ? 1 : genus)) {
  if (genus == 0) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  for (std::size_t i = 0; i < genus; ++i) {
    matrix_(2 * i, 2 * i + 1) = 1;
    matrix_(2 * i + 1, 2 * i) = -1;
  }
}

BigInt SymplecticForm::pair(std::span<const BigInt> x,
                            std::span<const BigInt> y) const {
  BigInt acc = 0;
  for (std::size_t i = 0; i < genus_; ++i)
    acc += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  return acc;
}

Residue SymplecticForm::pair(std::span<const Residue> x,
                             std::span<const Residue> y, Residue k) const {
  Residue acc = 0;
  for (std::size_t i = 0; i < genus_; ++i) {
    acc = (acc + x[2 * i] * y[2 * i + 1]) % k;
    acc = (acc - x[2 * i + 1] * y[2 * i]) % k;
  }
  return canonical_residue(acc, k);
}

SymplecticForm form_for(std::size_t dimension) {
  if (dimension == 0 || dimension % 2 != 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "symplectic matrices have positive even dimension, got " +
                    std::to_string(dimension));
  }
  return SymplecticForm(dimension / 2);
}

bool is_symplectic(const SquareMatrix& a, const SymplecticForm& j) {
  require_form_matches(a.size(), j);
  return transpose(a) * j.matrix() * a == j.matrix();
}

bool is_symplectic(const ResidueMatrix& a, const SymplecticForm& j) {
  require_form_matches(a.size(), j);
  const ResidueMatrix jk = mod_reduce(j.matrix(), a.modulus());
  return transpose(a) * jk * a == jk;
}

SquareMatrix symplectic_inverse(const SquareMatrix& a, const SymplecticForm& j) {
  if (!is_symplectic(a, j)) {
    throw Error(ErrorCode::NotSymplectic,
                "symplectic_inverse requires A^T J A = J");
  }
  SquareMatrix inv = negate(j.matrix() * transpose(a) * j.matrix());
  if (!(a * inv).is_identity()) {
    throw Error(ErrorCode::Defect, "symplectic inverse failed its post-check");
  }
  return inv;
}

ResidueMatrix symplectic_inverse(const ResidueMatrix& a,
                                 const SymplecticForm& j) {
  if (!is_symplectic(a, j)) {
    throw Error(ErrorCode::NotSymplectic,
                "symplectic_inverse requires A^T J A = J mod " +
                    std::to_string(a.modulus()));
  }
  const ResidueMatrix jk = mod_reduce(negate(j.matrix()), a.modulus());
  const ResidueMatrix jpos = mod_reduce(j.matrix(), a.modulus());
  ResidueMatrix inv = jk * transpose(a) * jpos;
  if (!(a * inv).is_identity()) {
    throw Error(ErrorCode::Defect, "symplectic inverse failed its post-check");
  }
  return inv;
}

std::string to_string(const SquareMatrix& a) {
  std::ostringstream out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    out << (r == 0 ? "[[" : " [");
    for (std::size_t c = 0; c < a.size(); ++c)
      out << (c ? ", " : "") << a(r, c);
    out << (r + 1 == a.size() ? "]]" : "]\n");
  }
  return out.str();
}

std::string to_string(const ResidueMatrix& a) {
  std::ostringstream out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    out << (r == 0 ? "[[" : " [");
    for (std::size_t c = 0; c < a.size(); ++c)
      out << (c ? ", " : "") << a(r, c);
    out << (r + 1 == a.size() ? "]]" : "]\n");
  }
  out << " (mod " << a.modulus() << ")";
  return out.str();
}

}  // namespace liftcover

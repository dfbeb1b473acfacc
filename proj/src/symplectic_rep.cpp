#include "liftcover/symplectic_rep.hpp"

#include "liftcover/error.hpp"

namespace liftcover {

namespace {

void require_valid(const Generator& gen, std::size_t genus) {
  if (!gen.valid_for(genus)) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index out of range: " + gen.name() + " at genus " + std::to_string(genus));
  }
}

/// Row vector u^T J for the curve class u.
std::vector<std::int64_t> dual_row(const std::vector<std::int64_t>& u) {
  std::vector<std::int64_t> row(u.size(), 0);
  // (u^T J)_{2i+1} = u_{2i}, (u^T J)_{2i} = -u_{2i+1}  (0-based)
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) {
    row[i + 1] = u[i];
    row[i] = -u[i + 1];
  }
  return row;
}

}  // namespace

std::vector<std::int64_t> twist_curve_class(const Generator& gen, std::size_t genus) {
  require_valid(gen, genus);
  std::vector<std::int64_t> u(2 * genus, 0);
  switch (gen.kind) {
    case CurveKind::A: u[2 * gen.index - 2] = 1; break;
    case CurveKind::B: u[2 * gen.index - 1] = 1; break;
    case CurveKind::C:
      u[2 * gen.index - 2] = 1;
      u[2 * gen.index] = -1;
      break;
    case CurveKind::Iota: break;
  }
  return u;
}

SquareMatrix iota_matrix(std::size_t genus) {
  if (genus == 0) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  return negate(SquareMatrix::identity(2 * genus));
}

SquareMatrix twist_power(const Generator& gen, std::size_t genus, std::int64_t exponent) {
  require_valid(gen, genus);
  if (gen.kind == CurveKind::Iota) {
    return exponent % 2 == 0 ? SquareMatrix::identity(2 * genus) : iota_matrix(genus);
  }
  const auto u = twist_curve_class(gen, genus);
  const auto w = dual_row(u);
  SquareMatrix m = SquareMatrix::identity(2 * genus);
  for (std::size_t r = 0; r < u.size(); ++r) {
    if (u[r] == 0) continue;
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (w[c] != 0) m(r, c) += BigInt(exponent) * u[r] * w[c];
    }
  }
  return m;
}

SquareMatrix twist_matrix(const Generator& gen, std::size_t genus) {
  return twist_power(gen, genus, 1);
}

ResidueMatrix twist_power_mod(const Generator& gen, std::size_t genus, std::int64_t exponent,
                              Residue k) {
  require_modulus(k);
  require_valid(gen, genus);
  const std::size_t n = 2 * genus;
  if (gen.kind == CurveKind::Iota) {
    ResidueMatrix m(n, k);
    const Residue diag = exponent % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, diag);
    return m;
  }
  const auto u = twist_curve_class(gen, genus);
  const auto w = dual_row(u);
  const Residue e = canonical_residue(exponent, k);
  ResidueMatrix m = ResidueMatrix::identity(n, k);
  for (std::size_t r = 0; r < n; ++r) {
    if (u[r] == 0) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (w[c] != 0) m.set(r, c, m(r, c) + e * u[r] * w[c]);
    }
  }
  return m;
}

SquareMatrix psi(const MCGWord& word) {
  SquareMatrix m = SquareMatrix::identity(2 * word.genus());
  for (const Letter& l : word.letters()) {
    m = m * twist_power(l.generator, word.genus(), l.exponent);
  }
  return m;
}

ResidueMatrix psi_k(const MCGWord& word, Residue k) {
  require_modulus(k);
  ResidueMatrix m = ResidueMatrix::identity(2 * word.genus(), k);
  for (const Letter& l : word.letters()) {
    m = m * twist_power_mod(l.generator, word.genus(), l.exponent, k);
  }
  return m;
}

}  // namespace liftcover

#include "liftcover/lift_criteria.hpp"

#include "liftcover/error.hpp"
#include "liftcover/number_theory.hpp"
#include "liftcover/symplectic_rep.hpp"

namespace liftcover {

namespace {

void require_symplectic(const ResidueMatrix& m) {
  if (!is_symplectic(m, form_for(m.size()))) {
    throw Error(ErrorCode::NotSymplectic,
                "membership predicates are defined on Sp(2g, Z_k) only");
  }
}

void require_symplectic(const SquareMatrix& m) {
  if (!is_symplectic(m, form_for(m.size()))) {
    throw Error(ErrorCode::NotSymplectic,
                "membership predicates are defined on Sp(2g, Z) only");
  }
}

Witness at(const ResidueMatrix& m, std::size_t r, std::size_t c) {
  return {r + 1, c + 1, BigInt(m(r, c))};
}

}  // namespace

std::optional<Witness> lift_violation(const ResidueMatrix& m) {
  require_symplectic(m);
  for (std::size_t c = 0; c < m.size(); ++c) {
    const Residue v = m(1, c);
    const bool ok = c == 1 ? is_unit(v, m.modulus()) : v == 0;
    if (!ok) return at(m, 1, c);
  }
  return std::nullopt;
}

bool is_liftable(const ResidueMatrix& m) { return !lift_violation(m).has_value(); }

bool stabilizes_e1_class(const ResidueMatrix& m) {
  require_symplectic(m);
  if (!is_unit(m(0, 0), m.modulus())) return false;
  for (std::size_t r = 1; r < m.size(); ++r)
    if (m(r, 0) != 0) return false;
  return true;
}

std::optional<Witness> stab_e1_violation(const ResidueMatrix& m) {
  require_symplectic(m);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      const Residue v = m(r, c);
      if (c == 0 && v != (r == 0 ? 1 : 0)) return at(m, r, c);
      if (r == 1 && v != (c == 1 ? 1 : 0)) return at(m, r, c);
    }
  }
  return std::nullopt;
}

bool in_stab_e1(const ResidueMatrix& m) { return !stab_e1_violation(m).has_value(); }

std::optional<Witness> level_k_violation(const ResidueMatrix& m) {
  require_symplectic(m);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      if (m(r, c) != (r == c ? 1 : 0)) return at(m, r, c);
  return std::nullopt;
}

bool in_level_k(const ResidueMatrix& m) { return !level_k_violation(m).has_value(); }

std::optional<Witness> umod_violation(const SquareMatrix& m) {
  require_symplectic(m);
  for (std::size_t c = 0; c < m.size(); ++c) {
    const BigInt& v = m(1, c);
    const bool ok = c == 1 ? (v == 1 || v == -1) : v == 0;
    if (!ok) return Witness{2, c + 1, v};
  }
  return std::nullopt;
}

bool in_umod(const SquareMatrix& m) { return !umod_violation(m).has_value(); }

bool is_liftable(const MCGWord& word, Residue k) { return is_liftable(psi_k(word, k)); }

std::optional<Witness> LiftReport::witness() const {
  if (lmod_witness) return lmod_witness;
  if (stab_e1_witness) return stab_e1_witness;
  return level_k_witness;
}

LiftReport lift_report(const ResidueMatrix& m) {
  LiftReport report;
  report.k = m.modulus();
  report.lmod_witness = lift_violation(m);
  report.stab_e1_witness = stab_e1_violation(m);
  report.level_k_witness = level_k_violation(m);
  report.in_lmod = !report.lmod_witness;
  report.in_stab_e1 = !report.stab_e1_witness;
  report.in_level_k = !report.level_k_witness;
  if (report.in_lmod) report.quotient_class = m(1, 1);
  if ((report.in_level_k && !report.in_stab_e1) || (report.in_stab_e1 && !report.in_lmod)) {
    throw Error(ErrorCode::Defect, "subgroup chain violated");
  }
  return report;
}

LiftReport lift_report(const MCGWord& word, Residue k) {
  const SquareMatrix integral = psi(word);
  LiftReport report = lift_report(mod_reduce(integral, k));
  report.umod_witness = umod_violation(integral);
  report.in_umod = !report.umod_witness;
  return report;
}

bool lcm_intersection_check(const MCGWord& word, Residue k, Residue l) {
  require_modulus(k);
  require_modulus(l);
  const auto d = static_cast<Residue>(lcm(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l)));
  const bool both = is_liftable(word, k) && is_liftable(word, l);
  return both == is_liftable(word, d);
}

BigInt index_stab_e1(std::size_t genus, std::uint64_t k) {
  if (genus == 0) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  return count_primitive(k, static_cast<unsigned>(2 * genus));
}

BigInt index_lmod(std::size_t genus, std::uint64_t k) {
  return index_stab_e1(genus, k) / totient(k);
}

CongruenceFlags congruence_class_g1(const SquareMatrix& m, Residue k) {
  require_modulus(k);
  if (m.size() != 2) throw Error(ErrorCode::DimensionMismatch, "congruence subgroups need a 2x2 matrix");
  if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) != 1) {
    throw Error(ErrorCode::InvalidArgument, "congruence subgroups need determinant 1");
  }
  const Residue a = canonical_residue(m(0, 0), k);
  const Residue b = canonical_residue(m(0, 1), k);
  const Residue c = canonical_residue(m(1, 0), k);
  const Residue d = canonical_residue(m(1, 1), k);
  CongruenceFlags flags;
  flags.gamma0 = c == 0;
  flags.gamma1 = flags.gamma0 && a == 1 && d == 1;
  flags.gamma = flags.gamma1 && b == 0;
  return flags;
}

}  // namespace liftcover

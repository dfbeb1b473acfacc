#pragma once

#include <cstddef>
#include <optional>

#include "liftcover/matrix.hpp"
#include "liftcover/word.hpp"

namespace liftcover {

/// An offending matrix entry; row and col are 1-based.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  BigInt value = 0;

  bool operator==(const Witness&) const = default;
};

// Membership predicates on Psi_k-images. All of them reject a non-symplectic
// matrix with Error(NotSymplectic). Witnesses name the first violated entry
// in row-major order.

/// Row 2 is zero off the diagonal and entry (2,2) is a unit mod k.
bool is_liftable(const ResidueMatrix& m);
std::optional<Witness> lift_violation(const ResidueMatrix& m);

/// M e_1 = l e_1 for some unit l, read directly off the first column.
bool stabilizes_e1_class(const ResidueMatrix& m);

/// Column 1 is e_1 and row 2 is e_2^T.
bool in_stab_e1(const ResidueMatrix& m);
std::optional<Witness> stab_e1_violation(const ResidueMatrix& m);

/// M = I mod k.
bool in_level_k(const ResidueMatrix& m);
std::optional<Witness> level_k_violation(const ResidueMatrix& m);

/// Integer row 2 is zero off the diagonal and entry (2,2) is +1 or -1.
bool in_umod(const SquareMatrix& m);
std::optional<Witness> umod_violation(const SquareMatrix& m);

bool is_liftable(const MCGWord& word, Residue k);

struct LiftReport {
  Residue k = 0;
  bool in_level_k = false;
  bool in_stab_e1 = false;
  bool in_lmod = false;
  /// Only available when the integer image is known.
  std::optional<bool> in_umod;
  /// Entry (2,2) of the residue image; present iff in_lmod.
  std::optional<Residue> quotient_class;
  std::optional<Witness> level_k_witness;
  std::optional<Witness> stab_e1_witness;
  std::optional<Witness> lmod_witness;
  std::optional<Witness> umod_witness;

  /// Witness of the largest subgroup that fails: LMod, then the e_1
  /// stabilizer, then level k.
  std::optional<Witness> witness() const;
};

LiftReport lift_report(const ResidueMatrix& m);
LiftReport lift_report(const MCGWord& word, Residue k);

/// [liftable at k and at l] <=> [liftable at lcm(k, l)]. Always true;
/// exposed as a test hook.
bool lcm_intersection_check(const MCGWord& word, Residue k, Residue l);

/// Index of LMod in Mod(S_g): primitive vectors of Z_k^{2g} divided by phi(k).
BigInt index_lmod(std::size_t genus, std::uint64_t k);
/// Index of the e_1 stabilizer: the number of primitive vectors of Z_k^{2g}.
BigInt index_stab_e1(std::size_t genus, std::uint64_t k);

/// Membership of a determinant-one 2x2 integer matrix [[a,b],[c,d]] in the
/// congruence subgroups Gamma(k) <= Gamma_1(k) <= Gamma_0(k).
struct CongruenceFlags {
  bool gamma = false;
  bool gamma1 = false;
  bool gamma0 = false;

  bool operator==(const CongruenceFlags&) const = default;
};

CongruenceFlags congruence_class_g1(const SquareMatrix& m, Residue k);

}  // namespace liftcover

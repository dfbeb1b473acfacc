#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "liftcover/matrix.hpp"
#include "liftcover/word.hpp"

namespace liftcover {

/// The map E -> e_22 from the liftable image onto Z_k^x.
/// Throws Error(NotLiftable) when m fails is_liftable.
Residue quotient_class(const ResidueMatrix& m);

/// Coset representative for the unit l: the word
/// phi_l = b1^(lbar - 1) a1^-1 b1^(l - 1) and the diagonal matrix Q_l with
/// (1,1) = l, (2,2) = lbar and ones elsewhere on the diagonal.
struct CosetRep {
  Residue ell = 1;
  Residue ell_bar = 1;
  MCGWord word{1};
  ResidueMatrix matrix;
};

ResidueMatrix coset_matrix(Residue ell, Residue k, std::size_t genus);

/// Throws Error(NotUnit) when gcd(l, k) != 1, and Error(Defect) when the
/// word's image is not liftable or its class disagrees with Q_l.
CosetRep coset_rep(Residue ell, Residue k, std::size_t genus);

struct CosetSystem {
  bool bijective = false;
  /// quotient_class(Psi_k(phi_l)) for each unit l in increasing order.
  std::vector<Residue> classes;
};

CosetSystem coset_system(Residue k, std::size_t genus);

/// The classes of the phi_l cover Z_k^x exactly once.
bool verify_coset_system(Residue k, std::size_t genus);

struct IotaExtension {
  /// [LMod : <<stab(e_1), iota>>] = phi(k) / 2.
  std::uint64_t index_in_lmod = 0;
  /// phi(k) == 2.
  bool lmod_equals_closure = false;
  /// quotient_class(Psi_k(iota)) = k - 1, of order two in Z_k^x.
  Residue iota_class = 0;
};

/// Requires k >= 3. Throws Error(Defect) if the class of iota is not of order two.
IotaExtension iota_extension_data(Residue k, std::size_t genus = 1);

}  // namespace liftcover

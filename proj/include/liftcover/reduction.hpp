#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liftcover/matrix.hpp"
#include "liftcover/word.hpp"

namespace liftcover {

/// Block embedding [[A, 0], [0, I]] of a determinant-one 2x2 residue matrix
/// into Sp(2g, Z_k).
ResidueMatrix eta_embed(const ResidueMatrix& a, std::size_t genus = 2);

/// Genus-2 factorization of a member A of the e_1 stabilizer:
/// A * M1 * M2 * M3 * M4 = eta([[1, beta - alpha - alpha*beta], [0, 1]]).
struct ReductionWitness {
  ResidueMatrix input;
  ResidueMatrix m1;  ///< clears the lower-right block
  ResidueMatrix m2;  ///< clears entry (1,2)
  ResidueMatrix m3;  ///< Psi_k(c1^beta) Psi_k(a2^-beta)
  ResidueMatrix m4;  ///< conjugate of Psi_k(c1^-alpha) Psi_k(a2^alpha) by a2 b2 a2
  Residue alpha = 0;  ///< e13 e44 - e14 e43
  Residue beta = 0;   ///< e14 e33 - e13 e34
  ResidueMatrix residual;
  Residue residual_entry = 0;  ///< beta - alpha - alpha*beta
  bool verified = false;
};

/// Words whose images are M3 and M4.
MCGWord m3_word(Residue beta);
MCGWord m4_word(Residue alpha);

/// Throws Error(InvalidArgument) unless A is 4x4 and in the e_1 stabilizer,
/// and Error(Defect) if any internal identity fails.
ReductionWitness reduce_to_eta(const ResidueMatrix& a);

/// Word in a_h, b_h with image the 2x2 block `block` placed on handle h
/// (rows and columns 2h-1, 2h). Requires det(block) = 1 mod k.
MCGWord sl2_block_word(const ResidueMatrix& block, std::size_t handle, std::size_t genus);

struct Factor {
  std::string label;  ///< "residual", "M4^-1", "M3^-1", "M2^-1", "M1^-1"
  std::string role;   ///< "eta_image", "twist_word" or "sl2_block"
  MCGWord word{2};
  ResidueMatrix matrix;
  /// 0-based index into the supplied generator words whose image equals this
  /// factor, when one does.
  std::optional<std::size_t> generator_match;
};

struct Factorization {
  ReductionWitness witness;
  std::vector<Factor> factors;  ///< product in this order equals the input
  MCGWord word{2};              ///< concatenation of the factor words
  bool round_trip = false;
};

/// A = residual * M4^-1 * M3^-1 * M2^-1 * M1^-1 with each factor spelled as
/// a word in a1, a2, b2, c1. Factors whose image matches one of
/// `generator_words` are tagged with the match.
Factorization express_via_generators(const ResidueMatrix& a,
                                     const std::vector<MCGWord>& generator_words = {});

}  // namespace liftcover

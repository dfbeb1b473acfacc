#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "liftcover/matrix.hpp"
#include "liftcover/penner.hpp"
#include "liftcover/word.hpp"

namespace liftcover {

using Rng = std::mt19937_64;

/// Uniform length in [0, max_len], letters drawn from the Lickorish
/// generators with exponents in [-max_exp, max_exp] \ {0}.
MCGWord random_word(Rng& rng, std::size_t genus, std::size_t max_len, std::int64_t max_exp = 3);

/// Entries uniform in [1, max_entry].
AdmissibleTuple random_tuple(Rng& rng, std::size_t genus, std::int64_t max_entry = 5);

// Constructive samplers. Each result is checked against its predicate and
// Error(Defect) is thrown if the check fails.

/// Products of twists that fix e_1 mod k (a_i, c_i, b_j for j >= 2, b_1^k).
MCGWord random_stab_word(Rng& rng, std::size_t genus, Residue k, std::size_t max_len);
/// A stabilizer word followed by a random coset word phi_l.
MCGWord random_lmod_word(Rng& rng, std::size_t genus, Residue k, std::size_t max_len);
/// Products of conjugates w x^k w^-1 of k-th powers of generators.
MCGWord random_level_word(Rng& rng, std::size_t genus, Residue k, std::size_t max_len);

/// Random words of length <= max_len kept once psi_k lands in the e_1
/// stabilizer. Returns nullopt after max_attempts misses.
std::optional<MCGWord> sample_stab_by_filter(Rng& rng, std::size_t genus, Residue k,
                                             std::size_t max_len = 25,
                                             std::uint64_t max_attempts = 1'000'000);

/// A 4x4 member of the e_1 stabilizer built entrywise: a random SL(2, Z_k)
/// lower block, random e12, e13, e14, and the two entries forced by the
/// symplectic condition.
ResidueMatrix synthetic_stab_member(Rng& rng, Residue k);

/// Random element of SL(2, Z_k) as a product of elementary matrices.
ResidueMatrix random_sl2(Rng& rng, Residue k, std::size_t steps = 6);

}  // namespace liftcover

#pragma once

#include <cstdint>
#include <vector>

#include "liftcover/matrix.hpp"
#include "liftcover/word.hpp"

namespace liftcover {

// Basis convention: e_{2j-1} is the class of a_j and e_{2j} the class of b_j.
//
// Every twist acts on homology as the transvection x -> x + <u, x> u, with
// <x, y> = x^T J y and u = e_{2i-1} for a_i, e_{2i} for b_i, and
// e_{2i-1} - e_{2i+1} for c_i. This gives
//   T_{a_i} -> I + E_{2i-1,2i},  T_{b_i} -> I - E_{2i,2i-1},
// and for g = 2, T_{c_1} -> [[1,1,0,-1],[0,1,0,0],[0,-1,1,1],[0,0,0,1]].
// Since (u u^T J)^2 = 0, T^m -> I + m u u^T J for every integer m.

/// Homology class of the twist curve (zero vector for iota).
std::vector<std::int64_t> twist_curve_class(const Generator& gen, std::size_t genus);

/// Integer image of a single positive twist.
SquareMatrix twist_matrix(const Generator& gen, std::size_t genus);

/// Integer image of gen^exponent in closed form.
SquareMatrix twist_power(const Generator& gen, std::size_t genus, std::int64_t exponent);
ResidueMatrix twist_power_mod(const Generator& gen, std::size_t genus,
                              std::int64_t exponent, Residue k);

/// -I_{2g}, the image of the hyperelliptic involution.
SquareMatrix iota_matrix(std::size_t genus);

/// Product of the letter images, left to right in word order.
SquareMatrix psi(const MCGWord& word);

/// psi(word) mod k, reducing after every multiplication.
ResidueMatrix psi_k(const MCGWord& word, Residue k);

}  // namespace liftcover

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "liftcover/matrix.hpp"

namespace liftcover {

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Euler's totient. Throws InvalidArgument for k = 0.
std::uint64_t totient(std::uint64_t k);

/// Number of primitive vectors in Z_k^d, i.e. k^d * prod_{p | k} (1 - p^-d),
/// evaluated exactly as prod over p^e || k of (p^(e d) - p^((e-1) d)).
BigInt count_primitive(std::uint64_t k, unsigned d);

/// gcd(v_1, ..., v_d, k) == 1.
bool is_primitive_vector(std::span<const Residue> v, Residue k);

bool is_unit(Residue a, Residue k);

/// Multiplicative inverse in Z_k, or nullopt when gcd(a, k) != 1.
std::optional<Residue> inverse_mod(Residue a, Residue k);

/// Units of Z_k in increasing order.
std::vector<Residue> units(Residue k);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace liftcover

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "liftcover/matrix.hpp"
#include "liftcover/word.hpp"

namespace liftcover {

enum class OrbitMode { Class, Vector };

std::string_view to_string(OrbitMode mode);

struct OrbitOptions {
  std::uint64_t cap = 10'000'000;
  unsigned workers = 1;
  /// Twists acting on Z_k^{2g} (together with their inverses). Empty means
  /// the Lickorish generators.
  std::vector<Generator> generators;
};

struct OrbitResult {
  Residue k = 0;
  std::size_t genus = 0;
  OrbitMode mode = OrbitMode::Class;
  std::uint64_t orbit_size = 0;
  /// Number of primitive vectors, or of primitive classes {l v}.
  BigInt expected = 0;
  bool transitive = false;
  /// States popped from the frontier (equals orbit_size on completion).
  std::uint64_t visited = 0;
  std::string generator_set_id;
};

/// Lexicographically least element of {l v : l a unit mod k}.
std::vector<Residue> canonical_class(std::span<const Residue> v, Residue k);

/// Breadth-first closure of the class of e_1 under the generators acting on
/// classes {l v}. Transitive iff orbit_size = count_primitive(k, 2g)/phi(k).
/// Throws CapExceededError once more than options.cap states are discovered.
OrbitResult orbit_primitive_classes(Residue k, std::size_t genus, const OrbitOptions& options = {});

/// Same on bare vectors; transitive iff orbit_size = count_primitive(k, 2g).
OrbitResult orbit_primitive_vectors(Residue k, std::size_t genus, const OrbitOptions& options = {});

}  // namespace liftcover

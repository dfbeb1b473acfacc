#include "liftcover/orbit.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "liftcover/error.hpp"
#include "liftcover/number_theory.hpp"
#include "liftcover/symplectic_rep.hpp"

namespace liftcover {

namespace {

using Code = std::uint64_t;

/// Visited set over mixed-radix codes: a bitmap when the state space is
/// small, a hash set otherwise. Only the merging thread writes to it.
class VisitedSet {
 public:
  explicit VisitedSet(Code universe) {
    if (universe <= (Code{1} << 28)) bits_.assign(universe, false);
  }

  /// True when `code` was not present before.
  bool insert(Code code) {
    if (!bits_.empty()) {
      if (bits_[code]) return false;
      bits_[code] = true;
      return true;
    }
    return hashed_.insert(code).second;
  }

 private:
  std::vector<bool> bits_;
  std::unordered_set<Code> hashed_;
};

struct Space {
  std::size_t dim;
  Residue k;
  Code universe;

  Code encode(std::span<const Residue> v) const {
    Code code = 0;
    for (Residue x : v) code = code * static_cast<Code>(k) + static_cast<Code>(x);
    return code;
  }

  void decode(Code code, std::vector<Residue>& v) const {
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<Residue>(code % static_cast<Code>(k));
      code /= static_cast<Code>(k);
    }
  }
};

Space make_space(Residue k, std::size_t genus) {
  require_modulus(k);
  if (genus == 0) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  const std::size_t dim = 2 * genus;
  Code universe = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (universe > (Code{1} << 62) / static_cast<Code>(k)) {
      throw Error(ErrorCode::InvalidArgument, "Z_k^{2g} is too large to encode");
    }
    universe *= static_cast<Code>(k);
  }
  return {dim, k, universe};
}

std::vector<ResidueMatrix> action_matrices(const OrbitOptions& options, std::size_t genus, Residue k) {
  const auto gens = options.generators.empty() ? lickorish_generators(genus) : options.generators;
  std::vector<ResidueMatrix> out;
  for (const Generator& g : gens) {
    out.push_back(twist_power_mod(g, genus, 1, k));
    out.push_back(twist_power_mod(g, genus, -1, k));
  }
  return out;
}

std::string generator_set_id(const OrbitOptions& options) {
  if (options.generators.empty()) return "lickorish";
  std::string id = "custom:";
  for (std::size_t i = 0; i < options.generators.size(); ++i) {
    id += (i ? "," : "") + options.generators[i].name();
  }
  return id;
}

OrbitResult run_orbit(Residue k, std::size_t genus, const OrbitOptions& options, OrbitMode mode) {
  const Space space = make_space(k, genus);
  const auto mats = action_matrices(options, genus, k);
  const auto unit_list = units(k);
  const unsigned workers = std::max(1U, options.workers);

  auto canonical_code = [&](std::vector<Residue>& v) {
    if (mode == OrbitMode::Class) v = canonical_class(v, k);
    return space.encode(v);
  };

  // Expands frontier[begin, end) into candidate codes, in frontier order
  // then generator order.
  auto expand = [&](const std::vector<Code>& frontier, std::size_t begin, std::size_t end,
                    std::vector<Code>& out) {
    std::vector<Residue> v(space.dim), w(space.dim);
    for (std::size_t f = begin; f < end; ++f) {
      space.decode(frontier[f], v);
      for (const ResidueMatrix& m : mats) {
        for (std::size_t r = 0; r < space.dim; ++r) {
          Residue acc = 0;
          for (std::size_t c = 0; c < space.dim; ++c) acc = (acc + m(r, c) * v[c]) % k;
          w[r] = acc;
        }
        out.push_back(canonical_code(w));
      }
    }
  };

  VisitedSet visited(space.universe);
  std::vector<Residue> start(space.dim, 0);
  start[0] = 1;
  std::vector<Code> frontier{canonical_code(start)};
  visited.insert(frontier.front());
  std::uint64_t discovered = 1;
  std::uint64_t popped = 0;

  while (!frontier.empty()) {
    popped += frontier.size();
    const std::size_t shards = std::min<std::size_t>(workers, frontier.size());
    std::vector<std::vector<Code>> candidates(shards);
    const std::size_t chunk = (frontier.size() + shards - 1) / shards;
    if (shards == 1) {
      expand(frontier, 0, frontier.size(), candidates[0]);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t s = 0; s < shards; ++s) {
        const std::size_t begin = s * chunk;
        const std::size_t end = std::min(frontier.size(), begin + chunk);
        pool.emplace_back([&, s, begin, end] { expand(frontier, begin, end, candidates[s]); });
      }
    }
    std::vector<Code> next;
    for (const auto& shard : candidates) {
      for (Code code : shard) {
        if (!visited.insert(code)) continue;
        next.push_back(code);
        if (++discovered > options.cap) throw CapExceededError(discovered, options.cap);
      }
    }
    frontier = std::move(next);
  }

  OrbitResult result;
  result.k = k;
  result.genus = genus;
  result.mode = mode;
  result.orbit_size = discovered;
  result.visited = popped;
  const BigInt primitive = count_primitive(static_cast<std::uint64_t>(k), static_cast<unsigned>(space.dim));
  result.expected = mode == OrbitMode::Class ? BigInt(primitive / totient(static_cast<std::uint64_t>(k)))
                                             : primitive;
  result.transitive = BigInt(result.orbit_size) == result.expected;
  result.generator_set_id = generator_set_id(options);
  return result;
}

}  // namespace

std::string_view to_string(OrbitMode mode) {
  return mode == OrbitMode::Class ? "class" : "vector";
}

std::vector<Residue> canonical_class(std::span<const Residue> v, Residue k) {
  std::vector<Residue> best(v.begin(), v.end());
  for (Residue& x : best) x = canonical_residue(x, k);
  std::vector<Residue> scaled(v.size());
  for (Residue ell : units(k)) {
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = canonical_residue(v[i] * ell, k);
    if (scaled < best) best = scaled;
  }
  return best;
}

OrbitResult orbit_primitive_classes(Residue k, std::size_t genus, const OrbitOptions& options) {
  return run_orbit(k, genus, options, OrbitMode::Class);
}

OrbitResult orbit_primitive_vectors(Residue k, std::size_t genus, const OrbitOptions& options) {
  return run_orbit(k, genus, options, OrbitMode::Vector);
}

}  // namespace liftcover

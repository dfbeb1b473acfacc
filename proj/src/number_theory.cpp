#include "liftcover/number_theory.hpp"

#include <numeric>

#include "liftcover/error.hpp"

namespace liftcover {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1U);
  return out;
}

std::uint64_t totient(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "totient(0) is undefined");
  std::uint64_t phi = k;
  for (const auto& [p, e] : factorize(k)) phi = phi / p * (p - 1);
  return phi;
}

BigInt count_primitive(std::uint64_t k, unsigned d) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "count_primitive needs k >= 1");
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "count_primitive needs d >= 1");
  BigInt count = 1;
  for (const auto& [p, e] : factorize(k)) {
    const BigInt pd = boost::multiprecision::pow(BigInt(p), d);
    const BigInt lower = boost::multiprecision::pow(pd, e - 1);
    count *= lower * pd - lower;
  }
  return count;
}

bool is_primitive_vector(std::span<const Residue> v, Residue k) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  Residue g = k;
  for (Residue x : v) g = std::gcd(g, canonical_residue(x, k));
  return g == 1;
}

bool is_unit(Residue a, Residue k) {
  return std::gcd(canonical_residue(a, k), k) == 1;
}

std::optional<Residue> inverse_mod(Residue a, Residue k) {
  Residue r0 = k, r1 = canonical_residue(a, k);
  Residue s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Residue q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) return std::nullopt;
  return canonical_residue(s0, k);
}

std::vector<Residue> units(Residue k) {
  std::vector<Residue> out;
  for (Residue a = 1; a < k; ++a)
    if (std::gcd(a, k) == 1) out.push_back(a);
  if (k == 1) out.push_back(0);
  return out;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace liftcover

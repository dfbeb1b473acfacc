#include "liftcover/sampling.hpp"

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/number_theory.hpp"
#include "liftcover/quotient_series.hpp"
#include "liftcover/symplectic_rep.hpp"

namespace liftcover {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::int64_t nonzero_exponent(Rng& rng, std::int64_t max_exp) {
  const std::int64_t e = uniform(rng, 1, max_exp);
  return uniform(rng, 0, 1) ? e : -e;
}

std::vector<Letter> stab_alphabet(std::size_t genus, Residue k) {
  std::vector<Letter> out;
  for (std::size_t i = 1; i <= genus; ++i) out.push_back({Generator::a(i), 1});
  for (std::size_t i = 2; i <= genus; ++i) out.push_back({Generator::b(i), 1});
  for (std::size_t i = 1; i < genus; ++i) out.push_back({Generator::c(i), 1});
  out.push_back({Generator::b(1), k});
  return out;
}

void check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::Defect, std::string("sampler produced a non-member of ") + what);
}

}  // namespace

MCGWord random_word(Rng& rng, std::size_t genus, std::size_t max_len, std::int64_t max_exp) {
  const auto gens = lickorish_generators(genus);
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_len)));
  MCGWord w(genus);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& g = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
    w.append(g, nonzero_exponent(rng, max_exp));
  }
  return w;
}

AdmissibleTuple random_tuple(Rng& rng, std::size_t genus, std::int64_t max_entry) {
  AdmissibleTuple t;
  t.genus = genus;
  for (std::size_t i = 0; i + 1 < genus; ++i) t.p.push_back(uniform(rng, 1, max_entry));
  for (std::size_t j = 0; j < genus; ++j) {
    const auto kj = uniform(rng, 1, max_entry);
    t.kl.emplace_back(kj, uniform(rng, 1, max_entry));
  }
  t.validate();
  return t;
}

MCGWord random_stab_word(Rng& rng, std::size_t genus, Residue k, std::size_t max_len) {
  const auto alphabet = stab_alphabet(genus, k);
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_len)));
  MCGWord w(genus);
  for (std::size_t i = 0; i < len; ++i) {
    const Letter& l = alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(alphabet.size()) - 1))];
    w.append(l.generator, l.exponent * nonzero_exponent(rng, 2));
  }
  check(in_stab_e1(psi_k(w, k)), "the e_1 stabilizer");
  return w;
}

MCGWord random_lmod_word(Rng& rng, std::size_t genus, Residue k, std::size_t max_len) {
  const auto us = units(k);
  const Residue ell = us[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(us.size()) - 1))];
  MCGWord coset = coset_rep(ell, k, 1).word;
  MCGWord lifted(genus, coset.letters());
  MCGWord w = uniform(rng, 0, 1) ? concat(random_stab_word(rng, genus, k, max_len), lifted)
                                 : concat(lifted, random_stab_word(rng, genus, k, max_len));
  check(is_liftable(psi_k(w, k)), "LMod");
  return w;
}

MCGWord random_level_word(Rng& rng, std::size_t genus, Residue k, std::size_t max_len) {
  const auto gens = lickorish_generators(genus);
  const auto pieces = uniform(rng, 1, 3);
  MCGWord w(genus);
  for (std::int64_t i = 0; i < pieces; ++i) {
    const MCGWord outer = random_word(rng, genus, max_len, 2);
    const auto& g = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
    MCGWord power(genus);
    power.append(g, k * nonzero_exponent(rng, 1));
    w = concat(w, concat(concat(outer, power), outer.inverse()));
  }
  check(in_level_k(psi_k(w, k)), "the level-k subgroup");
  return w;
}

std::optional<MCGWord> sample_stab_by_filter(Rng& rng, std::size_t genus, Residue k,
                                             std::size_t max_len, std::uint64_t max_attempts) {
  for (std::uint64_t i = 0; i < max_attempts; ++i) {
    MCGWord w = random_word(rng, genus, max_len, 3);
    if (in_stab_e1(psi_k(w, k))) return w;
  }
  return std::nullopt;
}

ResidueMatrix random_sl2(Rng& rng, Residue k, std::size_t steps) {
  ResidueMatrix m = ResidueMatrix::identity(2, k);
  for (std::size_t i = 0; i < steps; ++i) {
    const Residue x = uniform(rng, 0, k - 1);
    ResidueMatrix e = ResidueMatrix::identity(2, k);
    if (i % 2 == 0) {
      e.set(0, 1, x);
    } else {
      e.set(1, 0, x);
    }
    m = m * e;
  }
  return m;
}

ResidueMatrix synthetic_stab_member(Rng& rng, Residue k) {
  const ResidueMatrix block = random_sl2(rng, k);
  const Residue e12 = uniform(rng, 0, k - 1);
  const Residue e13 = uniform(rng, 0, k - 1);
  const Residue e14 = uniform(rng, 0, k - 1);
  const Residue e33 = block(0, 0), e34 = block(0, 1), e43 = block(1, 0), e44 = block(1, 1);
  const Residue alpha = canonical_residue(e13 * e44 - e14 * e43, k);
  const Residue beta = canonical_residue(e14 * e33 - e13 * e34, k);
  ResidueMatrix a = ResidueMatrix::from_rows({{1, e12, e13, e14},
                                              {0, 1, 0, 0},
                                              {0, beta, e33, e34},
                                              {0, -alpha, e43, e44}},
                                             k);
  check(is_symplectic(a, SymplecticForm(2)) && in_stab_e1(a), "the e_1 stabilizer");
  return a;
}

}  // namespace liftcover

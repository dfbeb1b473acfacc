#include "doctest.h"

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/reduction.hpp"
#include "liftcover/sampling.hpp"
#include "liftcover/symplectic_rep.hpp"

using namespace liftcover;

namespace {

void check_witness(const ResidueMatrix& a) {
  const Residue k = a.modulus();
  const auto w = reduce_to_eta(a);
  CHECK(w.verified);
  CHECK(a * w.m1 * w.m2 * w.m3 * w.m4 == w.residual);
  CHECK(w.residual == eta_embed(ResidueMatrix::from_rows({{1, w.beta - w.alpha - w.alpha * w.beta}, {0, 1}}, k)));
  CHECK(w.residual_entry == canonical_residue(w.beta - w.alpha - w.alpha * w.beta, k));
  CHECK(w.alpha == canonical_residue(a(0, 2) * a(3, 3) - a(0, 3) * a(3, 2), k));
  CHECK(w.beta == canonical_residue(a(0, 3) * a(2, 2) - a(0, 2) * a(2, 3), k));
  for (const auto* m : {&w.m1, &w.m2, &w.m3, &w.m4}) CHECK(in_stab_e1(*m));
  CHECK(w.m3 == psi_k(m3_word(w.beta), k));
  CHECK(w.m4 == psi_k(m4_word(w.alpha), k));
}

}  // namespace

TEST_CASE("eta embedding") {
  CHECK(eta_embed(ResidueMatrix::identity(2, 5)).is_identity());
  auto e = ResidueMatrix::identity(4, 5);
  e.set(0, 1, 1);
  CHECK(eta_embed(ResidueMatrix::from_rows({{1, 1}, {0, 1}}, 5)) == e);
  const auto rot = eta_embed(ResidueMatrix::from_rows({{0, 1}, {4, 0}}, 5));
  CHECK(rot(1, 0) == 4);
  CHECK(rot(2, 2) == 1);
  CHECK_THROWS_AS(eta_embed(ResidueMatrix::from_rows({{2, 0}, {0, 1}}, 5)), Error);
}

TEST_CASE("closed forms of M3 and M4") {
  const Residue k = 11;
  for (Residue t = 0; t < k; ++t) {
    CHECK(psi_k(m3_word(t), k) ==
          ResidueMatrix::from_rows({{1, t, 0, -t}, {0, 1, 0, 0}, {0, -t, 1, 0}, {0, 0, 0, 1}}, k));
    CHECK(psi_k(m4_word(t), k) ==
          ResidueMatrix::from_rows({{1, -t, -t, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, t, 0, 1}}, k));
  }
}

TEST_CASE("trivial and single-twist inputs") {
  const auto id = reduce_to_eta(ResidueMatrix::identity(4, 5));
  CHECK(id.alpha == 0);
  CHECK(id.beta == 0);
  CHECK(id.m1.is_identity());
  CHECK(id.m2.is_identity());
  CHECK(id.m3.is_identity());
  CHECK(id.m4.is_identity());
  CHECK(id.residual.is_identity());

  const auto a1 = reduce_to_eta(psi_k(parse_word("a1", 2), 5));
  CHECK(a1.alpha == 0);
  CHECK(a1.beta == 0);
  CHECK(a1.m2(0, 1) == 4);
  CHECK(a1.residual.is_identity());
}

TEST_CASE("non-members are rejected") {
  CHECK_THROWS_AS(reduce_to_eta(psi_k(parse_word("b1", 2), 5)), Error);
  CHECK_THROWS_AS(reduce_to_eta(psi_k(parse_word("a1", 3), 5)), Error);
}

TEST_CASE("filtered and synthetic members verify") {
  Rng rng(53);
  for (Residue k : {2, 3, 4, 5, 7}) {
    for (int i = 0; i < 40; ++i) {
      const auto w = sample_stab_by_filter(rng, 2, k, 25);
      REQUIRE(w);
      check_witness(psi_k(*w, k));
      check_witness(synthetic_stab_member(rng, k));
    }
  }
}

TEST_CASE("SL(2) block words") {
  Rng rng(59);
  for (Residue k : {2, 3, 4, 6, 9, 10}) {
    for (int i = 0; i < 30; ++i) {
      const auto block = random_sl2(rng, k, 5);
      const auto w = sl2_block_word(block, 2, 2);
      auto expected = ResidueMatrix::identity(4, k);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) expected.set(2 + r, 2 + c, block(r, c));
      CHECK(psi_k(w, k) == expected);
    }
  }
}

TEST_CASE("factorization round trips") {
  const auto id = express_via_generators(ResidueMatrix::identity(4, 5));
  CHECK(id.word.empty());
  CHECK(id.round_trip);

  const auto a2 = psi_k(parse_word("a2^3", 2), 5);
  const auto f = express_via_generators(a2);
  CHECK(f.round_trip);
  CHECK(psi_k(f.word, 5) == a2);

  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const auto m = synthetic_stab_member(rng, 3);
    const auto g = express_via_generators(m);
    CHECK(g.round_trip);
    CHECK(psi_k(g.word, 3) == m);
    ResidueMatrix product = ResidueMatrix::identity(4, 3);
    for (const auto& factor : g.factors) product = product * factor.matrix;
    CHECK(product == m);
  }
}

TEST_CASE("generator words are matched to factors") {
  const auto a = psi_k(parse_word("a1^2", 2), 5);
  const std::vector<MCGWord> gens{parse_word("b2", 2), parse_word("a1^2", 2)};
  const auto f = express_via_generators(a, gens);
  bool matched = false;
  for (const auto& factor : f.factors) {
    if (factor.generator_match) {
      CHECK(psi_k(gens[*factor.generator_match], 5) == factor.matrix);
      matched = true;
    }
  }
  CHECK(f.round_trip);
  CHECK(matched);
}

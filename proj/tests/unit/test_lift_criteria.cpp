#include "doctest.h"

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/sampling.hpp"
#include "liftcover/symplectic_rep.hpp"
#include "support/oracles.hpp"

using namespace liftcover;

namespace {

ResidueMatrix image(const char* word, std::size_t g, Residue k) { return psi_k(parse_word(word, g), k); }

}  // namespace

TEST_CASE("is_liftable examples") {
  CHECK(is_liftable(image("a1", 2, 4)));
  CHECK_FALSE(is_liftable(image("b1", 2, 3)));
  CHECK(lift_violation(image("b1", 2, 3)) == Witness{2, 1, 2});
  CHECK(is_liftable(image("b1^3", 2, 3)));
  CHECK_FALSE(lift_violation(image("b1^3", 2, 3)));
}

TEST_CASE("unit condition on entry (2,2)") {
  // diag(3, 3) has determinant 9 = 1 mod 8.
  const auto q = ResidueMatrix::from_rows({{3, 0}, {0, 3}}, 8);
  CHECK(is_liftable(q));
  CHECK_FALSE(in_stab_e1(q));
  CHECK(stabilizes_e1_class(q));
}

TEST_CASE("non-symplectic input is rejected") {
  const auto bad = ResidueMatrix::from_rows({{2, 0}, {0, 1}}, 5);
  CHECK_THROWS_AS(is_liftable(bad), Error);
  CHECK_THROWS_AS(in_stab_e1(bad), Error);
  CHECK_THROWS_AS(in_level_k(bad), Error);
  CHECK_THROWS_AS(stabilizes_e1_class(bad), Error);
  CHECK_THROWS_AS(in_umod(SquareMatrix::from_rows({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("stabilizer of e1") {
  CHECK(stabilizes_e1_class(ResidueMatrix::identity(4, 5)));
  CHECK_FALSE(stabilizes_e1_class(image("b1", 1, 2)));
  for (Residue k : {2, 3, 5, 9}) CHECK(in_stab_e1(image("a1", 2, k)));
  CHECK_FALSE(in_stab_e1(image("iota", 1, 3)));
  CHECK(stab_e1_violation(image("iota", 1, 3)) == Witness{1, 1, 2});
  CHECK(in_stab_e1(image("iota", 1, 2)));
  CHECK(in_stab_e1(image("iota", 2, 2)));
}

TEST_CASE("level k") {
  for (Residue k : {2, 3, 5}) {
    CHECK(in_level_k(psi_k(MCGWord(2, {{Generator::a(1), k}}), k)));
  }
  CHECK_FALSE(in_level_k(image("a1", 2, 2)));
  CHECK(level_k_violation(image("a1", 2, 2)) == Witness{1, 2, 1});
  CHECK(in_level_k(ResidueMatrix::identity(6, 4)));
}

TEST_CASE("integer UMod") {
  CHECK(in_umod(iota_matrix(2)));
  CHECK(in_umod(psi(parse_word("a1", 2))));
  CHECK_FALSE(in_umod(psi(parse_word("b1", 2))));
  CHECK(umod_violation(psi(parse_word("b1", 2))) == Witness{2, 1, -1});
}

TEST_CASE("lift reports") {
  const auto a1 = lift_report(parse_word("a1", 2), 5);
  CHECK(a1.in_lmod);
  CHECK(a1.in_stab_e1);
  CHECK(a1.quotient_class == 1);
  const auto b1 = lift_report(parse_word("b1", 2), 5);
  CHECK_FALSE(b1.in_lmod);
  CHECK_FALSE(b1.quotient_class);
  CHECK(b1.witness() == Witness{2, 1, 4});
  const auto iota = lift_report(parse_word("iota", 2), 2);
  CHECK(iota.in_stab_e1);
  CHECK(iota.in_level_k);
  CHECK(iota.witness() == std::nullopt);
  const auto iota5 = lift_report(parse_word("iota", 2), 5);
  CHECK(iota5.in_lmod);
  CHECK(iota5.quotient_class == 4);
  CHECK(iota5.witness() == Witness{1, 1, 4});
}

TEST_CASE("lcm intersection examples") {
  CHECK(lcm_intersection_check(parse_word("b1^6", 1), 2, 3));
  CHECK(is_liftable(parse_word("b1^6", 1), 6));
  CHECK_FALSE(is_liftable(parse_word("b1^2", 1), 3));
  CHECK_FALSE(is_liftable(parse_word("b1^2", 1), 6));
  CHECK(lcm_intersection_check(parse_word("b1^2", 1), 2, 3));
  CHECK_FALSE(is_liftable(parse_word("b1^3", 1), 2));
  CHECK_FALSE(is_liftable(parse_word("b1^3", 1), 4));
  CHECK(lcm_intersection_check(parse_word("b1^3", 1), 2, 4));
}

TEST_CASE("indices") {
  CHECK(index_lmod(2, 3) == 40);
  CHECK(index_stab_e1(2, 3) == 80);
  CHECK(index_lmod(2, 2) == 15);
  CHECK(index_stab_e1(2, 2) == 15);
  CHECK(index_stab_e1(1, 4) == 12);
  CHECK(index_lmod(1, 4) == 6);
  CHECK(index_stab_e1(1, 4) == oracle::brute_primitive_count(4, 2));
}

TEST_CASE("congruence subgroups at genus one") {
  const auto flags = [](std::initializer_list<std::vector<long long>> rows, Residue k) {
    return congruence_class_g1(SquareMatrix::from_rows(std::vector<std::vector<long long>>(rows)), k);
  };
  CHECK(flags({{1, 1}, {0, 1}}, 5) == CongruenceFlags{false, true, true});
  CHECK(flags({{1, 5}, {5, 26}}, 5) == CongruenceFlags{true, true, true});
  CHECK(flags({{2, 1}, {5, 3}}, 5) == CongruenceFlags{false, false, true});
  CHECK_THROWS_AS(flags({{2, 0}, {0, 1}}, 5), Error);
}

TEST_CASE("genus one predicates match congruence subgroups") {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const Residue k = 2 + i % 9;
    const auto w = random_word(rng, 1, 12, 3);
    const auto m = psi(w);
    const auto f = congruence_class_g1(m, k);
    const auto r = mod_reduce(m, k);
    CHECK(is_liftable(r) == f.gamma0);
    CHECK(in_stab_e1(r) == f.gamma1);
    CHECK(in_level_k(r) == f.gamma);
  }
}

TEST_CASE("chain, equivalence and closure on random words") {
  Rng rng(37);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    const Residue k = 2 + (i / 3) % 7;
    const auto w = i % 2 ? random_word(rng, g, 20, 3) : random_lmod_word(rng, g, k, 10);
    const auto m = psi_k(w, k);
    const bool lift = is_liftable(m), stab = in_stab_e1(m), level = in_level_k(m);
    CHECK(lift == stabilizes_e1_class(m));
    if (level) CHECK(stab);
    if (stab) CHECK(lift);
    const auto inv = symplectic_inverse(m, SymplecticForm(g));
    CHECK(is_liftable(inv) == lift);
    CHECK(in_stab_e1(inv) == stab);
    CHECK(in_level_k(inv) == level);
  }
  for (int i = 0; i < 300; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    const Residue k = 2 + (i / 3) % 7;
    const auto u = psi_k(random_lmod_word(rng, g, k, 8), k), v = psi_k(random_lmod_word(rng, g, k, 8), k);
    CHECK(is_liftable(u * v));
    const auto s = psi_k(random_stab_word(rng, g, k, 8), k), t = psi_k(random_stab_word(rng, g, k, 8), k);
    CHECK(in_stab_e1(s * t));
    const auto n = psi_k(random_level_word(rng, g, k, 4), k), p = psi_k(random_level_word(rng, g, k, 4), k);
    CHECK(in_level_k(n * p));
  }
}

TEST_CASE("normality by conjugation") {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    const Residue k = 2 + (i / 3) % 7;
    const auto w = random_lmod_word(rng, g, k, 8);
    const auto n = random_level_word(rng, g, k, 4);
    const auto s = random_stab_word(rng, g, k, 8);
    CHECK(in_level_k(psi_k(concat(concat(w, n), w.inverse()), k)));
    CHECK(in_stab_e1(psi_k(concat(concat(w, s), w.inverse()), k)));
  }
}

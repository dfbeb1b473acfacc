// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/number_theory.hpp"
#include "liftcover/orbit.hpp"
#include "liftcover/penner.hpp"
#include "liftcover/quotient_series.hpp"
#include "liftcover/reduction.hpp"
#include "liftcover/sampling.hpp"
#include "liftcover/symplectic_rep.hpp"
#include "support/oracles.hpp"

using namespace liftcover;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
  std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Outcome prime_index() {
  struct Case {
    std::size_t g;
    Residue k;
    std::uint64_t expected;
  };
  const Case cases[] = {{1, 2, 3}, {2, 2, 15}, {2, 3, 40}, {3, 2, 63}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = orbit_primitive_classes(c.k, c.g);
    const double secs = seconds_since(start);
    std::uint64_t pow = 1;
    for (std::size_t i = 0; i < 2 * c.g; ++i) pow *= static_cast<std::uint64_t>(c.k);
    const std::uint64_t formula = (pow - 1) / static_cast<std::uint64_t>(c.k - 1);
    ok = ok && r.orbit_size == c.expected && formula == c.expected && r.transitive && secs < 10.0;
    d << "g=" << c.g << " k=" << c.k << " orbit=" << r.orbit_size << " in " << secs << "s; ";
  }
  return {ok, d.str()};
}

Outcome composite_index() {
  struct Case {
    std::size_t g;
    Residue k;
  };
  const Case cases[] = {{1, 4}, {1, 6}, {2, 4}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& c : cases) {
    const auto uk = static_cast<std::uint64_t>(c.k);
    const auto d2g = static_cast<unsigned>(2 * c.g);
    const BigInt formula = count_primitive(uk, d2g);
    const std::uint64_t brute = oracle::brute_primitive_count(uk, d2g);
    const auto r = orbit_primitive_classes(c.k, c.g);
    ok = ok && formula == brute && BigInt(r.orbit_size) == formula / totient(uk) && r.transitive;
    d << "g=" << c.g << " k=" << c.k << " primitive=" << brute << " orbit=" << r.orbit_size << "; ";
  }
  return {ok, d.str()};
}

Outcome criterion_equivalence() {
  Rng rng(1001);
  std::uint64_t words = 0, disagreements = 0, liftable = 0;
  for (int i = 0; i < 3000; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    const Residue k = 2 + (i / 3) % 7;
    const MCGWord w = i % 3 == 2 ? random_lmod_word(rng, g, k, 8) : random_word(rng, g, 20, 3);
    if (w.length() > 20) continue;
    const auto m = psi_k(w, k);
    ++words;
    const bool lift = is_liftable(m);
    if (lift) ++liftable;
    if (lift != stabilizes_e1_class(m)) ++disagreements;
  }
  std::ostringstream d;
  d << words << " words, " << liftable << " liftable, " << disagreements << " disagreements";
  return {words >= 1000 && disagreements == 0, d.str()};
}

Outcome normal_series() {
  Rng rng(1002);
  std::uint64_t chain_bad = 0, closure_bad = 0, level_bad = 0, stab_bad = 0;
  std::uint64_t level_trials = 0, stab_trials = 0, closure_trials = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    const Residue k = 2 + (i / 3) % 7;
    const auto m = psi_k(random_word(rng, g, 20, 3), k);
    const bool lift = is_liftable(m), stab = in_stab_e1(m), level = in_level_k(m);
    if ((level && !stab) || (stab && !lift)) ++chain_bad;
  }
  for (int i = 0; i < 600; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    const Residue k = 2 + (i / 3) % 7;
    const SymplecticForm j(g);
    const auto l1 = psi_k(random_lmod_word(rng, g, k, 8), k), l2 = psi_k(random_lmod_word(rng, g, k, 8), k);
    const auto s1 = psi_k(random_stab_word(rng, g, k, 8), k), s2 = psi_k(random_stab_word(rng, g, k, 8), k);
    const auto n1 = psi_k(random_level_word(rng, g, k, 4), k), n2 = psi_k(random_level_word(rng, g, k, 4), k);
    const bool closed = is_liftable(l1 * l2) && is_liftable(symplectic_inverse(l1, j)) && in_stab_e1(s1 * s2) &&
                        in_stab_e1(symplectic_inverse(s1, j)) && in_level_k(n1 * n2) &&
                        in_level_k(symplectic_inverse(n1, j));
    ++closure_trials;
    if (!closed) ++closure_bad;

    const auto l_inv = symplectic_inverse(l1, j);
    ++level_trials;
    if (!in_level_k(l1 * n2 * l_inv)) ++level_bad;
    ++stab_trials;
    if (!in_stab_e1(l1 * s2 * l_inv)) ++stab_bad;
  }
  std::ostringstream d;
  d << "chain violations " << chain_bad << "/1000, closure violations " << closure_bad << "/" << closure_trials
    << ", level-k conjugation violations " << level_bad << "/" << level_trials
    << ", stab_e1 conjugation violations " << stab_bad << "/" << stab_trials;
  const bool ok = chain_bad == 0 && closure_bad == 0 && level_bad == 0 && stab_bad == 0 && level_trials >= 500 &&
                  stab_trials >= 500;
  return {ok, d.str()};
}

Outcome quotient_structure() {
  bool cosets = true;
  for (Residue k = 2; k <= 12; ++k)
    for (std::size_t g = 1; g <= 3; ++g) cosets = cosets && verify_coset_system(k, g);

  Rng rng(1003);
  std::uint64_t hom_bad = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    const Residue k = 2 + i % 11;
    const auto a = psi_k(random_lmod_word(rng, g, k, 8), k), b = psi_k(random_lmod_word(rng, g, k, 8), k);
    if (quotient_class(a * b) != canonical_residue(quotient_class(a) * quotient_class(b), k)) ++hom_bad;
  }

  std::ostringstream closure;
  bool iota_ok = true;
  for (Residue k = 3; k <= 12; ++k) {
    const bool eq = iota_extension_data(k).lmod_equals_closure;
    if (eq) closure << k << ' ';
    iota_ok = iota_ok && eq == (k == 3 || k == 4 || k == 6);
  }
  std::ostringstream d;
  d << "coset systems k<=12 " << (cosets ? "ok" : "BROKEN") << ", alpha violations " << hom_bad
    << "/500, closure equals LMod for k = " << closure.str();
  return {cosets && hom_bad == 0 && iota_ok, d.str()};
}

Outcome reduction() {
  Rng rng(1004);
  std::ostringstream d;
  bool ok = true;
  for (Residue k : {2, 3, 5}) {
    int verified = 0, failed = 0;
    for (int i = 0; i < 100; ++i) {
      const auto w = sample_stab_by_filter(rng, 2, k, 25);
      if (!w) {
        ++failed;
        continue;
      }
      const auto a = psi_k(*w, k);
      try {
        const auto r = reduce_to_eta(a);
        const auto top = ResidueMatrix::from_rows({{1, r.beta - r.alpha - r.alpha * r.beta}, {0, 1}}, k);
        const bool good = r.verified && a * r.m1 * r.m2 * r.m3 * r.m4 == r.residual && r.residual == eta_embed(top);
        good ? ++verified : ++failed;
      } catch (const Error&) {
        ++failed;
      }
    }
    ok = ok && verified == 100 && failed == 0;
    d << "k=" << k << ": " << verified << "/100 verified; ";
  }
  return {ok, d.str()};
}

Outcome penner_liftability() {
  Rng rng(1005);
  std::uint64_t agree = 0, disagree = 0, liftable = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t g = 2 + static_cast<std::size_t>(i % 2);
    const Residue k = 2 + i % 5;
    auto t = random_tuple(rng, g, 6);
    if (i % 4 == 0) t.kl.front().second = k * (1 + i % 3);
    const bool general = is_liftable(psi_k(build_word(t), k));
    try {
      (penner_liftable(t, k) == general) ? ++agree : ++disagree;
    } catch (const Error&) {
      ++disagree;
    }
    if (general) ++liftable;
  }
  std::ostringstream d;
  d << agree << " agreements, " << disagree << " disagreements, " << liftable << " liftable";
  return {disagree == 0 && agree == 500, d.str()};
}

Outcome stretch_factors() {
  Rng rng(1006);
  const SpectralOptions tight{1e-12, 1'000'000};
  int not_expanding = 0, bisection_bad = 0, radius_bad = 0;
  double worst_bisection = 0.0, worst_radius_gap = 0.0;
  std::ostringstream polys;
  for (int i = 0; i < 200; ++i) {
    const std::size_t g = 2 + static_cast<std::size_t>(i % 2);
    const auto t = random_tuple(rng, g, 5);
    const auto m = perron_matrix(t);
    const double iterated = spectral_radius(m, tight);
    const double exact = largest_real_eigenvalue(m);
    const double homological = spectral_radius(psi(build_word(t)), tight);
    if (!(iterated > 1.0)) ++not_expanding;
    worst_bisection = std::max(worst_bisection, std::abs(iterated - exact));
    worst_radius_gap = std::max(worst_radius_gap, std::abs(homological - iterated));
    if (std::abs(iterated - exact) > 1e-8) ++bisection_bad;
    if (std::abs(homological - iterated) > 1e-6) {
      ++radius_bad;
      const auto r = dilatation_report(t);
      polys << " [" << format_tuple(t) << ": P(Psi)=" << to_string(r.homology_poly)
            << ", P(M)=" << to_string(r.perron_poly) << "]";
    }
  }
  std::ostringstream d;
  d << "200 tuples, non-expanding " << not_expanding << ", max |power-bisection| " << worst_bisection
    << ", max |rho(Psi)-rho(M)| " << worst_radius_gap << polys.str();
  return {not_expanding == 0 && bisection_bad == 0 && radius_bad == 0, d.str()};
}

Outcome lcm_intersection() {
  Rng rng(1007);
  std::uint64_t ok_count = 0, both_liftable = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    const Residue k = 2 + static_cast<Residue>(rng() % 7);
    const Residue l = 2 + static_cast<Residue>(rng() % 7);
    const auto d = static_cast<Residue>(lcm(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l)));
    const MCGWord w = i % 2 ? random_lmod_word(rng, g, d, 6) : random_word(rng, g, 12, 4);
    if (lcm_intersection_check(w, k, l)) ++ok_count;
    if (is_liftable(w, k) && is_liftable(w, l)) ++both_liftable;
  }
  std::ostringstream d;
  d << ok_count << "/500 hold, " << both_liftable << " liftable at both k and l";
  return {ok_count == 500, d.str()};
}

}  // namespace

int main() {
  run(1, "prime-k orbit sizes equal (k^2g - 1)/(k - 1)", prime_index);
  run(2, "composite-k orbit sizes equal primitive count / phi(k)", composite_index);
  run(3, "is_liftable agrees with the e_1 class stabilizer", criterion_equivalence);
  run(4, "subgroup chain, closure and normality", normal_series);
  run(5, "coset systems, alpha homomorphism and iota closure", quotient_structure);
  run(6, "genus-2 reduction witnesses verify", reduction);
  run(7, "k | l_1 agrees with the general predicate", penner_liftability);
  run(8, "stretch factors and homological dilatation", stretch_factors);
  run(9, "liftable at k and l iff liftable at lcm(k, l)", lcm_intersection);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

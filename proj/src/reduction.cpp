#include "liftcover/reduction.hpp"

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/number_theory.hpp"
#include "liftcover/symplectic_rep.hpp"

namespace liftcover {

namespace {

Residue mod(Residue x, Residue k) { return canonical_residue(x, k); }

void require_stab_member(const ResidueMatrix& a) {
  if (a.size() != 4) {
    throw Error(ErrorCode::InvalidArgument, "the reduction is implemented for 4x4 matrices (genus 2)");
  }
  if (!in_stab_e1(a)) {
    throw Error(ErrorCode::InvalidArgument, "input is not in the stabilizer of e_1");
  }
}

ResidueMatrix two_by_two(Residue a, Residue b, Residue c, Residue d, Residue k) {
  return ResidueMatrix::from_rows({{a, b}, {c, d}}, k);
}

}  // namespace

ResidueMatrix eta_embed(const ResidueMatrix& a, std::size_t genus) {
  if (a.size() != 2) throw Error(ErrorCode::DimensionMismatch, "eta_embed takes a 2x2 block");
  if (genus == 0) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  const Residue k = a.modulus();
  if (mod(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0), k) != 1) {
    throw Error(ErrorCode::InvalidArgument, "eta_embed needs a determinant-one block");
  }
  ResidueMatrix out = ResidueMatrix::identity(2 * genus, k);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out.set(r, c, a(r, c));
  return out;
}

MCGWord m3_word(Residue beta) {
  return MCGWord(2, {{Generator::c(1), beta}, {Generator::a(2), -beta}});
}

MCGWord m4_word(Residue alpha) {
  const MCGWord conj(2, {{Generator::a(2), 1}, {Generator::b(2), 1}, {Generator::a(2), 1}});
  const MCGWord core(2, {{Generator::c(1), -alpha}, {Generator::a(2), alpha}});
  return concat(concat(conj.inverse(), core), conj);
}

ReductionWitness reduce_to_eta(const ResidueMatrix& a) {
  require_stab_member(a);
  const Residue k = a.modulus();
  // e_ij below is the 1-based entry a(i-1, j-1).
  const Residue e12 = a(0, 1), e13 = a(0, 2), e14 = a(0, 3);
  const Residue e33 = a(2, 2), e34 = a(2, 3), e43 = a(3, 2), e44 = a(3, 3);

  ReductionWitness w;
  w.input = a;
  w.alpha = mod(e13 * e44 - e14 * e43, k);
  w.beta = mod(e14 * e33 - e13 * e34, k);

  w.m1 = ResidueMatrix::identity(4, k);
  w.m1.set(2, 2, e44);
  w.m1.set(2, 3, -e34);
  w.m1.set(3, 2, -e43);
  w.m1.set(3, 3, e33);

  w.m2 = ResidueMatrix::identity(4, k);
  w.m2.set(0, 1, -e12);

  w.m3 = psi_k(m3_word(w.beta), k);
  w.m4 = psi_k(m4_word(w.alpha), k);

  const ResidueMatrix after_two = a * w.m1 * w.m2;
  const ResidueMatrix expected_two = ResidueMatrix::from_rows(
      {{1, 0, w.alpha, w.beta}, {0, 1, 0, 0}, {0, w.beta, 1, 0}, {0, -w.alpha, 0, 1}}, k);
  const ResidueMatrix expected_m3 = ResidueMatrix::from_rows(
      {{1, w.beta, 0, -w.beta}, {0, 1, 0, 0}, {0, -w.beta, 1, 0}, {0, 0, 0, 1}}, k);
  const ResidueMatrix expected_m4 = ResidueMatrix::from_rows(
      {{1, -w.alpha, -w.alpha, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, w.alpha, 0, 1}}, k);
  if (after_two != expected_two || w.m3 != expected_m3 || w.m4 != expected_m4) {
    throw Error(ErrorCode::Defect, "intermediate reduction step disagrees with its closed form");
  }

  w.residual = after_two * w.m3 * w.m4;
  w.residual_entry = mod(w.beta - w.alpha - w.alpha * w.beta, k);
  const ResidueMatrix target = eta_embed(two_by_two(1, w.residual_entry, 0, 1, k), 2);
  for (const ResidueMatrix* m : {&w.m1, &w.m2, &w.m3, &w.m4}) {
    if (!in_stab_e1(*m)) throw Error(ErrorCode::Defect, "reduction step left the stabilizer of e_1");
  }
  if (w.residual != target) {
    throw Error(ErrorCode::Defect, "residual is not eta([[1, beta - alpha - alpha beta], [0, 1]])");
  }
  w.verified = true;
  return w;
}

MCGWord sl2_block_word(const ResidueMatrix& block, std::size_t handle, std::size_t genus) {
  if (block.size() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a 2x2 block");
  const Residue k = block.modulus();
  const Residue a = block(0, 0), b = block(0, 1), c = block(1, 0), d = block(1, 1);
  if (mod(a * d - b * c, k) != 1) {
    throw Error(ErrorCode::InvalidArgument, "block does not have determinant 1");
  }
  // U^x = a_h^x = [[1,x],[0,1]] and L^y = b_h^-y = [[1,0],[y,1]]. With c a
  // unit, [[a,b],[c,d]] = U^((a-1)/c) L^c U^((d-1)/c). Otherwise first pass
  // to L^y M, whose lower-left entry c + y a is a unit for some y.
  Residue shift = 0;
  Residue c_unit = c;
  while (!is_unit(c_unit, k)) {
    if (++shift >= k) throw Error(ErrorCode::Defect, "no unit lower-left entry reachable");
    c_unit = mod(c + shift * a, k);
  }
  const Residue d_shifted = mod(d + shift * b, k);
  const Residue inv = *inverse_mod(c_unit, k);
  const Residue x = mod((a - 1) * inv, k);
  const Residue z = mod((d_shifted - 1) * inv, k);

  MCGWord word(genus);
  word.append(Generator::b(handle), shift);  // L^-shift
  word.append(Generator::a(handle), x);
  word.append(Generator::b(handle), -c_unit);
  word.append(Generator::a(handle), z);
  return word;
}

Factorization express_via_generators(const ResidueMatrix& a,
                                     const std::vector<MCGWord>& generator_words) {
  Factorization out;
  out.witness = reduce_to_eta(a);
  const ReductionWitness& w = out.witness;
  const Residue k = a.modulus();

  const ResidueMatrix lower_block = two_by_two(a(2, 2), a(2, 3), a(3, 2), a(3, 3), k);

  out.factors.push_back({"residual", "eta_image",
                         MCGWord(2, {{Generator::a(1), w.residual_entry}}), w.residual, {}});
  out.factors.push_back({"M4^-1", "twist_word", m4_word(w.alpha).inverse(), {}, {}});
  out.factors.push_back({"M3^-1", "twist_word", m3_word(w.beta).inverse(), {}, {}});
  out.factors.push_back({"M2^-1", "sl2_block", MCGWord(2, {{Generator::a(1), a(0, 1)}}), {}, {}});
  out.factors.push_back({"M1^-1", "sl2_block", sl2_block_word(lower_block, 2, 2), {}, {}});

  std::vector<std::optional<ResidueMatrix>> generator_images;
  for (const MCGWord& g : generator_words) {
    generator_images.push_back(g.genus() == 2 ? std::optional(psi_k(g, k)) : std::nullopt);
  }

  MCGWord total(2);
  ResidueMatrix product = ResidueMatrix::identity(4, k);
  for (Factor& f : out.factors) {
    f.matrix = psi_k(f.word, k);
    if (f.matrix.is_identity()) f.word = MCGWord(2);
    for (std::size_t i = 0; i < generator_images.size(); ++i) {
      if (generator_images[i] == f.matrix) {
        f.generator_match = i;
        break;
      }
    }
    total = concat(total, f.word);
    product = product * f.matrix;
  }
  out.word = total;
  out.round_trip = product == a && psi_k(total, k) == a;
  if (!out.round_trip) throw Error(ErrorCode::Defect, "factorization does not multiply back to the input");
  return out;
}

}  // namespace liftcover

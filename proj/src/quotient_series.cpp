#include "liftcover/quotient_series.hpp"

#include <algorithm>
#include <set>

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/number_theory.hpp"
#include "liftcover/symplectic_rep.hpp"

namespace liftcover {

Residue quotient_class(const ResidueMatrix& m) {
  if (const auto w = lift_violation(m)) {
    throw Error(ErrorCode::NotLiftable,
                "quotient class is defined on liftable images only; entry (" +
                    std::to_string(w->row) + "," + std::to_string(w->col) + ") = " +
                    w->value.str());
  }
  return m(1, 1);
}

ResidueMatrix coset_matrix(Residue ell, Residue k, std::size_t genus) {
  require_modulus(k);
  const auto inv = inverse_mod(ell, k);
  if (!inv) throw Error(ErrorCode::NotUnit, std::to_string(ell) + " is not a unit mod " + std::to_string(k));
  ResidueMatrix q = ResidueMatrix::identity(2 * genus, k);
  q.set(0, 0, ell);
  q.set(1, 1, *inv);
  return q;
}

CosetRep coset_rep(Residue ell, Residue k, std::size_t genus) {
  CosetRep rep;
  rep.matrix = coset_matrix(ell, k, genus);
  rep.ell = rep.matrix(0, 0);
  rep.ell_bar = rep.matrix(1, 1);

  MCGWord word(genus);
  word.append(Generator::b(1), rep.ell_bar - 1);
  word.append(Generator::a(1), -1);
  word.append(Generator::b(1), rep.ell - 1);
  rep.word = word;

  const ResidueMatrix image = psi_k(rep.word, k);
  if (!is_liftable(image) || quotient_class(image) != quotient_class(rep.matrix)) {
    throw Error(ErrorCode::Defect, "coset representative for " + std::to_string(ell) +
                                       " does not land in the expected class");
  }
  return rep;
}

CosetSystem coset_system(Residue k, std::size_t genus) {
  require_modulus(k);
  CosetSystem out;
  std::set<Residue> seen;
  for (Residue ell : units(k)) {
    const Residue cls = quotient_class(psi_k(coset_rep(ell, k, genus).word, k));
    out.classes.push_back(cls);
    seen.insert(cls);
  }
  const auto expected = units(k);
  out.bijective = seen.size() == out.classes.size() &&
                  std::equal(seen.begin(), seen.end(), expected.begin(), expected.end());
  return out;
}

bool verify_coset_system(Residue k, std::size_t genus) { return coset_system(k, genus).bijective; }

IotaExtension iota_extension_data(Residue k, std::size_t genus) {
  require_modulus(k);
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "the iota extension needs k >= 3");
  IotaExtension out;
  const std::uint64_t phi = totient(static_cast<std::uint64_t>(k));
  out.index_in_lmod = phi / 2;
  out.lmod_equals_closure = phi == 2;
  out.iota_class = quotient_class(psi_k(MCGWord(genus, {{Generator::iota(), 1}}), k));
  const Residue square = (out.iota_class * out.iota_class) % k;
  if (out.iota_class != k - 1 || out.iota_class == 1 || square != 1) {
    throw Error(ErrorCode::Defect, "class of iota is not of order two");
  }
  return out;
}

}  // namespace liftcover

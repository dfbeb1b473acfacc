#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftcover/matrix.hpp"
#include "liftcover/polynomial.hpp"
#include "liftcover/spectral.hpp"
#include "liftcover/word.hpp"

namespace liftcover {

/// Exponent data ((p_1..p_{g-1}), ((k_1,l_1)..(k_g,l_g))) of the map
/// h_T = prod_i T_{c_i}^-p_i  prod_j (T_{a_j}^-k_j T_{b_j}^l_j).
struct AdmissibleTuple {
  std::size_t genus = 2;
  std::vector<std::int64_t> p;
  std::vector<std::pair<std::int64_t, std::int64_t>> kl;

  /// All exponents equal to one.
  static AdmissibleTuple ones(std::size_t genus);

  /// Throws InvalidArgument unless genus >= 2, the lengths are g-1 and g,
  /// and every entry is positive.
  void validate() const;

  bool operator==(const AdmissibleTuple&) const = default;
};

/// "p1,..;k1:l1,.." (the p list is empty at genus 1, which is rejected).
AdmissibleTuple parse_tuple(const std::string& text, std::size_t genus);
std::string format_tuple(const AdmissibleTuple& t);

/// Curves in the order (c_1..c_{g-1}, a_1..a_g, b_1..b_g) with the symmetric
/// intersection matrix Sigma: i(a_j, b_j) = 1, i(c_i, b_i) = i(c_i, b_{i+1}) = 1.
struct PennerSystem {
  std::size_t genus = 2;
  std::vector<Generator> curves;
  SquareMatrix sigma;

  /// Position of `curve` in the ordering above.
  std::size_t position(const Generator& curve) const;
};

PennerSystem incidence_matrix(std::size_t genus);

/// c1^-p1 .. c_{g-1}^-p_{g-1} a1^-k1 b1^l1 .. a_g^-k_g b_g^l_g
MCGWord build_word(const AdmissibleTuple& t);

/// Curve-indexed exponent of h_T in the (c, a, b) ordering.
std::vector<std::int64_t> curve_exponents(const AdmissibleTuple& t);

/// B_x = I + A_x Sigma for the curve at position x.
SquareMatrix penner_step_matrix(const PennerSystem& system, std::size_t position);

/// Product of B matrices in word order, a letter x^m contributing |m| copies
/// of B_x regardless of sign.
SquareMatrix perron_matrix(const AdmissibleTuple& t);
SquareMatrix perron_matrix(const MCGWord& word);

/// Largest eigenvalue of the Perron matrix by power iteration, checked against
/// the exact largest real root of its characteristic polynomial.
/// Throws Error(Defect) if the two disagree by more than 1e-8 relative.
double stretch_factor(const AdmissibleTuple& t, const SpectralOptions& options = {});

/// k | l_1, cross-checked against is_liftable(psi_k(h_T)).
/// Throws Error(Defect) if the two ever disagree.
bool penner_liftable(const AdmissibleTuple& t, Residue k);

/// Spectral radius of psi(h_T).
double homological_dilatation(const AdmissibleTuple& t, const SpectralOptions& options = {});

struct DilatationReport {
  ExactPolynomial homology_poly;  ///< char poly of psi(h_T), degree 2g
  ExactPolynomial perron_poly;    ///< char poly of M_{h_T}, degree 3g-1
  double stretch = 0.0;
  double homological = 0.0;
  /// perron_poly == (x - 1) * homology_poly
  bool perron_is_x_minus_one_times_homology = false;
  /// homology_poly == (x - 1) * perron_poly
  bool homology_is_x_minus_one_times_perron = false;
  /// perron_poly / homology_poly when the division is exact.
  std::optional<ExactPolynomial> perron_cofactor;
  /// perron_cofactor == (x - 1)^(g - 1)
  bool cofactor_is_x_minus_one_power = false;
};

DilatationReport dilatation_report(const AdmissibleTuple& t, const SpectralOptions& options = {});

/// Step q (1-based) of recovering the twists about alpha_1..alpha_{3g-1}
/// from h_{T_1} and h_{T_{alpha_q}} at the homology level.
struct RecoveryStep {
  std::size_t position = 0;
  Generator curve;
  std::int64_t delta = 0;  ///< exponent of the curve in h_{T_1}
  /// "reference_first" (P^-1 h_{T1} h_{Ta}^-1 P) or "alpha_inverse_first"
  /// (P h_{Ta}^-1 h_{T1} P^-1), with P the product of the earlier twists.
  std::string order;
  /// Exponent e with result = psi(T^e); either delta or -delta.
  std::int64_t recovered_exponent = 0;
};

struct RecoveryReport {
  std::size_t genus = 0;
  std::vector<RecoveryStep> steps;
  bool all_verified = false;
};

/// Tuple obtained from T_1 by setting the exponent of the q-th curve to 2.
AdmissibleTuple doubled_tuple(std::size_t genus, std::size_t position);

/// Throws Error(Defect) if neither composition order verifies at some step.
RecoveryReport generator_recovery_check(std::size_t genus);

}  // namespace liftcover

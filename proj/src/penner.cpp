#include "liftcover/penner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/symplectic_rep.hpp"

namespace liftcover {

namespace {

std::int64_t parse_positive(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw Error(ErrorCode::InvalidArgument, "malformed " + what + " '" + token + "' in tuple");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

ExactPolynomial x_minus_one() { return ExactPolynomial{-1, 1}; }

}  // namespace

AdmissibleTuple AdmissibleTuple::ones(std::size_t genus) {
  AdmissibleTuple t;
  t.genus = genus;
  t.p.assign(genus > 0 ? genus - 1 : 0, 1);
  t.kl.assign(genus, {1, 1});
  t.validate();
  return t;
}

void AdmissibleTuple::validate() const {
  if (genus < 2) throw Error(ErrorCode::InvalidArgument, "admissible tuples need genus >= 2");
  if (p.size() + 1 != genus || kl.size() != genus) {
    throw Error(ErrorCode::InvalidArgument, "tuple lengths must be g-1 and g");
  }
  const bool positive = std::all_of(p.begin(), p.end(), [](auto x) { return x >= 1; }) &&
                        std::all_of(kl.begin(), kl.end(), [](const auto& e) {
                          return e.first >= 1 && e.second >= 1;
                        });
  if (!positive) throw Error(ErrorCode::InvalidArgument, "tuple entries must be positive");
}

AdmissibleTuple parse_tuple(const std::string& text, std::size_t genus) {
  const auto halves = split(text, ';');
  if (halves.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "tuple must look like \"p1,..;k1:l1,..\"");
  }
  AdmissibleTuple t;
  t.genus = genus;
  if (!halves[0].empty()) {
    for (const auto& tok : split(halves[0], ',')) t.p.push_back(parse_positive(tok, "p entry"));
  }
  for (const auto& pair : split(halves[1], ',')) {
    const auto kl = split(pair, ':');
    if (kl.size() != 2) throw Error(ErrorCode::InvalidArgument, "pair '" + pair + "' must be k:l");
    t.kl.emplace_back(parse_positive(kl[0], "k entry"), parse_positive(kl[1], "l entry"));
  }
  t.validate();
  return t;
}

std::string format_tuple(const AdmissibleTuple& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.p.size(); ++i) out << (i ? "," : "") << t.p[i];
  out << ';';
  for (std::size_t j = 0; j < t.kl.size(); ++j)
    out << (j ? "," : "") << t.kl[j].first << ':' << t.kl[j].second;
  return out.str();
}

std::size_t PennerSystem::position(const Generator& curve) const {
  const auto it = std::find(curves.begin(), curves.end(), curve);
  if (it == curves.end()) {
    throw Error(ErrorCode::IndexOutOfRange, "curve " + curve.name() + " is not in the Penner system");
  }
  return static_cast<std::size_t>(it - curves.begin());
}

PennerSystem incidence_matrix(std::size_t genus) {
  if (genus < 2) throw Error(ErrorCode::InvalidArgument, "the Penner system needs genus >= 2");
  PennerSystem s;
  s.genus = genus;
  for (std::size_t i = 1; i < genus; ++i) s.curves.push_back(Generator::c(i));
  for (std::size_t j = 1; j <= genus; ++j) s.curves.push_back(Generator::a(j));
  for (std::size_t j = 1; j <= genus; ++j) s.curves.push_back(Generator::b(j));
  s.sigma = SquareMatrix(s.curves.size());
  auto meet = [&](const Generator& x, const Generator& y) {
    const std::size_t i = s.position(x), j = s.position(y);
    s.sigma(i, j) = 1;
    s.sigma(j, i) = 1;
  };
  for (std::size_t j = 1; j <= genus; ++j) meet(Generator::a(j), Generator::b(j));
  for (std::size_t i = 1; i < genus; ++i) {
    meet(Generator::c(i), Generator::b(i));
    meet(Generator::c(i), Generator::b(i + 1));
  }
  return s;
}

MCGWord build_word(const AdmissibleTuple& t) {
  t.validate();
  MCGWord w(t.genus);
  for (std::size_t i = 0; i < t.p.size(); ++i) w.append(Generator::c(i + 1), -t.p[i]);
  for (std::size_t j = 0; j < t.kl.size(); ++j) {
    w.append(Generator::a(j + 1), -t.kl[j].first);
    w.append(Generator::b(j + 1), t.kl[j].second);
  }
  return w;
}

std::vector<std::int64_t> curve_exponents(const AdmissibleTuple& t) {
  t.validate();
  std::vector<std::int64_t> out;
  for (auto p : t.p) out.push_back(-p);
  for (const auto& e : t.kl) out.push_back(-e.first);
  for (const auto& e : t.kl) out.push_back(e.second);
  return out;
}

SquareMatrix penner_step_matrix(const PennerSystem& system, std::size_t position) {
  const std::size_t n = system.curves.size();
  if (position >= n) throw Error(ErrorCode::IndexOutOfRange, "curve position out of range");
  SquareMatrix b = SquareMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) b(position, c) += system.sigma(position, c);
  return b;
}

SquareMatrix perron_matrix(const MCGWord& word) {
  const PennerSystem system = incidence_matrix(word.genus());
  std::vector<SquareMatrix> steps;
  for (std::size_t x = 0; x < system.curves.size(); ++x) steps.push_back(penner_step_matrix(system, x));
  SquareMatrix m = SquareMatrix::identity(system.curves.size());
  for (const Letter& l : word.letters()) {
    const SquareMatrix& b = steps[system.position(l.generator)];
    const std::int64_t copies = l.exponent < 0 ? -l.exponent : l.exponent;
    for (std::int64_t i = 0; i < copies; ++i) m = m * b;
  }
  return m;
}

SquareMatrix perron_matrix(const AdmissibleTuple& t) { return perron_matrix(build_word(t)); }

double stretch_factor(const AdmissibleTuple& t, const SpectralOptions& options) {
  const SquareMatrix m = perron_matrix(t);
  const double iterated = spectral_radius(m, options);
  const double exact = largest_real_eigenvalue(m);
  const double slack = std::max(1e-8, 2.0 * options.tolerance) * std::max(1.0, exact);
  if (std::abs(iterated - exact) > slack) {
    throw Error(ErrorCode::Defect, "power iteration and exact root disagree for tuple " + format_tuple(t));
  }
  return iterated;
}

bool penner_liftable(const AdmissibleTuple& t, Residue k) {
  require_modulus(k);
  t.validate();
  const bool by_l1 = t.kl.front().second % k == 0;
  const bool general = is_liftable(psi_k(build_word(t), k));
  if (by_l1 != general) {
    throw Error(ErrorCode::Defect, "k | l_1 disagrees with the symplectic criterion for tuple " +
                                       format_tuple(t) + " at k = " + std::to_string(k));
  }
  return by_l1;
}

double homological_dilatation(const AdmissibleTuple& t, const SpectralOptions& options) {
  return spectral_radius(psi(build_word(t)), options);
}

DilatationReport dilatation_report(const AdmissibleTuple& t, const SpectralOptions& options) {
  DilatationReport r;
  const SquareMatrix homology = psi(build_word(t));
  const SquareMatrix perron = perron_matrix(t);
  r.homology_poly = char_poly(homology);
  r.perron_poly = char_poly(perron);
  r.stretch = stretch_factor(t, options);
  r.homological = spectral_radius(homology, options);
  r.perron_is_x_minus_one_times_homology = r.perron_poly == x_minus_one() * r.homology_poly;
  r.homology_is_x_minus_one_times_perron = r.homology_poly == x_minus_one() * r.perron_poly;
  try {
    r.perron_cofactor = exact_divide(r.perron_poly, r.homology_poly);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Defect) throw;
  }
  ExactPolynomial power{1};
  for (std::size_t i = 1; i < t.genus; ++i) power = power * x_minus_one();
  r.cofactor_is_x_minus_one_power = r.perron_cofactor && *r.perron_cofactor == power;
  return r;
}

AdmissibleTuple doubled_tuple(std::size_t genus, std::size_t position) {
  AdmissibleTuple t = AdmissibleTuple::ones(genus);
  if (position == 0 || position > 3 * genus - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "curve position must lie in 1..3g-1");
  }
  const std::size_t q = position - 1;
  if (q < genus - 1) {
    t.p[q] = 2;
  } else if (q < 2 * genus - 1) {
    t.kl[q - (genus - 1)].first = 2;
  } else {
    t.kl[q - (2 * genus - 1)].second = 2;
  }
  return t;
}

RecoveryReport generator_recovery_check(std::size_t genus) {
  const PennerSystem system = incidence_matrix(genus);
  const SymplecticForm form(genus);
  const AdmissibleTuple reference = AdmissibleTuple::ones(genus);
  const auto delta = curve_exponents(reference);
  const SquareMatrix h_ref = psi(build_word(reference));

  RecoveryReport report;
  report.genus = genus;
  SquareMatrix prefix = SquareMatrix::identity(2 * genus);
  for (std::size_t q = 0; q < system.curves.size(); ++q) {
    const Generator curve = system.curves[q];
    const SquareMatrix h_alpha = psi(build_word(doubled_tuple(genus, q + 1)));
    const SquareMatrix h_alpha_inv = symplectic_inverse(h_alpha, form);
    const SquareMatrix prefix_inv = symplectic_inverse(prefix, form);

    const SquareMatrix forward = twist_power(curve, genus, delta[q]);
    const SquareMatrix backward = twist_power(curve, genus, -delta[q]);

    const std::pair<std::string, SquareMatrix> candidates[] = {
        {"alpha_inverse_first", prefix * h_alpha_inv * h_ref * prefix_inv},
        {"reference_first", prefix_inv * h_ref * h_alpha_inv * prefix},
    };

    RecoveryStep step;
    step.position = q + 1;
    step.curve = curve;
    step.delta = delta[q];
    for (const auto& [order, result] : candidates) {
      if (result == forward || result == backward) {
        step.order = order;
        step.recovered_exponent = result == forward ? delta[q] : -delta[q];
        break;
      }
    }
    if (step.order.empty()) {
      throw Error(ErrorCode::Defect, "neither composition order recovers the twist about " + curve.name());
    }
    report.steps.push_back(step);
    prefix = prefix * forward;
  }
  report.all_verified = true;
  return report;
}

}  // namespace liftcover

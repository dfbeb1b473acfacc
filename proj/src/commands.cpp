#include "liftcover/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/number_theory.hpp"
#include "liftcover/penner.hpp"
#include "liftcover/quotient_series.hpp"
#include "liftcover/reduction.hpp"
#include "liftcover/sampling.hpp"
#include "liftcover/symplectic_rep.hpp"

namespace liftcover {

namespace {

using Json = nlohmann::ordered_json;

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json matrix_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(big_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(const ResidueMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json::array({w->row, w->col, big_json(w->value)});
}

bool is_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != v.size()) return false;
    for (const auto& x : row) {
      if (!x.is_number() && !x.is_string()) return false;
    }
  }
  return true;
}

std::string scalar_text(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_plain(const Json& v, const std::string& prefix, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) render_plain(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (is_matrix(v)) {
    std::size_t width = 1;
    for (const auto& row : v)
      for (const auto& x : row) width = std::max(width, scalar_text(x).size());
    out << prefix << ":\n";
    for (const auto& row : v) {
      out << " ";
      for (const auto& x : row) out << ' ' << std::setw(static_cast<int>(width)) << scalar_text(x);
      out << '\n';
    }
    return;
  }
  if (v.is_array() && !v.empty() && v.front().is_object()) {
    for (std::size_t i = 0; i < v.size(); ++i) render_plain(v[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << scalar_text(v) << '\n';
}

CommandResult emit(const Json& body, const RunConfig& cfg, int exit_code = 0) {
  CommandResult r;
  r.exit_code = exit_code;
  if (cfg.plain) {
    std::ostringstream out;
    render_plain(body, "", out);
    r.out = out.str();
  } else {
    r.out = body.dump(2) + "\n";
  }
  return r;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergence:
    case ErrorCode::CapExceeded:
    case ErrorCode::Defect:
      return 1;
    default:
      return 2;
  }
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {exit_code_for(e.code()), "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }
}

Residue require_k(const RunConfig& cfg) {
  if (!cfg.mod_k) throw Error(ErrorCode::InvalidArgument, "--mod-k is required");
  require_modulus(*cfg.mod_k);
  if (*cfg.mod_k < 2) throw Error(ErrorCode::InvalidArgument, "--mod-k must be at least 2");
  return *cfg.mod_k;
}

void require_genus(const RunConfig& cfg) {
  if (cfg.genus < 1) throw Error(ErrorCode::InvalidArgument, "--genus must be at least 1");
}

Json spectral_json(double x) {
  std::ostringstream s;
  s << std::setprecision(15) << x;
  return std::stod(s.str());
}

}  // namespace

std::vector<MCGWord> load_generator_file(const std::string& path, std::size_t genus) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open generator file " + path);
  std::vector<MCGWord> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    words.push_back(parse_word(line, genus));
  }
  return words;
}

CommandResult cmd_matrix(const std::string& word, const RunConfig& cfg) {
  return guarded([&] {
    require_genus(cfg);
    const MCGWord w = parse_word(word, cfg.genus);
    Json body;
    body["genus"] = cfg.genus;
    body["word"] = format_word(w);
    if (cfg.mod_k) {
      const Residue k = require_k(cfg);
      body["k"] = k;
      body["matrix"] = matrix_json(psi_k(w, k));
    } else {
      body["matrix"] = matrix_json(psi(w));
    }
    return emit(body, cfg);
  });
}

CommandResult cmd_lift(const std::string& word, const RunConfig& cfg) {
  return guarded([&] {
    require_genus(cfg);
    const Residue k = require_k(cfg);
    const MCGWord w = parse_word(word, cfg.genus);
    const LiftReport r = lift_report(w, k);
    Json body;
    body["k"] = k;
    body["genus"] = cfg.genus;
    body["word"] = format_word(w);
    body["in_lmod"] = r.in_lmod;
    body["in_stab_e1"] = r.in_stab_e1;
    body["in_level_k"] = r.in_level_k;
    body["in_umod"] = r.in_umod ? Json(*r.in_umod) : Json(nullptr);
    body["quotient_class"] = r.quotient_class ? Json(*r.quotient_class) : Json(nullptr);
    body["witness"] = witness_json(r.witness());
    return emit(body, cfg);
  });
}

CommandResult cmd_series(const RunConfig& cfg) {
  return guarded([&] {
    require_genus(cfg);
    const Residue k = require_k(cfg);
    const std::size_t g = cfg.genus;
    const auto uk = static_cast<std::uint64_t>(k);

    Json body;
    body["g"] = g;
    body["k"] = k;
    body["indices"] = {{"lmod", big_json(index_lmod(g, uk))}, {"stab_e1", big_json(index_stab_e1(g, uk))}};

    const CosetSystem cosets = coset_system(k, g);
    body["cosets_ok"] = cosets.bijective;
    body["coset_classes"] = cosets.classes;
    if (k >= 3) {
      const IotaExtension iota = iota_extension_data(k, g);
      body["iota_index"] = iota.index_in_lmod;
      body["iota_equals_lmod"] = iota.lmod_equals_closure;
    } else {
      body["iota_index"] = nullptr;
      body["iota_equals_lmod"] = nullptr;
    }

    Rng rng(cfg.seed);
    std::uint64_t level_bad = 0, stab_bad = 0, chain_bad = 0;
    for (std::uint64_t t = 0; t < cfg.samples; ++t) {
      const MCGWord l = random_lmod_word(rng, g, k, 6);
      const MCGWord n = random_level_word(rng, g, k, 3);
      const MCGWord s = random_stab_word(rng, g, k, 6);
      if (!in_level_k(psi_k(concat(concat(l, n), l.inverse()), k))) ++level_bad;
      if (!in_stab_e1(psi_k(concat(concat(l, s), l.inverse()), k))) ++stab_bad;
      try {
        lift_report(random_word(rng, g, 10), k);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Defect) throw;
        ++chain_bad;
      }
    }
    body["normality"] = {{"trials", cfg.samples},
                         {"seed", cfg.seed},
                         {"level_k_in_lmod_violations", level_bad},
                         {"stab_e1_in_lmod_violations", stab_bad},
                         {"chain_violations", chain_bad}};
    const bool ok = cosets.bijective && level_bad == 0 && stab_bad == 0 && chain_bad == 0;
    return emit(body, cfg, ok ? 0 : 1);
  });
}

CommandResult cmd_orbit(OrbitMode mode, const RunConfig& cfg) {
  return guarded([&] {
    require_genus(cfg);
    const Residue k = require_k(cfg);
    OrbitOptions options;
    options.cap = cfg.state_cap;
    options.workers = cfg.workers;
    const auto start = std::chrono::steady_clock::now();
    const OrbitResult r = mode == OrbitMode::Class ? orbit_primitive_classes(k, cfg.genus, options)
                                                   : orbit_primitive_vectors(k, cfg.genus, options);
    const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    Json body;
    body["k"] = k;
    body["g"] = cfg.genus;
    body["mode"] = std::string(to_string(mode));
    body["orbit_size"] = r.orbit_size;
    body["expected"] = big_json(r.expected);
    body["transitive"] = r.transitive;
    body["millis"] = millis;
    return emit(body, cfg, r.transitive ? 0 : 1);
  });
}

CommandResult cmd_reduce(const std::string& entries, const RunConfig& cfg) {
  return guarded([&] {
    const Residue k = require_k(cfg);
    std::vector<Residue> flat;
    std::stringstream in(entries);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      while (used < tok.size() && tok[used] == ' ') ++used;
      if (used == 0 || used != tok.size()) {
        throw Error(ErrorCode::Syntax, "bad matrix entry '" + tok + "'");
      }
      flat.push_back(canonical_residue(static_cast<Residue>(v), k));
    }
    if (flat.size() != 16) {
      throw Error(ErrorCode::DimensionMismatch,
                  "expected 16 comma-separated entries, got " + std::to_string(flat.size()));
    }
    const ResidueMatrix a = ResidueMatrix::from_flat(flat, k);
    std::vector<MCGWord> gens;
    for (const auto& path : cfg.generator_files) {
      auto more = load_generator_file(path, 2);
      gens.insert(gens.end(), more.begin(), more.end());
    }
    const Factorization f = express_via_generators(a, gens);
    const ReductionWitness& w = f.witness;

    Json body;
    body["k"] = k;
    body["M1"] = matrix_json(w.m1);
    body["M2"] = matrix_json(w.m2);
    body["M3"] = matrix_json(w.m3);
    body["M4"] = matrix_json(w.m4);
    body["alpha"] = w.alpha;
    body["beta"] = w.beta;
    body["residual"] = matrix_json(w.residual);
    body["residual_entry"] = w.residual_entry;
    body["verified"] = w.verified;
    Json factors = Json::array();
    for (const Factor& fac : f.factors) {
      Json j;
      j["label"] = fac.label;
      j["role"] = fac.role;
      j["word"] = format_word(fac.word);
      j["generator_match"] = fac.generator_match ? Json(*fac.generator_match) : Json(nullptr);
      factors.push_back(std::move(j));
    }
    body["factors"] = std::move(factors);
    body["word"] = format_word(f.word);
    body["round_trip"] = f.round_trip;
    return emit(body, cfg, w.verified && f.round_trip ? 0 : 1);
  });
}

CommandResult cmd_penner(const std::string& tuple, const RunConfig& cfg) {
  return guarded([&] {
    const AdmissibleTuple t = parse_tuple(tuple, cfg.genus);
    SpectralOptions opts;
    opts.tolerance = cfg.tolerance;
    const DilatationReport d = dilatation_report(t, opts);
    Json body;
    body["genus"] = cfg.genus;
    body["tuple"] = format_tuple(t);
    body["word"] = format_word(build_word(t));
    body["stretch"] = spectral_json(d.stretch);
    body["hom_dilatation"] = spectral_json(d.homological);
    body["liftable"] = cfg.mod_k ? Json(penner_liftable(t, require_k(cfg))) : Json(nullptr);
    body["perron_size"] = 3 * cfg.genus - 1;
    body["perron_poly"] = to_string(d.perron_poly);
    body["homology_poly"] = to_string(d.homology_poly);
    body["perron_cofactor"] = d.perron_cofactor ? Json(to_string(*d.perron_cofactor)) : Json(nullptr);
    return emit(body, cfg);
  });
}

CommandResult cmd_recover(const RunConfig& cfg) {
  return guarded([&] {
    const RecoveryReport r = generator_recovery_check(cfg.genus);
    Json steps = Json::array();
    for (const auto& s : r.steps) {
      steps.push_back({{"position", s.position},
                       {"curve", s.curve.name()},
                       {"delta", s.delta},
                       {"order", s.order},
                       {"recovered_exponent", s.recovered_exponent}});
    }
    Json body;
    body["genus"] = r.genus;
    body["steps"] = std::move(steps);
    body["all_verified"] = r.all_verified;
    return emit(body, cfg, r.all_verified ? 0 : 1);
  });
}

}  // namespace liftcover

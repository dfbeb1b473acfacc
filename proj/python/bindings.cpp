#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "liftcover/error.hpp"
#include "liftcover/lift_criteria.hpp"
#include "liftcover/number_theory.hpp"
#include "liftcover/orbit.hpp"
#include "liftcover/penner.hpp"
#include "liftcover/reduction.hpp"
#include "liftcover/symplectic_rep.hpp"

namespace py = pybind11;
using namespace liftcover;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list rows(const SquareMatrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.size(); ++c) row.append(to_py(m(r, c)));
    out.append(row);
  }
  return out;
}

py::list rows(const ResidueMatrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.size(); ++c) row.append(m(r, c));
    out.append(row);
  }
  return out;
}

py::object witness(const std::optional<Witness>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->row, w->col, to_py(w->value));
}

}  // namespace

PYBIND11_MODULE(liftcover, m) {
  m.doc() = "Liftability of mapping classes under cyclic covers of closed surfaces";

  static py::exception<Error> error(m, "LiftcoverError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("format_word", [](const std::string& text, std::size_t genus) {
    return format_word(parse_word(text, genus));
  }, py::arg("word"), py::arg("genus"));

  m.def("psi", [](const std::string& word, std::size_t genus) {
    return rows(psi(parse_word(word, genus)));
  }, py::arg("word"), py::arg("genus"));

  m.def("psi_k", [](const std::string& word, std::size_t genus, Residue k) {
    return rows(psi_k(parse_word(word, genus), k));
  }, py::arg("word"), py::arg("genus"), py::arg("k"));

  m.def("lift_report", [](const std::string& word, std::size_t genus, Residue k) {
    const LiftReport r = lift_report(parse_word(word, genus), k);
    py::dict d;
    d["k"] = k;
    d["in_lmod"] = r.in_lmod;
    d["in_stab_e1"] = r.in_stab_e1;
    d["in_level_k"] = r.in_level_k;
    d["in_umod"] = r.in_umod ? py::cast(*r.in_umod) : py::none();
    d["quotient_class"] = r.quotient_class ? py::cast(*r.quotient_class) : py::none();
    d["witness"] = witness(r.witness());
    return d;
  }, py::arg("word"), py::arg("genus"), py::arg("k"));

  m.def("count_primitive", [](std::uint64_t k, unsigned d) { return to_py(count_primitive(k, d)); },
        py::arg("k"), py::arg("d"));

  m.def("orbit", [](Residue k, std::size_t genus, const std::string& mode, std::uint64_t cap, unsigned workers) {
    OrbitOptions options;
    options.cap = cap;
    options.workers = workers;
    OrbitResult r;
    {
      py::gil_scoped_release release;
      r = mode == "vector" ? orbit_primitive_vectors(k, genus, options)
                           : orbit_primitive_classes(k, genus, options);
    }
    py::dict d;
    d["k"] = k;
    d["g"] = genus;
    d["mode"] = std::string(to_string(r.mode));
    d["orbit_size"] = r.orbit_size;
    d["expected"] = to_py(r.expected);
    d["transitive"] = r.transitive;
    return d;
  }, py::arg("k"), py::arg("genus"), py::arg("mode") = "class", py::arg("cap") = 10'000'000,
     py::arg("workers") = 1);

  m.def("reduce", [](const std::vector<Residue>& entries, Residue k) {
    const Factorization f = express_via_generators(ResidueMatrix::from_flat(entries, k));
    const ReductionWitness& w = f.witness;
    py::dict d;
    d["M1"] = rows(w.m1);
    d["M2"] = rows(w.m2);
    d["M3"] = rows(w.m3);
    d["M4"] = rows(w.m4);
    d["alpha"] = w.alpha;
    d["beta"] = w.beta;
    d["residual"] = rows(w.residual);
    d["verified"] = w.verified;
    d["word"] = format_word(f.word);
    d["round_trip"] = f.round_trip;
    return d;
  }, py::arg("entries"), py::arg("k"));

  m.def("penner", [](const std::string& tuple, std::size_t genus, std::optional<Residue> k) {
    const AdmissibleTuple t = parse_tuple(tuple, genus);
    const DilatationReport r = dilatation_report(t);
    py::dict d;
    d["word"] = format_word(build_word(t));
    d["stretch"] = r.stretch;
    d["hom_dilatation"] = r.homological;
    d["liftable"] = k ? py::cast(penner_liftable(t, *k)) : py::none();
    d["perron_size"] = 3 * genus - 1;
    d["perron"] = rows(perron_matrix(t));
    return d;
  }, py::arg("tuple"), py::arg("genus") = 2, py::arg("k") = py::none());
}

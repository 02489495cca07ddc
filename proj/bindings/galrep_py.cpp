#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "galrep/local_bound.hpp"
#include "galrep/newton.hpp"
#include "galrep/poteq.hpp"
#include "galrep/repfile.hpp"
#include "galrep/weil.hpp"

namespace py = pybind11;
using namespace galrep;

namespace {

std::string status_name(PEStatus s) {
  switch (s) {
    case PEStatus::equivalent_with_witness: return "equivalent";
    case PEStatus::not_equivalent: return "not_equivalent";
    case PEStatus::undecided_at_depth: return "undecided_at_depth";
  }
  throw std::logic_error("unreachable");
}

py::dict verdict_dict(const PEVerdict& v) {
  py::dict d;
  d["status"] = status_name(v.status);
  if (v.witness_m) d["witness_m"] = py::int_(py::str(v.witness_m->get_str()));
  if (v.counterexample) d["counterexample_word"] = *v.counterexample;
  return d;
}

}  // namespace

PYBIND11_MODULE(galrep, m) {
  m.doc() = "exact potential-equivalence toolkit for matrix representations";

  m.def("d_m", [](unsigned n, unsigned mm) { return py::int_(py::str(d_m(n, mm).get_str())); },
        py::arg("n"), py::arg("m"),
        "auxiliary dimension d_m = 2 * sum of squared mixed-exterior-power dimensions");

  m.def(
      "compositions",
      [](unsigned n, unsigned mm) {
        std::vector<std::vector<unsigned>> out;
        for (const Composition& c : compositions(n, mm)) out.push_back(c.parts);
        return out;
      },
      py::arg("n"), py::arg("m"), "compositions (r_1..r_n) with sum i*r_i = m");

  m.def(
      "newton_coefficient",
      [](const std::vector<unsigned>& parts) {
        return py::int_(py::str(newton_coefficient(Composition{parts}).get_str()));
      },
      py::arg("parts"), "integer coefficient of prod e_i^{r_i} in the m-th power sum");

  m.def(
      "uniform_m_bound",
      [](unsigned n, unsigned N) { return py::int_(py::str(uniform_m_bound(n, N).get_str())); },
      py::arg("n"), py::arg("N"), "lcm of root-of-unity orders of degree <= n^2 phi(N)");

  m.def(
      "paper_m_bound",
      [](unsigned n, const std::string& ell, unsigned e, unsigned f, bool factor) {
        FactoredInt k0 = paper_m_bound(n, LocalFieldParams{Int(ell), e, f}, factor);
        py::dict d;
        d["value"] = py::int_(py::str(k0.value.get_str()));
        if (factor) {
          d["factored"] = k0.factored_str();
          d["fully_factored"] = k0.fully_factored;
        }
        return d;
      },
      py::arg("n"), py::arg("ell"), py::arg("e") = 1, py::arg("f") = 1, py::arg("factor") = true,
      "power bound for an n-dimensional representation over the given local field");

  m.def(
      "weil_count",
      [](const std::string& q, unsigned w, unsigned d, uint64_t budget) {
        return weil_count(Int(q), w, d, budget);
      },
      py::arg("q"), py::arg("w"), py::arg("d"), py::arg("budget") = kDefaultWeilBudget);

  m.def(
      "enumerate_weil",
      [](const std::string& q, unsigned w, unsigned d, uint64_t budget) {
        std::vector<std::vector<std::string>> out;
        for (const WeilPoly& p : enumerate_weil(Int(q), w, d, budget)) {
          std::vector<std::string> cs;
          for (size_t i = p.coeffs.size(); i-- > 0;) cs.push_back(p.coeffs[i].get_str());
          out.push_back(std::move(cs));
        }
        return out;
      },
      py::arg("q"), py::arg("w"), py::arg("d"), py::arg("budget") = kDefaultWeilBudget,
      "coefficient lists (leading first) of all monic degree-d polynomials with "
      "every root of absolute value q^{w/2}");

  m.def(
      "is_weil_poly",
      [](const std::vector<std::string>& coeffs_desc, const std::string& q, unsigned w) {
        ZPoly cs;
        for (size_t i = coeffs_desc.size(); i-- > 0;) cs.emplace_back(coeffs_desc[i]);
        return is_weil_poly(cs, Int(q), w);
      },
      py::arg("coeffs"), py::arg("q"), py::arg("w"),
      "coefficients leading-first; exact root-radius certification");

  m.def(
      "check_pe",
      [](const std::string& rep1_json, const std::string& rep2_json, unsigned depth) {
        return verdict_dict(pe_decide(parse_rep_text(rep1_json), parse_rep_text(rep2_json), depth));
      },
      py::arg("rep1_json"), py::arg("rep2_json"), py::arg("depth") = 6,
      "decide potential equivalence of two rep-file JSON strings");

  m.def(
      "m_character",
      [](const std::string& rep_json, const std::vector<unsigned>& word, const std::string& mm) {
        return m_character(parse_rep_text(rep_json), word, Int(mm)).str();
      },
      py::arg("rep_json"), py::arg("word"), py::arg("m"));

  m.def(
      "twist_equivalent",
      [](const std::string& rep1_json, const std::string& rep2_json) -> py::object {
        auto chi = twist_equivalent_finite(parse_rep_text(rep1_json), parse_rep_text(rep2_json));
        if (!chi) return py::none();
        std::vector<std::string> values;
        for (const CycQ& v : *chi) values.push_back(v.str());
        return py::cast(values);
      },
      py::arg("rep1_json"), py::arg("rep2_json"),
      "character values over the closure of rep1, or None");

  m.def("serialize_rep", [](const std::string& rep_json) {
    return serialize_rep(parse_rep_text(rep_json));
  });
}

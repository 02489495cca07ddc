// galrep: exact potential-equivalence toolkit.
//
// Exit codes: 0 affirmative/success, 1 negative verdict, 2 input error,
// 3 undecided at depth / enumeration budget refused.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "galrep/faltings.hpp"
#include "galrep/local_bound.hpp"
#include "galrep/newton.hpp"
#include "galrep/poteq.hpp"
#include "galrep/repfile.hpp"
#include "galrep/weil.hpp"

namespace {

using nlohmann::json;
using namespace galrep;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

struct OutputMode {
  bool plain = false;
};

void emit(const json& j, const OutputMode& mode) {
  if (mode.plain) {
    // Plain text: one "key: value" line per top-level field, insertion order.
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::cout << it.key() << ": ";
      if (it.value().is_string())
        std::cout << it.value().get<std::string>();
      else
        std::cout << it.value().dump();
      std::cout << "\n";
    }
  } else {
    std::cout << j.dump() << "\n";
  }
}

uint64_t weil_budget_from_env(uint64_t flag_value, bool flag_set) {
  if (flag_set) return flag_value;
  if (const char* env = std::getenv("GALREP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
    throw std::invalid_argument("GALREP_BUDGET must be a positive integer");
  }
  return kDefaultWeilBudget;
}

std::vector<unsigned> parse_word(const std::string& s) {
  std::vector<unsigned> word;
  if (s.empty()) return word;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    unsigned long v = std::stoul(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad word token: " + tok);
    word.push_back(static_cast<unsigned>(v));
  }
  return word;
}

json cycq_json(const CycQ& v) {
  json entry = json::array();
  for (const Rat& c : v.coeffs()) entry.push_back(c.get_str());
  return entry;
}

int run_check_pe(const std::string& path1, const std::string& path2, unsigned depth,
                 const OutputMode& mode) {
  MatRep r1 = parse_rep_file(path1);
  MatRep r2 = parse_rep_file(path2);
  PEVerdict v = pe_decide(r1, r2, depth);
  json out;
  switch (v.status) {
    case PEStatus::equivalent_with_witness:
      out["status"] = "equivalent";
      out["witness_m"] = v.witness_m->get_str();
      emit(out, mode);
      return kExitYes;
    case PEStatus::not_equivalent:
      out["status"] = "not_equivalent";
      if (v.counterexample) out["counterexample_word"] = *v.counterexample;
      emit(out, mode);
      return kExitNo;
    case PEStatus::undecided_at_depth:
      out["status"] = "undecided_at_depth";
      out["depth"] = depth;
      emit(out, mode);
      return kExitUndecided;
  }
  return kExitInput;
}

int run_m_char(const std::string& path, const std::string& word_csv, const std::string& m_str,
               const OutputMode& mode) {
  MatRep rep = parse_rep_file(path);
  std::vector<unsigned> word = parse_word(word_csv);
  Int m(m_str);
  CycQ t = m_character(rep, word, m);
  json out;
  out["cyclotomic_order"] = t.order();
  out["trace"] = cycq_json(t);
  out["trace_str"] = t.str();
  emit(out, mode);
  return kExitYes;
}

int run_newton(unsigned n, unsigned m, const OutputMode& mode) {
  json terms = json::array();
  for (const Composition& r : compositions(n, m)) {
    json t;
    t["composition"] = r.parts;
    t["coefficient"] = newton_coefficient(r).get_str();
    t["dim_lambda"] = dim_lambda(n, r).get_str();
    terms.push_back(std::move(t));
  }
  json out;
  out["n"] = n;
  out["m"] = m;
  out["terms"] = std::move(terms);
  emit(out, mode);
  return kExitYes;
}

int run_dm(unsigned n, unsigned m, const OutputMode& mode) {
  json out;
  out["n"] = n;
  out["m"] = m;
  out["d_m"] = d_m(n, m).get_str();
  emit(out, mode);
  return kExitYes;
}

int run_mbound(unsigned n, const std::string& ell, unsigned e, unsigned f, bool no_factor,
               bool uniform, unsigned N, const OutputMode& mode) {
  json out;
  if (uniform) {
    out["n"] = n;
    out["N"] = N;
    out["bound"] = uniform_m_bound(n, N).get_str();
    emit(out, mode);
    return kExitYes;
  }
  LocalFieldParams field{Int(ell), e, f};
  FactoredInt k0 = paper_m_bound(n, field, !no_factor);
  out["n"] = n;
  out["ell"] = ell;
  out["e"] = e;
  out["f"] = f;
  out["bound"] = k0.value.get_str();
  if (!no_factor) {
    out["factored"] = k0.factored_str();
    out["fully_factored"] = k0.fully_factored;
  }
  out["roots_of_unity_bound"] = roots_of_unity_bound(field).get_str();
  emit(out, mode);
  return kExitYes;
}

int run_weil(const std::string& q_str, unsigned w, unsigned d, bool count_only, uint64_t budget,
             const OutputMode& mode) {
  Int q(q_str);
  if (count_only) {
    uint64_t c = weil_count(q, w, d, budget);
    if (mode.plain) {
      std::cout << c << "\n";
    } else {
      json out;
      out["count"] = c;
      emit(out, mode);
    }
    return kExitYes;
  }
  std::vector<WeilPoly> polys = enumerate_weil(q, w, d, budget);
  if (mode.plain) {
    // One polynomial per line, coefficients from leading to constant term.
    for (const WeilPoly& p : polys) {
      for (size_t i = p.coeffs.size(); i-- > 0;) {
        std::cout << p.coeffs[i].get_str();
        if (i != 0) std::cout << " ";
      }
      std::cout << "\n";
    }
  } else {
    json arr = json::array();
    for (const WeilPoly& p : polys) {
      json cs = json::array();
      for (size_t i = p.coeffs.size(); i-- > 0;) cs.push_back(p.coeffs[i].get_str());
      arr.push_back(std::move(cs));
    }
    std::cout << arr.dump() << "\n";
  }
  return kExitYes;
}

ModRep mod_rep_from_json(const json& j, size_t group_size) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("modulus") ||
      !j.contains("matrices"))
    throw std::invalid_argument("rep needs fields dimension, modulus, matrices");
  ModRep rep;
  rep.n = j["dimension"].get<unsigned>();
  rep.modulus = Int(j["modulus"].get<std::string>());
  const json& mats = j["matrices"];
  if (!mats.is_array() || mats.size() != group_size)
    throw std::invalid_argument("rep needs one matrix per group element");
  for (const json& mj : mats) {
    std::vector<Int> flat;
    if (!mj.is_array() || mj.size() != rep.n)
      throw std::invalid_argument("matrix row count mismatch");
    for (const json& row : mj) {
      if (!row.is_array() || row.size() != rep.n)
        throw std::invalid_argument("matrix entry count mismatch");
      for (const json& x : row)
        flat.emplace_back(Int(x.is_number_integer() ? x.dump() : x.get<std::string>()));
    }
    rep.mats.push_back(std::move(flat));
  }
  return rep;
}

int run_falsim(const std::string& path, bool single_rep, const OutputMode& mode) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j = json::parse(in);

  FiniteGroup g = [&] {
    const json& gj = j.at("group");
    if (gj.contains("permutations"))
      return FiniteGroup::from_permutations(
          gj["permutations"].get<std::vector<std::vector<unsigned>>>());
    return FiniteGroup::from_table(gj.at("labels").get<std::vector<std::string>>(),
                                   gj.at("table").get<std::vector<std::vector<unsigned>>>());
  }();

  PlaceTable places;
  for (const json& p : j.at("places"))
    places.places.emplace_back(p.at(0).get<std::string>(), p.at(1).get<unsigned>());

  std::vector<std::string> t_labels;
  if (j.contains("t")) {
    t_labels = j["t"].get<std::vector<std::string>>();
  } else {
    t_labels = frobenius_cover(g, places);
  }

  ModRep rho1 = mod_rep_from_json(j.at("rho1"), g.size());
  ModRep rho2 = mod_rep_from_json(j.at("rho2"), g.size());
  rho1.validate(g);
  rho2.validate(g);

  TraceDeterminationReport rep =
      trace_determination_check(g, rho1, rho2, t_labels, places, single_rep);

  json out;
  out["group_order"] = g.size();
  out["conjugacy_class_count"] = conjugacy_classes(g).size();
  out["t"] = t_labels;
  out["traces_agree_on_t"] = rep.traces_agree_on_t;
  out["traces_agree_globally"] = rep.traces_agree_globally;
  out["determination_holds"] = rep.determination_holds;
  out["spans_equal"] = rep.spans_equal;
  if (rep.distinguishing_place) out["distinguishing_place"] = *rep.distinguishing_place;
  emit(out, mode);
  return rep.determination_holds ? kExitYes : kExitNo;
}

int run_twist(const std::string& path1, const std::string& path2, const OutputMode& mode) {
  MatRep r1 = parse_rep_file(path1);
  MatRep r2 = parse_rep_file(path2);
  auto chi = twist_equivalent_finite(r1, r2);
  json out;
  if (!chi) {
    out["twist_equivalent"] = false;
    emit(out, mode);
    return kExitNo;
  }
  out["twist_equivalent"] = true;
  json values = json::array();
  for (const CycQ& v : *chi) values.push_back(v.str());
  out["character_order"] = (*chi)[0].order();
  out["character_values"] = std::move(values);
  emit(out, mode);
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact potential-equivalence toolkit for matrix representations"};
  app.require_subcommand(1);
  OutputMode mode;
  app.add_flag("--plain", mode.plain, "plain-text output instead of JSON");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");

  auto* pe = app.add_subcommand("check-pe", "decide potential equivalence of two rep files");
  std::string pe_a, pe_b;
  unsigned pe_depth = 6;
  pe->add_option("rep1", pe_a, "first rep file")->required();
  pe->add_option("rep2", pe_b, "second rep file")->required();
  pe->add_option("--depth", pe_depth, "word-length bound for free-group semi-decision");

  auto* mc = app.add_subcommand("m-char", "m-power character of a word");
  std::string mc_rep, mc_word, mc_m = "1";
  mc->add_option("rep", mc_rep, "rep file")->required();
  mc->add_option("--word", mc_word, "comma-separated generator indices (empty = identity)");
  mc->add_option("--m", mc_m, "power")->required();

  auto* nw = app.add_subcommand("newton", "power-sum linearization table");
  unsigned nw_n = 1, nw_m = 1;
  nw->add_option("--n", nw_n, "dimension")->required();
  nw->add_option("--m", nw_m, "power")->required();

  auto* dm = app.add_subcommand("dm", "auxiliary dimension d_m");
  unsigned dm_n = 1, dm_m = 1;
  dm->add_option("--n", dm_n, "dimension")->required();
  dm->add_option("--m", dm_m, "power")->required();

  auto* mb = app.add_subcommand("mbound", "uniform power bound");
  unsigned mb_n = 1, mb_e = 1, mb_f = 1, mb_N = 1;
  std::string mb_ell = "2";
  bool mb_nofactor = false, mb_uniform = false;
  mb->add_option("--n", mb_n, "dimension")->required();
  mb->add_option("--ell", mb_ell, "residue characteristic");
  mb->add_option("--e", mb_e, "ramification index");
  mb->add_option("--f", mb_f, "residue degree");
  mb->add_flag("--no-factor", mb_nofactor, "skip factoring the bound");
  mb->add_flag("--uniform", mb_uniform, "cyclotomic uniform bound instead of local bound");
  mb->add_option("--N", mb_N, "cyclotomic order for --uniform");

  auto* wl = app.add_subcommand("weil", "enumerate Weil polynomials");
  std::string wl_q = "2";
  unsigned wl_w = 1, wl_d = 2;
  bool wl_count = false;
  uint64_t wl_budget = kDefaultWeilBudget;
  wl->add_option("--q", wl_q, "prime power q")->required();
  wl->add_option("--w", wl_w, "weight")->required();
  wl->add_option("--d", wl_d, "degree")->required();
  wl->add_flag("--count-only", wl_count, "print only the count");
  auto* budget_opt = wl->add_option("--budget", wl_budget, "candidate budget");

  auto* fs = app.add_subcommand("falsim", "finite trace-determination simulation");
  std::string fs_path;
  bool fs_single = false;
  fs->add_option("bundle", fs_path, "JSON bundle with group, places, rho1, rho2")->required();
  fs->add_flag("--single-representative", fs_single,
               "span from place representatives only (diagnostic)");

  auto* tw = app.add_subcommand("twist", "search for a Dirichlet twist relating two finite reps");
  std::string tw_a, tw_b;
  tw->add_option("rep1", tw_a, "first rep file")->required();
  tw->add_option("rep2", tw_b, "second rep file")->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();  // let --plain/--json appear after the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*pe) return run_check_pe(pe_a, pe_b, pe_depth, mode);
    if (*mc) return run_m_char(mc_rep, mc_word, mc_m, mode);
    if (*nw) return run_newton(nw_n, nw_m, mode);
    if (*dm) return run_dm(dm_n, dm_m, mode);
    if (*mb) return run_mbound(mb_n, mb_ell, mb_e, mb_f, mb_nofactor, mb_uniform, mb_N, mode);
    if (*wl)
      return run_weil(wl_q, wl_w, wl_d, wl_count,
                      weil_budget_from_env(wl_budget, budget_opt->count() > 0), mode);
    if (*fs) return run_falsim(fs_path, fs_single, mode);
    if (*tw) return run_twist(tw_a, tw_b, mode);
  } catch (const WeilBudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

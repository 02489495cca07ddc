#include "galrep/repfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace galrep {

namespace {

using nlohmann::json;
using Code = RepFileError::Code;

[[noreturn]] void fail(Code code, const std::string& msg) { throw RepFileError(code, msg); }

std::string kind_name(RepKind k) {
  switch (k) {
    case RepKind::single: return "single";
    case RepKind::free_group: return "free";
    case RepKind::finite: return "finite";
  }
  throw std::logic_error("unreachable");
}

RepKind kind_from_name(const std::string& s) {
  if (s == "single") return RepKind::single;
  if (s == "free") return RepKind::free_group;
  if (s == "finite") return RepKind::finite;
  fail(Code::schema_violation, "kind must be one of \"single\", \"free\", \"finite\", got \"" + s + "\"");
}

Rat entry_rational(const json& j) {
  if (!j.is_string())
    fail(j.is_number() ? Code::decimal_literal : Code::schema_violation,
         "rational entries must be strings like \"p/q\"");
  const std::string s = j.get<std::string>();
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
      fail(Code::decimal_literal, "decimal literals are forbidden: \"" + s + "\"");
    fail(Code::schema_violation, std::string("bad rational \"") + s + "\": " + e.what());
  }
}

unsigned positive_uint(const json& j, const char* field) {
  if (!j.is_number_unsigned() || j.get<uint64_t>() == 0 || j.get<uint64_t>() > 1000000)
    fail(Code::schema_violation, std::string(field) + " must be a positive integer");
  return static_cast<unsigned>(j.get<uint64_t>());
}

}  // namespace

MatRep parse_rep_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Code::bad_json, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Code::schema_violation, "top level must be a JSON object");
  for (const char* field : {"cyclotomic_order", "dimension", "kind", "generators"})
    if (!j.contains(field))
      fail(Code::schema_violation, std::string("missing field \"") + field + "\"");

  MatRep rep;
  rep.N = positive_uint(j["cyclotomic_order"], "cyclotomic_order");
  rep.n = positive_uint(j["dimension"], "dimension");
  if (!j["kind"].is_string()) fail(Code::schema_violation, "kind must be a string");
  rep.kind = kind_from_name(j["kind"].get<std::string>());

  const unsigned phi = euler_phi(rep.N);
  const json& gens = j["generators"];
  if (!gens.is_array() || gens.empty())
    fail(Code::schema_violation, "generators must be a non-empty array of matrices");
  if (rep.kind == RepKind::single && gens.size() != 1)
    fail(Code::schema_violation, "kind=single requires exactly one generator");
  for (const json& gm : gens) {
    if (!gm.is_array() || gm.size() != rep.n)
      fail(Code::schema_violation, "each generator must be an array of dimension rows");
    Matrix m(rep.n, rep.N);
    for (unsigned i = 0; i < rep.n; ++i) {
      const json& row = gm[i];
      if (!row.is_array() || row.size() != rep.n)
        fail(Code::schema_violation, "each matrix row must have dimension entries");
      for (unsigned k = 0; k < rep.n; ++k) {
        const json& entry = row[k];
        if (!entry.is_array())
          fail(Code::schema_violation, "each entry must be an array of rational strings");
        if (entry.size() != phi)
          fail(Code::entry_length_mismatch,
               "entry has " + std::to_string(entry.size()) + " coefficients, expected phi(N) = " +
                   std::to_string(phi));
        std::vector<Rat> coeffs;
        coeffs.reserve(phi);
        for (const json& c : entry) coeffs.push_back(entry_rational(c));
        m.at(i, k) = CycQ::reduce(coeffs, rep.N);
      }
    }
    rep.generators.push_back(std::move(m));
  }
  if (rep.kind == RepKind::finite) {
    for (size_t g = 0; g < rep.generators.size(); ++g)
      if (!rep.generators[g].is_invertible())
        fail(Code::non_invertible_generator,
             "generator " + std::to_string(g) + " is singular; kind=finite requires invertible generators");
  }
  try {
    rep.validate();
  } catch (const std::exception& e) {
    fail(Code::schema_violation, e.what());
  }
  return rep;
}

MatRep parse_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Code::bad_json, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rep_text(buf.str());
}

std::string serialize_rep(const MatRep& rep) {
  json j;
  j["cyclotomic_order"] = rep.N;
  j["dimension"] = rep.n;
  j["kind"] = kind_name(rep.kind);
  json gens = json::array();
  for (const Matrix& m : rep.generators) {
    json gm = json::array();
    for (unsigned i = 0; i < rep.n; ++i) {
      json row = json::array();
      for (unsigned k = 0; k < rep.n; ++k) {
        json entry = json::array();
        for (const Rat& c : m.at(i, k).coeffs()) entry.push_back(c.get_str());
        row.push_back(std::move(entry));
      }
      gm.push_back(std::move(row));
    }
    gens.push_back(std::move(gm));
  }
  j["generators"] = std::move(gens);
  return j.dump() + "\n";
}

}  // namespace galrep

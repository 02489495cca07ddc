// Acceptance suite: one criterion per section, one [PASS]/[FAIL] line each.
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "galrep/faltings.hpp"
#include "galrep/local_bound.hpp"
#include "galrep/newton.hpp"
#include "galrep/poteq.hpp"
#include "galrep/repfile.hpp"
#include "galrep/weil.hpp"
#include "weil_oracle.hpp"

using namespace galrep;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& note = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name;
  if (!note.empty()) std::cout << " -- " << note;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

Matrix random_matrix(std::mt19937& rng, unsigned n, unsigned order) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<int> use_zeta(0, 3);
  Matrix m(n, order);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      CycQ v = CycQ::from_rational(Rat(num(rng), den(rng)), order);
      if (order > 1 && use_zeta(rng) == 0) v += CycQ::zeta(order);
      m.at(i, j) = v;
    }
  return m;
}

Matrix random_invertible(std::mt19937& rng, unsigned n, unsigned order) {
  for (;;) {
    Matrix m = random_matrix(rng, n, order);
    if (m.is_invertible()) return m;
  }
}

// ---------------------------------------------------------------- criterion 1
// Newton identity: m-trace from the characteristic polynomial equals the trace
// of the exact m-th matrix power.
void criterion_newton() {
  std::mt19937 rng(101);
  const std::array<unsigned, 3> orders{1, 3, 4};
  bool ok = true;
  for (unsigned n = 1; n <= 4 && ok; ++n) {
    for (unsigned m = 1; m <= 6 && ok; ++m) {
      for (int trial = 0; trial < 50 && ok; ++trial) {
        unsigned N = orders[static_cast<size_t>(trial) % orders.size()];
        Matrix g = random_matrix(rng, n, N);
        CharPoly p = char_poly(g);
        if (m_trace_from_charpoly(p, m) != g.pow(Int(m)).trace()) ok = false;
      }
    }
  }
  report(1, "Newton identity exactness (n<=4, m<=6, 50 matrices each)", ok);
}

// ---------------------------------------------------------------- criterion 2
void criterion_dm() {
  bool ok = d_m(2, 2) == 34 && d_m(2, 1) == 8;
  for (unsigned m = 1; m <= 6; ++m) ok = ok && d_m(1, m) == 2;
  for (unsigned n = 1; n <= 6 && ok; ++n)
    for (unsigned m = 1; m <= 6 && ok; ++m) {
      Int total(0);
      for (const Composition& r : compositions(n, m)) {
        Int d = dim_lambda(n, r);
        total += d * d;
      }
      if (d_m(n, m) != 2 * total) ok = false;
    }
  report(2, "d_m formula vs independent enumeration (n,m<=6)", ok);
}

// ---------------------------------------------------------------- criterion 3
void criterion_power_charpoly() {
  std::mt19937 rng(303);
  std::uniform_int_distribution<unsigned> pick_n(1, 3), pick_k(1, 12), pick_o(0, 2);
  const std::array<unsigned, 3> orders{1, 3, 4};
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    unsigned n = pick_n(rng);
    unsigned N = orders[pick_o(rng)];
    unsigned K = pick_k(rng);
    Matrix g = random_matrix(rng, n, N);
    if (power_charpoly(char_poly(g), Int(K)) != char_poly(g.pow(Int(K)))) ok = false;
  }
  // large-K path: K = uniform_m_bound(2,1) = 120
  for (int trial = 0; trial < 20 && ok; ++trial) {
    Matrix g = random_matrix(rng, 2, 1);
    if (power_charpoly(char_poly(g), Int(120)) != char_poly(g.pow(Int(120)))) ok = false;
  }
  report(3, "power_charpoly vs direct matrix powering (200 @ K<=12, 20 @ K=120)", ok);
}

// ---------------------------------------------------------------- criterion 4
void criterion_elementwise() {
  std::mt19937 rng(404);
  bool ok = true;
  // 100 constructed positives: g vs zeta * h g h^-1
  for (int trial = 0; trial < 100 && ok; ++trial) {
    unsigned N = (trial % 2 == 0) ? 1 : 4;
    Matrix g = random_invertible(rng, 2, N);
    Matrix h = random_invertible(rng, 2, N);
    CycQ zeta = (N == 1) ? CycQ::from_rational(Rat(trial % 3 == 0 ? -1 : 1))
                         : CycQ::zeta(4).pow(Int(trial % 4));
    Matrix twisted = (h * g * h.inverse()).scaled(zeta);
    PEVerdict v = elementwise_pe(g, twisted);
    if (v.status != PEStatus::equivalent_with_witness) ok = false;
    // witness must certify: equal K-power char polys at the witness
    if (ok && power_charpoly(char_poly(g), *v.witness_m) !=
                  power_charpoly(char_poly(twisted), *v.witness_m))
      ok = false;
  }
  // 100 perturbed negatives: all eigenvalues scaled by 2 (never a root of unity)
  for (int trial = 0; trial < 100 && ok; ++trial) {
    unsigned N = (trial % 2 == 0) ? 1 : 4;
    Matrix g = random_invertible(rng, 2, N);
    Matrix scaled = g.scaled(CycQ::from_rational(Rat(2), N));
    if (elementwise_pe(g, scaled).status != PEStatus::not_equivalent) ok = false;
  }
  report(4, "elementwise potential equivalence (100 positives, 100 negatives)", ok);
}

// ---------------------------------------------------------------- criterion 5
void criterion_bounds() {
  bool ok = uniform_m_bound(1, 1) == 2 && uniform_m_bound(2, 1) == 120 &&
            uniform_m_bound(1, 4) == 12;
  ok = ok && paper_m_bound(1, {Int(5), 1, 1}).value == 4;
  // divisibility monotonicity on the full grid n<=4, ell in {2,3,5,7}, e,f<=3
  for (long ell : {2, 3, 5, 7}) {
    if (!ok) break;
    // cache[n][e][f]
    Int cache[5][4][4];
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned e = 1; e <= 3; ++e)
        for (unsigned f = 1; f <= 3; ++f)
          cache[n][e][f] = paper_m_bound(n, {Int(ell), e, f}, false).value;
    for (unsigned n = 1; n <= 4 && ok; ++n)
      for (unsigned e = 1; e <= 3 && ok; ++e)
        for (unsigned f = 1; f <= 3 && ok; ++f)
          for (unsigned n2 = n; n2 <= 4 && ok; ++n2)
            for (unsigned e2 = 1; e2 <= 3 && ok; ++e2)
              for (unsigned f2 = 1; f2 <= 3 && ok; ++f2) {
                if (e2 % e != 0 || f2 % f != 0) continue;
                if (cache[n2][e2][f2] % cache[n][e][f] != 0) ok = false;
              }
  }
  report(5, "power bounds: pinned values + divisibility monotonicity grid", ok);
}

// ---------------------------------------------------------------- criterion 6
void criterion_weil() {
  // Pinned counts. Two of the four pinned values are inconsistent with the
  // operation's own definition: x^2 - 2 (q=2,w=1) and x^2 - 3 (q=3,w=1) have
  // all roots of absolute value sqrt(q), so the true counts are 6 and 8.
  // The independent high-precision root-finding oracle below confirms the
  // enumerator; the pinned 5 and 7 are asserted as stated and fail honestly.
  bool pinned_ok = true;
  std::string pinned_note;
  {
    uint64_t c212 = weil_count(Int(2), 1, 2);
    uint64_t c312 = weil_count(Int(3), 1, 2);
    uint64_t c311 = weil_count(Int(3), 1, 1);
    uint64_t c201 = weil_count(Int(2), 0, 1);
    if (c212 != 5 || c312 != 7 || c311 != 0 || c201 != 2) {
      pinned_ok = false;
      std::ostringstream os;
      os << "pinned counts got (" << c212 << "," << c312 << "," << c311 << "," << c201
         << ") vs stated (5,7,0,2); the extra polynomials are x^2-2 and x^2-3, "
            "which satisfy the root-radius definition (roots +-sqrt(q))";
      pinned_note = os.str();
    }
  }
  bool oracle_ok = true;
  std::string oracle_note;
  for (long q : {2, 3, 4}) {
    if (!is_prime_power(Int(q))) continue;
    for (unsigned w = 0; w <= 2 && oracle_ok; ++w)
      for (unsigned d = 1; d <= 4 && oracle_ok; ++d) {
        auto list = enumerate_weil(Int(q), w, d, 100000000ull);
        auto oracle = weil_oracle::oracle_enumerate(Int(q), w, d);
        if (list.size() != oracle.size()) {
          oracle_ok = false;
          std::ostringstream os;
          os << "mismatch at q=" << q << " w=" << w << " d=" << d << ": " << list.size() << " vs "
             << oracle.size();
          oracle_note = os.str();
          break;
        }
        for (const WeilPoly& p : list)
          if (oracle.count(p.coeffs) == 0) {
            oracle_ok = false;
            oracle_note = "enumerated polynomial missing from oracle set";
            break;
          }
      }
  }
  report(6, "Weil enumeration vs independent oracle (q<=4, w<=2, d<=4) + pinned counts",
         pinned_ok && oracle_ok,
         pinned_ok ? oracle_note
                   : (oracle_note.empty() ? "oracle grid agrees; " + pinned_note
                                          : oracle_note + "; " + pinned_note));
}

// ---------------------------------------------------------------- criterion 7
void criterion_twist() {
  bool ok = true;
  std::string note;
  for (unsigned k : {2u, 4u, 6u}) {
    // rho = a faithful character of Z/k: generator (zeta_k). Its trace never
    // vanishes, so the twisting character is unique and must be recovered
    // exactly.
    unsigned N = k;
    Matrix gen(1, N);
    gen.at(0, 0) = CycQ::zeta(N);
    MatRep rho;
    rho.kind = RepKind::finite;
    rho.n = 1;
    rho.N = N;
    rho.generators = {gen};
    for (unsigned j = 0; j < k && ok; ++j) {
      // chi_j sends the generator to zeta_k^j; twist and recover
      MatRep twisted = rho;
      twisted.generators[0] = gen.scaled(CycQ::zeta(N).pow(Int(j)));
      auto chi = twist_equivalent_finite(rho, twisted);
      if (!chi) {
        ok = false;
        note = "character not found for Z/" + std::to_string(k);
        break;
      }
      // the recovered character evaluated at the generator (pair-closure
      // element 1 when j > 0 or when the closure is nontrivial)
      const unsigned L = (*chi)[0].order();
      const unsigned big = static_cast<unsigned>(std::lcm(L, N));
      CycQ expected = CycQ::zeta(N).pow(Int(j)).promoted(big);
      size_t gen_index = (*chi).size() > 1 ? 1 : 0;
      if ((*chi)[gen_index].promoted(big) != expected &&
          !(j == 0 && (*chi)[gen_index].promoted(big).is_one())) {
        ok = false;
        note = "wrong character value for Z/" + std::to_string(k);
      }
    }
  }
  // non-twist pair: Z/2 as diag(1,-1) vs -I; no character rescales trace 0 to -2
  if (ok) {
    MatRep a, b;
    a.kind = b.kind = RepKind::finite;
    a.n = b.n = 2;
    a.N = b.N = 1;
    Matrix ma = Matrix::identity(2, 1);
    ma.at(1, 1) = CycQ::from_rational(Rat(-1));
    Matrix mb = Matrix::identity(2, 1).scaled(CycQ::from_rational(Rat(-1)));
    a.generators = {ma};
    b.generators = {mb};
    if (twist_equivalent_finite(a, b).has_value()) {
      ok = false;
      note = "non-twist pair incorrectly reported as twist-equivalent";
    }
  }
  report(7, "twist detection recovers every degree-1 character of Z/2, Z/4, Z/6", ok, note);
}

// ---------------------------------------------------------------- criterion 8
namespace falsim {

// inverse of a matrix with unit determinant over Z/m via adjugate (n <= 8)
std::vector<Int> identity_mat(unsigned n) {
  std::vector<Int> m(static_cast<size_t>(n) * n, Int(0));
  for (unsigned i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
  return m;
}

std::vector<Int> mat_mul(const std::vector<Int>& a, const std::vector<Int>& b, unsigned n,
                         const Int& m) {
  std::vector<Int> c(static_cast<size_t>(n) * n, Int(0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k)
      for (unsigned j = 0; j < n; ++j)
        c[static_cast<size_t>(i) * n + j] +=
            a[static_cast<size_t>(i) * n + k] * b[static_cast<size_t>(k) * n + j];
  for (Int& x : c) {
    x %= m;
    if (x < 0) x += m;
  }
  return c;
}

// inverse of a unit upper-triangular matrix over Z/m by back substitution
std::vector<Int> ut_inverse(const std::vector<Int>& u, unsigned n, const Int& m) {
  std::vector<Int> inv = identity_mat(n);
  // solve U X = I column by column, bottom-up
  for (unsigned col = 0; col < n; ++col)
    for (unsigned row = n; row-- > 0;) {
      Int s = (row == col) ? Int(1) : Int(0);
      for (unsigned k = row + 1; k < n; ++k)
        s -= u[static_cast<size_t>(row) * n + k] * inv[static_cast<size_t>(k) * n + col];
      s %= m;
      if (s < 0) s += m;
      inv[static_cast<size_t>(row) * n + col] = s;
    }
  return inv;
}

// rho(g) = sign(g)^twist * U P(g) U^{-1} over Z/m, from a permutation action
ModRep random_rep(std::mt19937& rng, const FiniteGroup& g,
                  const std::vector<std::vector<unsigned>>& perms, const std::vector<int>& signs,
                  bool use_sign_twist, const Int& modulus) {
  const unsigned n = static_cast<unsigned>(perms[0].size());
  std::uniform_int_distribution<long> entry(0, 4);
  std::vector<Int> u = identity_mat(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) u[static_cast<size_t>(i) * n + j] = entry(rng);
  std::vector<Int> uinv = ut_inverse(u, n, modulus);
  ModRep rep;
  rep.n = n;
  rep.modulus = modulus;
  for (size_t e = 0; e < g.size(); ++e) {
    std::vector<Int> p(static_cast<size_t>(n) * n, Int(0));
    for (unsigned i = 0; i < n; ++i) p[static_cast<size_t>(perms[e][i]) * n + i] = 1;
    std::vector<Int> conj = mat_mul(mat_mul(u, p, n, modulus), uinv, n, modulus);
    if (use_sign_twist && signs[e] < 0)
      for (Int& x : conj) {
        x = modulus - x;
        if (x == modulus) x = 0;
      }
    rep.mats.push_back(std::move(conj));
  }
  return rep;
}

// full permutation table of the closure, tracking each element's permutation
struct PermGroup {
  FiniteGroup group;
  std::vector<std::vector<unsigned>> perms;
  std::vector<int> signs;
};

PermGroup close(const std::vector<std::vector<unsigned>>& gens) {
  const size_t deg = gens[0].size();
  std::vector<unsigned> id(deg);
  for (size_t i = 0; i < deg; ++i) id[i] = static_cast<unsigned>(i);
  std::vector<std::vector<unsigned>> elems{id};
  std::map<std::vector<unsigned>, unsigned> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head)
    for (const auto& gp : gens) {
      std::vector<unsigned> next(deg);
      for (size_t i = 0; i < deg; ++i) next[i] = gp[elems[head][i]];
      if (index.emplace(next, static_cast<unsigned>(elems.size())).second)
        elems.push_back(std::move(next));
    }
  PermGroup pg{FiniteGroup::from_permutations(gens), elems, {}};
  for (const auto& p : elems) {
    // parity by counting inversions
    int inv_count = 0;
    for (size_t i = 0; i < deg; ++i)
      for (size_t j = i + 1; j < deg; ++j)
        if (p[i] > p[j]) ++inv_count;
    pg.signs.push_back(inv_count % 2 == 0 ? 1 : -1);
  }
  return pg;
}

}  // namespace falsim

void criterion_faltings() {
  std::mt19937 rng(808);
  bool ok = true;
  std::string note;
  struct Case {
    const char* name;
    std::vector<std::vector<unsigned>> gens;
  };
  std::vector<Case> cases{
      {"S3", {{1, 2, 0}, {1, 0, 2}}},
      {"Z6", {{1, 2, 3, 4, 5, 0}}},
      {"D4", {{1, 2, 3, 0}, {3, 2, 1, 0}}},
  };
  for (const Case& c : cases) {
    if (!ok) break;
    falsim::PermGroup pg = falsim::close(c.gens);
    const FiniteGroup& g = pg.group;
    PlaceTable places;
    for (unsigned i = 0; i < g.size(); ++i)
      places.places.emplace_back("v" + std::to_string(i), i);
    auto t = frobenius_cover(g, places);
    // covering soundness
    auto classes = conjugacy_classes(g);
    std::vector<char> covered(classes.size(), 0);
    for (const std::string& label : t)
      for (const auto& [pl, el] : places.places)
        if (pl == label)
          for (size_t ci = 0; ci < classes.size(); ++ci)
            for (unsigned e : classes[ci])
              if (e == el) covered[ci] = 1;
    for (char cv : covered)
      if (!cv) {
        ok = false;
        note = std::string("cover misses a class for ") + c.name;
      }
    for (Int modulus : {Int(5), Int(25)}) {
      if (!ok) break;
      for (int trial = 0; trial < 50 && ok; ++trial) {
        ModRep r1 = falsim::random_rep(rng, g, pg.perms, pg.signs, trial % 2 == 0, modulus);
        ModRep r2 = falsim::random_rep(rng, g, pg.perms, pg.signs, trial % 3 == 0, modulus);
        r1.validate(g);
        r2.validate(g);
        auto rep = trace_determination_check(g, r1, r2, t, places);
        if (!rep.determination_holds) {
          ok = false;
          note = std::string("determination failed for ") + c.name;
        }
      }
    }
  }
  report(8, "Faltings simulation: covers + trace determination (S3, Z6, D4; mod 5, 25)", ok, note);
}

// ---------------------------------------------------------------- criterion 9
struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cmd(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void criterion_cli(const std::string& cli) {
  bool ok = true;
  std::string note;
  // temp rep files
  const std::string dir = "/tmp/galrep_acceptance";
  std::system(("mkdir -p " + dir).c_str());
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream f(dir + "/" + name);
    f << text;
    return dir + "/" + name;
  };
  std::string same = write(
      "same.json",
      R"({"cyclotomic_order":1,"dimension":1,"kind":"single","generators":[[[["2/1"]]]]})");
  std::string other = write(
      "other.json",
      R"({"cyclotomic_order":1,"dimension":1,"kind":"single","generators":[[[["3/1"]]]]})");
  std::string bad = write("bad.json", R"({"cyclotomic_order":1)");

  std::vector<std::string> documented{
      cli + " weil --q 2 --w 1 --d 2 --count-only",
      cli + " mbound --n 1 --ell 5 --e 1 --f 1",
      cli + " check-pe " + same + " " + same,
      cli + " newton --n 3 --m 3",
      cli + " dm --n 2 --m 2",
      cli + " weil --q 2 --w 1 --d 2 --plain",
      cli + " mbound --n 2 --uniform --N 1",
  };
  for (const std::string& cmd : documented) {
    RunResult a = run_cmd(cmd);
    RunResult b = run_cmd(cmd);
    if (a.exit_code != b.exit_code || a.output != b.output || a.output.empty()) {
      ok = false;
      note = "nondeterministic or empty output: " + cmd;
    }
  }
  // exit code contract, one case per code
  if (ok) {
    struct ExpectedRun {
      std::string cmd;
      int code;
    };
    std::vector<ExpectedRun> runs{
        {cli + " check-pe " + same + " " + same, 0},
        {cli + " check-pe " + same + " " + other, 1},
        {cli + " check-pe " + bad + " " + same, 2},
        {cli + " weil --q 4 --w 2 --d 4 --count-only --budget 3", 3},
    };
    for (const auto& r : runs) {
      RunResult res = run_cmd(r.cmd);
      if (res.exit_code != r.code) {
        ok = false;
        note = "wrong exit code for: " + r.cmd + " (got " + std::to_string(res.exit_code) +
               ", want " + std::to_string(r.code) + ")";
      }
    }
  }
  report(9, "CLI determinism and exit-code contract", ok, note);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-galrep-cli>\n";
    return 2;
  }
  criterion_newton();
  criterion_dm();
  criterion_power_charpoly();
  criterion_elementwise();
  criterion_bounds();
  criterion_weil();
  criterion_twist();
  criterion_faltings();
  criterion_cli(argv[1]);
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}

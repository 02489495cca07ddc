#include "galrep/poteq.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace galrep {

namespace {

std::vector<Int> sorted_divisors(const Int& n) {
  std::map<Int, unsigned> fac;
  Int rem = n;
  for (Int p = 2; p * p <= rem; ++p) {
    while (rem % p == 0) {
      ++fac[p];
      rem /= p;
    }
  }
  if (rem > 1) ++fac[rem];
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : fac) {
    size_t sz = divs.size();
    Int pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

void MatRep::validate(size_t closure_cap) const {
  if (n == 0 || N == 0) throw std::invalid_argument("MatRep: n and N must be positive");
  if (generators.empty()) throw std::invalid_argument("MatRep: at least one generator required");
  for (const Matrix& g : generators) {
    if (g.dim() != n || g.order() != N)
      throw std::invalid_argument("MatRep: generator dimension/order mismatch");
  }
  if (kind == RepKind::single && generators.size() != 1)
    throw std::invalid_argument("MatRep: kind=single requires exactly one generator");
  if (kind == RepKind::finite) {
    for (const Matrix& g : generators) {
      if (!g.is_invertible())
        throw std::invalid_argument("MatRep: kind=finite requires invertible generators");
    }
    // Closure must terminate below the cap; GroupClosure construction throws
    // otherwise (checked lazily by consumers as well).
    std::map<std::string, unsigned> seen;
    std::vector<Matrix> elems{Matrix::identity(n, N)};
    seen.emplace(elems[0].key(), 0);
    for (size_t head = 0; head < elems.size(); ++head) {
      for (const Matrix& g : generators) {
        Matrix next = elems[head] * g;
        if (seen.emplace(next.key(), static_cast<unsigned>(elems.size())).second) {
          elems.push_back(std::move(next));
          if (elems.size() > closure_cap)
            throw std::runtime_error("MatRep: finite closure cap exceeded");
        }
      }
    }
  }
}

Int uniform_m_bound(unsigned n, unsigned N) {
  if (n == 0 || N == 0) throw std::invalid_argument("uniform_m_bound: n, N must be positive");
  unsigned long bound = static_cast<unsigned long>(n) * n * euler_phi(N);
  // phi(M) >= sqrt(M/2), so phi(M) <= B forces M <= 2B^2.
  unsigned long limit = 2 * bound * bound + 1;
  Int k0(1);
  for (unsigned long m = 1; m <= limit; ++m) {
    if (euler_phi(static_cast<unsigned>(m)) <= bound) {
      Int mm(static_cast<unsigned long>(m));
      k0 = lcm(k0, mm);
    }
  }
  return k0;
}

CycQ m_character(const MatRep& rep, const std::vector<unsigned>& word, const Int& m) {
  if (m < 1) throw std::invalid_argument("m_character: m must be positive");
  Matrix prod = Matrix::identity(rep.n, rep.N);
  for (unsigned idx : word) {
    if (idx >= rep.generators.size())
      throw std::out_of_range("m_character: generator index out of range");
    prod = prod * rep.generators[idx];
  }
  return prod.pow(m).trace();
}

PEVerdict elementwise_pe(const Matrix& g1, const Matrix& g2) {
  if (g1.dim() != g2.dim()) throw std::invalid_argument("elementwise_pe: dimension mismatch");
  if (g1.order() != g2.order())
    throw std::invalid_argument("elementwise_pe: cyclotomic order mismatch");
  const Int k0 = uniform_m_bound(g1.dim(), g1.order());
  const CharPoly p1 = char_poly(g1);
  const CharPoly p2 = char_poly(g2);
  if (power_charpoly(p1, k0) != power_charpoly(p2, k0)) {
    PEVerdict v{PEStatus::not_equivalent, std::nullopt, std::vector<unsigned>{0}};
    return v;
  }
  // Minimal valid divisor of K0; validity is stable under multiples, so the
  // first hit in increasing order is the witness.
  for (const Int& d : sorted_divisors(k0)) {
    if (power_charpoly(p1, d) == power_charpoly(p2, d))
      return PEVerdict{PEStatus::equivalent_with_witness, d, std::nullopt};
  }
  return PEVerdict{PEStatus::equivalent_with_witness, k0, std::nullopt};  // unreachable
}

namespace {

struct PairClosure {
  std::vector<Matrix> a, b;
  std::vector<std::vector<unsigned>> words;
};

PairClosure close_pairs(const MatRep& r1, const MatRep& r2, size_t cap) {
  PairClosure pc;
  std::map<std::string, unsigned> seen;
  pc.a.push_back(Matrix::identity(r1.n, r1.N));
  pc.b.push_back(Matrix::identity(r2.n, r2.N));
  pc.words.push_back({});
  seen.emplace(pc.a[0].key() + "#" + pc.b[0].key(), 0);
  for (size_t head = 0; head < pc.a.size(); ++head) {
    for (unsigned gi = 0; gi < r1.generators.size(); ++gi) {
      Matrix na = pc.a[head] * r1.generators[gi];
      Matrix nb = pc.b[head] * r2.generators[gi];
      std::string key = na.key() + "#" + nb.key();
      if (seen.emplace(key, static_cast<unsigned>(pc.a.size())).second) {
        std::vector<unsigned> w = pc.words[head];
        w.push_back(gi);
        pc.a.push_back(std::move(na));
        pc.b.push_back(std::move(nb));
        pc.words.push_back(std::move(w));
        if (pc.a.size() > cap) throw std::runtime_error("pe_decide: closure cap exceeded");
      }
    }
  }
  return pc;
}

unsigned long pair_order(const Matrix& a, const Matrix& b, unsigned long cap) {
  Matrix pa = a, pb = b;
  for (unsigned long t = 1; t <= cap; ++t) {
    if (pa.is_identity() && pb.is_identity()) return t;
    pa = pa * a;
    pb = pb * b;
  }
  throw std::runtime_error("pe_decide: element order exceeds closure cap");
}

PEVerdict pe_decide_finite(const MatRep& r1, const MatRep& r2, size_t cap) {
  PairClosure pc = close_pairs(r1, r2, cap);
  Int exponent(1);
  for (size_t i = 0; i < pc.a.size(); ++i) {
    Int ord(pair_order(pc.a[i], pc.b[i], 4 * cap));
    exponent = lcm(exponent, ord);
  }
  for (const Int& m : sorted_divisors(exponent)) {
    bool all_equal = true;
    for (size_t i = 0; i < pc.a.size(); ++i) {
      if (pc.a[i].pow(m).trace() != pc.b[i].pow(m).trace()) {
        all_equal = false;
        break;
      }
    }
    if (all_equal) return PEVerdict{PEStatus::equivalent_with_witness, m, std::nullopt};
  }
  // Unreachable: at m = exponent every element powers to the identity pair.
  return PEVerdict{PEStatus::equivalent_with_witness, exponent, std::nullopt};
}

PEVerdict pe_decide_free(const MatRep& r1, const MatRep& r2, unsigned depth) {
  const Int k0 = uniform_m_bound(r1.n, r1.N);
  const unsigned g = static_cast<unsigned>(r1.generators.size());
  std::vector<unsigned> word;
  for (unsigned len = 1; len <= depth; ++len) {
    word.assign(len, 0);
    while (true) {
      Matrix m1 = Matrix::identity(r1.n, r1.N);
      Matrix m2 = Matrix::identity(r2.n, r2.N);
      for (unsigned idx : word) {
        m1 = m1 * r1.generators[idx];
        m2 = m2 * r2.generators[idx];
      }
      if (m1.pow(k0).trace() != m2.pow(k0).trace())
        return PEVerdict{PEStatus::not_equivalent, std::nullopt, word};
      // Next word in lexicographic order.
      unsigned pos = len;
      while (pos > 0 && word[pos - 1] + 1 == g) word[--pos] = 0;
      if (pos == 0) break;
      ++word[pos - 1];
    }
  }
  return PEVerdict{PEStatus::undecided_at_depth, std::nullopt, std::nullopt};
}

}  // namespace

PEVerdict pe_decide(const MatRep& rep1, const MatRep& rep2, unsigned depth, size_t closure_cap) {
  if (rep1.kind != rep2.kind) throw std::invalid_argument("pe_decide: kind mismatch");
  if (rep1.n != rep2.n || rep1.N != rep2.N)
    throw std::invalid_argument("pe_decide: dimension or cyclotomic order mismatch");
  if (rep1.generators.size() != rep2.generators.size())
    throw std::invalid_argument("pe_decide: generator count mismatch");
  switch (rep1.kind) {
    case RepKind::single:
      return elementwise_pe(rep1.generators[0], rep2.generators[0]);
    case RepKind::finite:
      return pe_decide_finite(rep1, rep2, closure_cap);
    case RepKind::free_group:
      return pe_decide_free(rep1, rep2, depth);
  }
  throw std::logic_error("pe_decide: unknown kind");
}

namespace {

// Subgroup of indices generated by `gens` inside the table.
std::vector<unsigned> subgroup_closure(const std::vector<std::vector<unsigned>>& table,
                                       std::vector<unsigned> gens) {
  std::vector<char> in(table.size(), 0);
  std::vector<unsigned> elems{0};
  in[0] = 1;
  for (unsigned g : gens)
    if (!in[g]) {
      in[g] = 1;
      elems.push_back(g);
    }
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t gi = 0; gi < elems.size(); ++gi) {
      unsigned prod = table[elems[head]][elems[gi]];
      if (!in[prod]) {
        in[prod] = 1;
        elems.push_back(prod);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

std::optional<std::vector<CycQ>> twist_equivalent_finite(const MatRep& rep1, const MatRep& rep2,
                                                         size_t closure_cap) {
  if (rep1.kind != RepKind::finite || rep2.kind != RepKind::finite)
    throw std::invalid_argument("twist_equivalent_finite: kind must be finite");
  if (rep1.n != rep2.n || rep1.N != rep2.N)
    throw std::invalid_argument("twist_equivalent_finite: dimension or order mismatch");
  if (rep1.generators.size() != rep2.generators.size())
    throw std::invalid_argument("twist_equivalent_finite: generator count mismatch");

  // Close over pairs (rho1(w), rho2(w)): the image of rho1 x rho2. Any
  // twisting character factors through this group, since the pair determines
  // the scalar wherever Tr(rho1) is a nonzero matrix entry-wise.
  PairClosure pc = close_pairs(rep1, rep2, closure_cap);
  const size_t sz = pc.a.size();
  std::map<std::string, unsigned> index;
  for (size_t i = 0; i < sz; ++i) index.emplace(pc.a[i].key() + "#" + pc.b[i].key(), i);
  std::vector<std::vector<unsigned>> table(sz, std::vector<unsigned>(sz, 0));
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = 0; j < sz; ++j) {
      auto it = index.find((pc.a[i] * pc.a[j]).key() + "#" + (pc.b[i] * pc.b[j]).key());
      if (it == index.end())
        throw std::invalid_argument(
            "twist_equivalent_finite: closures not isomorphic as labeled groups");
      table[i][j] = static_cast<unsigned>(it->second);
    }
  std::vector<unsigned> inv(sz, 0);
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = 0; j < sz; ++j)
      if (table[i][j] == 0) inv[i] = static_cast<unsigned>(j);

  // Derived subgroup from all commutators, then the abelianization.
  std::vector<unsigned> comms;
  for (unsigned i = 0; i < sz; ++i)
    for (unsigned j = 0; j < sz; ++j) comms.push_back(table[table[i][j]][table[inv[i]][inv[j]]]);
  std::vector<unsigned> derived = subgroup_closure(table, std::move(comms));

  std::vector<unsigned> coset_of(sz, 0);  // element -> canonical coset rep
  for (unsigned g = 0; g < sz; ++g) {
    unsigned canon = g;
    for (unsigned d : derived) canon = std::min(canon, table[g][d]);
    coset_of[g] = canon;
  }
  std::vector<unsigned> canon_list;
  for (unsigned g = 0; g < sz; ++g)
    if (coset_of[g] == g) canon_list.push_back(g);
  std::vector<unsigned> coset_id(sz, 0);
  for (size_t a = 0; a < canon_list.size(); ++a) coset_id[canon_list[a]] = static_cast<unsigned>(a);
  const size_t asz = canon_list.size();
  std::vector<std::vector<unsigned>> atable(asz, std::vector<unsigned>(asz, 0));
  for (size_t x = 0; x < asz; ++x)
    for (size_t y = 0; y < asz; ++y)
      atable[x][y] = coset_id[coset_of[table[canon_list[x]][canon_list[y]]]];

  auto a_order = [&](unsigned a) {
    unsigned p = a, t = 1;
    while (p != 0) {
      p = atable[p][a];
      ++t;
    }
    return t;
  };
  unsigned exp_a = 1;
  for (unsigned a = 0; a < asz; ++a) exp_a = static_cast<unsigned>(std::lcm(exp_a, a_order(a)));

  // Generators of the abelianization: images of the generator pairs.
  std::vector<unsigned> agens;
  for (unsigned gi = 0; gi < rep1.generators.size(); ++gi) {
    auto it = index.find(rep1.generators[gi].key() + "#" + rep2.generators[gi].key());
    if (it == index.end())
      throw std::logic_error("twist_equivalent_finite: generator pair missing from closure");
    unsigned a = coset_id[coset_of[it->second]];
    if (std::find(agens.begin(), agens.end(), a) == agens.end()) agens.push_back(a);
  }

  // Enumerate degree-1 characters as exponent vectors chi: A -> Z/exp_a.
  std::vector<std::vector<unsigned>> characters;
  std::vector<unsigned> assignment(agens.size(), 0);
  auto try_assignment = [&]() {
    std::vector<int> expo(asz, -1);
    expo[0] = 0;
    std::vector<unsigned> frontier{0};
    for (size_t head = 0; head < frontier.size(); ++head) {
      for (size_t j = 0; j < agens.size(); ++j) {
        unsigned y = atable[frontier[head]][agens[j]];
        unsigned e = (static_cast<unsigned>(expo[frontier[head]]) + assignment[j]) % exp_a;
        if (expo[y] < 0) {
          expo[y] = static_cast<int>(e);
          frontier.push_back(y);
        } else if (static_cast<unsigned>(expo[y]) != e) {
          return;  // inconsistent with the group relations
        }
      }
    }
    for (size_t x = 0; x < asz; ++x)
      for (size_t y = 0; y < asz; ++y)
        if ((static_cast<unsigned>(expo[x]) + static_cast<unsigned>(expo[y])) % exp_a !=
            static_cast<unsigned>(expo[atable[x][y]]))
          return;
    std::vector<unsigned> chi(asz);
    for (size_t x = 0; x < asz; ++x) chi[x] = static_cast<unsigned>(expo[x]);
    if (std::find(characters.begin(), characters.end(), chi) == characters.end())
      characters.push_back(std::move(chi));
  };
  std::vector<unsigned> gen_orders;
  for (unsigned a : agens) gen_orders.push_back(a_order(a));
  // Iterate assignments in mixed-radix order; the trivial character comes first.
  while (true) {
    // assignment[j] ranges over multiples exp_a/o_j * t.
    try_assignment();
    size_t pos = agens.size();
    while (pos > 0) {
      unsigned step = exp_a / gen_orders[pos - 1];
      assignment[pos - 1] += step;
      if (assignment[pos - 1] < exp_a) break;
      assignment[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }

  const unsigned big_order = static_cast<unsigned>(std::lcm(rep1.N, exp_a));
  const CycQ zeta = CycQ::zeta(big_order);
  std::vector<CycQ> traces1, traces2;
  for (size_t g = 0; g < sz; ++g) {
    traces1.push_back(pc.a[g].trace().promoted(big_order));
    traces2.push_back(pc.b[g].trace().promoted(big_order));
  }
  for (const auto& chi : characters) {
    bool ok = true;
    for (size_t g = 0; g < sz && ok; ++g) {
      CycQ value = zeta.pow(Int(chi[coset_id[coset_of[g]]] * (big_order / exp_a)));
      ok = (traces2[g] == value * traces1[g]);
    }
    if (ok) {
      std::vector<CycQ> row;
      for (size_t g = 0; g < sz; ++g)
        row.push_back(zeta.pow(Int(chi[coset_id[coset_of[g]]] * (big_order / exp_a))));
      return row;
    }
  }
  return std::nullopt;
}

}  // namespace galrep

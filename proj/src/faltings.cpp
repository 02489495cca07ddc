#include "galrep/faltings.hpp"

#include <algorithm>
#include <map>

namespace galrep {

void FiniteGroup::finish(bool verify_axioms) {
  const size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("FiniteGroup: empty group");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("FiniteGroup: table is not square");
    for (unsigned v : row)
      if (v >= n) throw std::invalid_argument("FiniteGroup: table index out of range");
  }
  // Identity: the unique e with e*x = x*e = x.
  bool found = false;
  for (unsigned e = 0; e < n; ++e) {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("FiniteGroup: no identity element");
  inv_.assign(n, n);
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y)
      if (table_[x][y] == identity_ && table_[y][x] == identity_) inv_[x] = y;
    if (inv_[x] == n) throw std::invalid_argument("FiniteGroup: element without inverse");
  }
  if (verify_axioms && n <= 200) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("FiniteGroup: multiplication is not associative");
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<unsigned>> table) {
  if (labels.size() != table.size())
    throw std::invalid_argument("FiniteGroup: label count mismatch");
  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.finish(true);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<unsigned>>& generators) {
  if (generators.empty()) throw std::invalid_argument("FiniteGroup: no generators");
  const size_t deg = generators[0].size();
  for (const auto& p : generators) {
    if (p.size() != deg) throw std::invalid_argument("FiniteGroup: generator degree mismatch");
    std::vector<char> seen(deg, 0);
    for (unsigned v : p) {
      if (v >= deg || seen[v]) throw std::invalid_argument("FiniteGroup: not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<unsigned> id(deg);
  for (size_t i = 0; i < deg; ++i) id[i] = static_cast<unsigned>(i);
  std::vector<std::vector<unsigned>> elems{id};
  std::map<std::vector<unsigned>, unsigned> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gperm : generators) {
      std::vector<unsigned> next(deg);
      for (size_t i = 0; i < deg; ++i) next[i] = gperm[elems[head][i]];
      if (index.emplace(next, static_cast<unsigned>(elems.size())).second)
        elems.push_back(std::move(next));
      if (elems.size() > 100000)
        throw std::runtime_error("FiniteGroup: permutation closure too large");
    }
  }
  FiniteGroup g;
  const size_t n = elems.size();
  g.table_.assign(n, std::vector<unsigned>(n, 0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<unsigned> prod(deg);
      for (size_t i = 0; i < deg; ++i) prod[i] = elems[a][elems[b][i]];
      g.table_[a][b] = index.at(prod);
    }
  g.labels_.resize(n);
  for (size_t i = 0; i < n; ++i) g.labels_[i] = "g" + std::to_string(i);
  g.finish(false);  // associativity inherited from permutation composition
  return g;
}

std::vector<std::vector<unsigned>> conjugacy_classes(const FiniteGroup& g) {
  const size_t n = g.size();
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<unsigned>> classes;
  for (unsigned x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<unsigned> cls;
    std::vector<char> in(n, 0);
    for (unsigned h = 0; h < n; ++h) {
      unsigned y = g.mul(g.mul(h, x), g.inv(h));
      if (!in[y]) {
        in[y] = 1;
        cls.push_back(y);
        assigned[y] = 1;
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::string> frobenius_cover(const FiniteGroup& g, const PlaceTable& places) {
  auto classes = conjugacy_classes(g);
  std::vector<int> class_of(g.size(), -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (unsigned e : classes[c]) class_of[e] = static_cast<int>(c);
  for (const auto& [label, elem] : places.places)
    if (elem >= g.size())
      throw std::invalid_argument("frobenius_cover: place element index out of range");

  std::vector<char> covered(classes.size(), 0);
  std::vector<std::string> cover;
  for (;;) {
    // Largest uncovered class reachable by some place; ties by place order.
    int best_place = -1;
    size_t best_size = 0;
    for (size_t p = 0; p < places.places.size(); ++p) {
      size_t c = static_cast<size_t>(class_of[places.places[p].second]);
      if (covered[c]) continue;
      if (classes[c].size() > best_size) {
        best_size = classes[c].size();
        best_place = static_cast<int>(p);
      }
    }
    if (best_place < 0) break;
    size_t c = static_cast<size_t>(class_of[places.places[static_cast<size_t>(best_place)].second]);
    covered[c] = 1;
    cover.push_back(places.places[static_cast<size_t>(best_place)].first);
  }
  for (size_t c = 0; c < classes.size(); ++c) {
    if (!covered[c])
      throw std::runtime_error("frobenius_cover: class of element index " +
                               std::to_string(classes[c][0]) + " (" + g.label(classes[c][0]) +
                               ") is not covered by any place");
  }
  return cover;
}

namespace {

Int mod_reduce(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

std::vector<Int> mat_mul(const std::vector<Int>& a, const std::vector<Int>& b, unsigned n,
                         const Int& m) {
  std::vector<Int> c(static_cast<size_t>(n) * n, Int(0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const Int& aik = a[static_cast<size_t>(i) * n + k];
      if (aik == 0) continue;
      for (unsigned j = 0; j < n; ++j)
        c[static_cast<size_t>(i) * n + j] += aik * b[static_cast<size_t>(k) * n + j];
    }
  for (Int& x : c) x = mod_reduce(x, m);
  return c;
}

Int mat_det_mod(std::vector<Int> a, unsigned n, const Int& m) {
  // Fraction-free (Bareiss) determinant over Z, reduced at the end; fine for
  // the small dimensions used here.
  Int det(1);
  std::vector<Int> w = std::move(a);
  Int prev(1);
  int sign = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && w[static_cast<size_t>(pivot) * n + col] == 0) ++pivot;
    if (pivot == n) return Int(0);
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j)
        std::swap(w[static_cast<size_t>(pivot) * n + j], w[static_cast<size_t>(col) * n + j]);
      sign = -sign;
    }
    for (unsigned i = col + 1; i < n; ++i) {
      for (unsigned j = col + 1; j < n; ++j) {
        Int v = w[static_cast<size_t>(i) * n + j] * w[static_cast<size_t>(col) * n + col] -
                w[static_cast<size_t>(i) * n + col] * w[static_cast<size_t>(col) * n + j];
        w[static_cast<size_t>(i) * n + j] = v / prev;
      }
      w[static_cast<size_t>(i) * n + col] = 0;
    }
    prev = w[static_cast<size_t>(col) * n + col];
  }
  det = sign * w[static_cast<size_t>(n - 1) * n + (n - 1)];
  return mod_reduce(det, m);
}

}  // namespace

void ModRep::validate(const FiniteGroup& g) const {
  if (n == 0) throw std::invalid_argument("ModRep: dimension must be positive");
  if (modulus < 2) throw std::invalid_argument("ModRep: modulus must be >= 2");
  if (mats.size() != g.size()) throw std::invalid_argument("ModRep: one matrix per group element");
  for (const auto& m : mats) {
    if (m.size() != static_cast<size_t>(n) * n)
      throw std::invalid_argument("ModRep: matrix shape mismatch");
    for (const Int& x : m)
      if (x < 0 || x >= modulus) throw std::invalid_argument("ModRep: entry out of residue range");
  }
  for (const auto& m : mats) {
    Int d = mat_det_mod(m, n, modulus);
    if (gcd(d, modulus) != 1) throw std::invalid_argument("ModRep: non-invertible image");
  }
  if (g.size() <= 200) {
    for (unsigned a = 0; a < g.size(); ++a)
      for (unsigned b = 0; b < g.size(); ++b)
        if (mat_mul(mats[a], mats[b], n, modulus) != mats[g.mul(a, b)])
          throw std::invalid_argument("ModRep: family is not multiplicative");
  }
}

Int ModRep::trace_of(unsigned element) const {
  Int t(0);
  for (unsigned i = 0; i < n; ++i) t += mats[element][static_cast<size_t>(i) * n + i];
  return mod_reduce(t, modulus);
}

std::vector<std::vector<Int>> howell_form(std::vector<std::vector<Int>> rows, const Int& modulus) {
  if (rows.empty()) return rows;
  const size_t ncols = rows[0].size();
  // Prime base of the (prime power) modulus, for valuations.
  Int p = modulus;
  for (Int d(2); d * d <= p; ++d) {
    if (p % d == 0) {
      p = d;
      break;
    }
  }
  auto valuation = [&](Int x) {
    unsigned v = 0;
    while (x != 0 && x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  for (auto& r : rows)
    for (Int& x : r) x = mod_reduce(x, modulus);

  std::vector<std::vector<Int>> result;
  std::vector<std::vector<Int>> work = std::move(rows);
  for (size_t col = 0; col < ncols; ++col) {
    // Pick the row with minimal valuation at this column among rows whose
    // leading nonzero entry is at this column or later.
    int best = -1;
    unsigned best_val = 0;
    for (size_t r = 0; r < work.size(); ++r) {
      if (work[r][col] == 0) continue;
      bool leading = true;
      for (size_t j = 0; j < col && leading; ++j) leading = work[r][j] == 0;
      if (!leading) continue;
      unsigned v = valuation(work[r][col]);
      if (best < 0 || v < best_val) {
        best = static_cast<int>(r);
        best_val = v;
      }
    }
    if (best < 0) continue;
    std::vector<Int> pivot_row = work[static_cast<size_t>(best)];
    work.erase(work.begin() + best);
    // Normalize: divide by the unit part so the pivot becomes p^v.
    Int pivot = pivot_row[col];
    Int pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), best_val);
    Int unit = pivot / pv;
    Int unit_inv;
    if (mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw std::logic_error("howell_form: unit inversion failed");
    for (Int& x : pivot_row) x = mod_reduce(x * unit_inv, modulus);
    // Eliminate this column from the remaining rows.
    for (auto& r : work) {
      if (r[col] == 0) continue;
      Int factor = r[col] / pv;
      for (size_t j = 0; j < ncols; ++j) r[j] = mod_reduce(r[j] - factor * pivot_row[j], modulus);
    }
    // The annihilator multiple keeps the span closed (Howell condition).
    if (best_val > 0) {
      Int ann = modulus / pv;
      std::vector<Int> extra(ncols);
      bool nonzero = false;
      for (size_t j = 0; j < ncols; ++j) {
        extra[j] = mod_reduce(ann * pivot_row[j], modulus);
        nonzero = nonzero || extra[j] != 0;
      }
      if (nonzero) work.push_back(std::move(extra));
    }
    result.push_back(std::move(pivot_row));
  }
  // Reduce entries above each pivot for a canonical form.
  for (size_t r = result.size(); r-- > 0;) {
    size_t col = 0;
    while (col < ncols && result[r][col] == 0) ++col;
    if (col == ncols) continue;
    Int pv = result[r][col];
    for (size_t up = 0; up < r; ++up) {
      Int q = result[up][col] / pv;
      if (q != 0)
        for (size_t j = 0; j < ncols; ++j)
          result[up][j] = mod_reduce(result[up][j] - q * result[r][j], modulus);
    }
  }
  return result;
}

TraceDeterminationReport trace_determination_check(const FiniteGroup& g, const ModRep& rho1,
                                                   const ModRep& rho2,
                                                   const std::vector<std::string>& t_labels,
                                                   const PlaceTable& places,
                                                   bool single_representative) {
  if (rho1.modulus != rho2.modulus)
    throw std::invalid_argument("trace_determination_check: modulus mismatch");
  if (rho1.mats.size() != g.size() || rho2.mats.size() != g.size())
    throw std::invalid_argument("trace_determination_check: group size mismatch");
  std::map<std::string, unsigned> place_elem;
  for (const auto& [label, elem] : places.places) place_elem.emplace(label, elem);
  std::vector<unsigned> t_elems;
  for (const std::string& l : t_labels) {
    auto it = place_elem.find(l);
    if (it == place_elem.end())
      throw std::invalid_argument("trace_determination_check: unknown place label " + l);
    t_elems.push_back(it->second);
  }
  auto classes = conjugacy_classes(g);
  std::vector<int> class_of(g.size(), -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (unsigned e : classes[c]) class_of[e] = static_cast<int>(c);
  std::vector<char> class_met(classes.size(), 0);
  for (unsigned e : t_elems) class_met[static_cast<size_t>(class_of[e])] = 1;
  for (char met : class_met)
    if (!met)
      throw std::invalid_argument(
          "trace_determination_check: T does not cover every conjugacy class");

  TraceDeterminationReport rep;
  rep.traces_agree_on_t = true;
  for (size_t i = 0; i < t_elems.size(); ++i) {
    if (rho1.trace_of(t_elems[i]) != rho2.trace_of(t_elems[i])) {
      rep.traces_agree_on_t = false;
      rep.distinguishing_place = t_labels[i];
      break;
    }
  }
  rep.traces_agree_globally = true;
  for (unsigned e = 0; e < g.size(); ++e) {
    if (rho1.trace_of(e) != rho2.trace_of(e)) {
      rep.traces_agree_globally = false;
      break;
    }
  }
  rep.determination_holds = !rep.traces_agree_on_t || rep.traces_agree_globally;

  // Module-generation condition: span of rho1(g) (+) rho2(g) over the classes
  // meeting T (or only the T representatives) against the span over all of G.
  auto vec_of = [&](unsigned e) {
    std::vector<Int> v;
    v.reserve(rho1.mats[e].size() + rho2.mats[e].size());
    v.insert(v.end(), rho1.mats[e].begin(), rho1.mats[e].end());
    v.insert(v.end(), rho2.mats[e].begin(), rho2.mats[e].end());
    return v;
  };
  std::vector<std::vector<Int>> span_t, span_all;
  if (single_representative) {
    for (unsigned e : t_elems) span_t.push_back(vec_of(e));
  } else {
    for (size_t c = 0; c < classes.size(); ++c)
      if (class_met[c])
        for (unsigned e : classes[c]) span_t.push_back(vec_of(e));
  }
  for (unsigned e = 0; e < g.size(); ++e) span_all.push_back(vec_of(e));
  rep.spans_equal =
      howell_form(std::move(span_t), rho1.modulus) == howell_form(std::move(span_all), rho1.modulus);
  return rep;
}

}  // namespace galrep

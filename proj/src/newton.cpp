#include "galrep/newton.hpp"

namespace galrep {

unsigned Composition::degree() const {
  unsigned d = 0;
  for (size_t i = 0; i < parts.size(); ++i) d += static_cast<unsigned>(i + 1) * parts[i];
  return d;
}

unsigned Composition::part_sum() const {
  unsigned s = 0;
  for (unsigned r : parts) s += r;
  return s;
}

namespace {

void enumerate(unsigned n, unsigned pos, unsigned remaining, std::vector<unsigned>& cur,
               std::vector<Composition>& out) {
  if (pos == n) {
    if (remaining == 0) out.push_back(Composition{cur});
    return;
  }
  unsigned weight = pos + 1;
  for (unsigned r = remaining / weight + 1; r-- > 0;) {
    cur[pos] = r;
    enumerate(n, pos + 1, remaining - r * weight, cur, out);
  }
  cur[pos] = 0;
}

Int factorial(unsigned k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

Int binomial(unsigned n, unsigned k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

std::vector<Composition> compositions(unsigned n, unsigned m) {
  if (n < 1 || m < 1) throw std::invalid_argument("compositions: n, m must be positive");
  std::vector<Composition> out;
  std::vector<unsigned> cur(n, 0);
  enumerate(n, 0, m, cur, out);
  return out;
}

Int newton_coefficient(const Composition& r) {
  unsigned m = r.degree();
  if (m == 0) throw std::invalid_argument("newton_coefficient: all-zero composition");
  unsigned s = r.part_sum();
  Int num = Int(m) * factorial(s - 1);
  Int den(1);
  for (unsigned ri : r.parts) den *= factorial(ri);
  Int q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("newton_coefficient: non-integral ratio");
  if ((m + s) % 2 != 0) q = -q;
  return q;
}

CycQ m_trace_from_charpoly(const CharPoly& p, unsigned m) {
  if (m < 1) throw std::invalid_argument("m_trace_from_charpoly: m must be positive");
  unsigned n = p.degree();
  unsigned N = p.order();
  if (n == 0) return CycQ::zero(N);
  CycQ total = CycQ::zero(N);
  for (const Composition& r : compositions(n, m)) {
    CycQ term = CycQ::from_rational(Rat(newton_coefficient(r)), N);
    bool zero = false;
    for (size_t i = 0; i < r.parts.size() && !zero; ++i) {
      if (r.parts[i] == 0) continue;
      CycQ e = p.elementary_symmetric(static_cast<unsigned>(i + 1));
      if (e.is_zero()) {
        zero = true;
        break;
      }
      term *= e.pow(Int(r.parts[i]));
    }
    if (!zero) total += term;
  }
  return total;
}

Int dim_lambda(unsigned n, const Composition& r) {
  if (r.size() != n) throw std::invalid_argument("dim_lambda: parts length must equal n");
  Int d(1);
  for (size_t i = 0; i < r.parts.size(); ++i) {
    Int b = binomial(n, static_cast<unsigned>(i + 1));
    for (unsigned k = 0; k < r.parts[i]; ++k) d *= b;
  }
  return d;
}

Int d_m(unsigned n, unsigned m) {
  Int total(0);
  for (const Composition& r : compositions(n, m)) {
    Int d = dim_lambda(n, r);
    total += d * d;
  }
  return 2 * total;
}

}  // namespace galrep

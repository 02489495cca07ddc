#include "galrep/weil.hpp"

#include <algorithm>

namespace galrep {

namespace {

Int pow_ui(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int binomial(unsigned n, unsigned k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

int zdeg(const ZPoly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

// Divide p by the monic divisor if the division is exact; nullopt otherwise.
std::optional<ZPoly> exact_div(const ZPoly& p, const ZPoly& div) {
  int dp = zdeg(p), dd = zdeg(div);
  if (dp < dd) return std::nullopt;
  ZPoly rem = p;
  ZPoly quot(static_cast<size_t>(dp - dd) + 1, Int(0));
  for (int i = dp; i >= dd; --i) {
    Int c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= c * div[static_cast<size_t>(j)];
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  quot.resize(static_cast<size_t>(dp - dd) + 1);
  return quot;
}

// ---- rational polynomials for the Sturm chain ----

using QPoly = std::vector<Rat>;

int qdeg(const QPoly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

QPoly qrem(QPoly a, const QPoly& b) {
  int db = qdeg(b);
  int da = qdeg(a);
  while (da >= db) {
    Rat s = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
    for (int j = 0; j <= db; ++j) a[static_cast<size_t>(da - db + j)] -= s * b[static_cast<size_t>(j)];
    a[static_cast<size_t>(da)] = 0;
    da = qdeg(a);
  }
  a.resize(static_cast<size_t>(std::max(da, 0)) + 1);
  return a;
}

QPoly qderiv(const QPoly& p) {
  if (p.size() <= 1) return {Rat(0)};
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = Rat(static_cast<unsigned long>(i)) * p[i];
  return d;
}

QPoly qgcd(QPoly a, QPoly b) {
  while (qdeg(b) >= 0) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
    if (qdeg(b) < 0) break;
  }
  return a;
}

QPoly qdiv_exact(const QPoly& a, const QPoly& b) {
  int da = qdeg(a), db = qdeg(b);
  QPoly rem = a;
  QPoly quot(static_cast<size_t>(da - db) + 1, Rat(0));
  for (int i = da; i >= db; --i) {
    Rat c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rat s = c / b[static_cast<size_t>(db)];
    quot[static_cast<size_t>(i - db)] = s;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= s * b[static_cast<size_t>(j)];
  }
  return quot;
}

// Value A + B sqrt(Q), Q a positive non-square integer.
struct QuadVal {
  Rat a, b;
};

int quad_sign(const QuadVal& v, const Int& Q) {
  int sa = sgn(v.a), sb = sgn(v.b);
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  Rat lhs = v.a * v.a;
  Rat rhs = v.b * v.b * Rat(Q);
  if (sa > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

// Evaluate p at eps * 2 sqrt(Q), eps = +-1, as A + B sqrt(Q).
QuadVal eval_at_twice_sqrt(const QPoly& p, const Int& Q, int eps) {
  QuadVal v{Rat(0), Rat(0)};
  for (size_t i = p.size(); i-- > 0;) {
    // v = v * (eps 2 sqrt(Q)) + c_i
    Rat na = Rat(2 * eps) * v.b * Rat(Q);
    Rat nb = Rat(2 * eps) * v.a;
    v.a = na + p[i];
    v.b = nb;
  }
  return v;
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Number of distinct real roots of the squarefree polynomial in the open
// interval (-2 sqrt(Q), 2 sqrt(Q)); endpoints must not be roots.
int sturm_count_in_interval(const QPoly& h, const Int& Q, bool q_square, const Int& s) {
  std::vector<QPoly> chain;
  chain.push_back(h);
  chain.push_back(qderiv(h));
  while (qdeg(chain.back()) > 0) {
    QPoly r = qrem(chain[chain.size() - 2], chain.back());
    if (qdeg(r) < 0) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> lo, hi;
  for (const QPoly& p : chain) {
    if (q_square) {
      Rat left(0), right(0);
      Rat xl = Rat(-2) * Rat(s), xr = Rat(2) * Rat(s);
      for (size_t i = p.size(); i-- > 0;) {
        left = left * xl + p[i];
        right = right * xr + p[i];
      }
      lo.push_back(sgn(left));
      hi.push_back(sgn(right));
    } else {
      lo.push_back(quad_sign(eval_at_twice_sqrt(p, Q, -1), Q));
      hi.push_back(quad_sign(eval_at_twice_sqrt(p, Q, +1), Q));
    }
  }
  return sign_variations(lo) - sign_variations(hi);
}

}  // namespace

bool is_prime_power(const Int& q) {
  if (q < 2) return false;
  Int rem = q;
  for (Int p(2); p * p <= rem; ++p) {
    if (rem % p == 0) {
      while (rem % p == 0) rem /= p;
      return rem == 1;
    }
  }
  return true;  // q itself prime
}

bool is_weil_poly(const ZPoly& coeffs, const Int& q, unsigned w) {
  int d = zdeg(coeffs);
  if (d < 0 || coeffs[static_cast<size_t>(d)] != 1)
    throw std::invalid_argument("is_weil_poly: polynomial must be monic");
  if (!is_prime_power(q)) throw std::invalid_argument("is_weil_poly: q must be a prime power");
  const Int Q = pow_ui(q, w);
  const bool q_square = mpz_perfect_square_p(Q.get_mpz_t()) != 0;
  const Int s = isqrt(Q);

  ZPoly p(coeffs.begin(), coeffs.begin() + d + 1);
  // Strip real roots on the circle: +-sqrt(Q).
  bool stripped = true;
  while (stripped && zdeg(p) > 0) {
    stripped = false;
    ZPoly circle{-Q, Int(0), Int(1)};  // x^2 - Q
    if (auto div = exact_div(p, circle)) {
      p = *div;
      stripped = true;
      continue;
    }
    if (q_square) {
      ZPoly minus{-s, Int(1)}, plus{s, Int(1)};
      if (auto div = exact_div(p, minus)) {
        p = *div;
        stripped = true;
        continue;
      }
      if (auto div = exact_div(p, plus)) {
        p = *div;
        stripped = true;
      }
    }
  }
  int d2 = zdeg(p);
  if (d2 == 0) return true;
  if (d2 % 2 != 0) return false;
  const unsigned k = static_cast<unsigned>(d2) / 2;

  // Self-inversive pairing: roots closed under alpha -> Q/alpha forces
  // a_i Q^i = a_0 a_{d-i}; with the real roots stripped, a_0 = +Q^k.
  if (p[0] != pow_ui(Q, k)) return false;
  for (int i = 0; i <= d2; ++i) {
    if (p[static_cast<size_t>(i)] * pow_ui(Q, static_cast<unsigned>(i)) !=
        p[0] * p[static_cast<size_t>(d2 - i)])
      return false;
  }

  // Trace substitution p(x) = x^k h(x + Q/x).
  ZPoly residual = p;
  ZPoly h(k + 1, Int(0));
  for (unsigned j = k + 1; j-- > 0;) {
    Int c = residual[k + j];
    h[j] = c;
    if (c != 0) {
      // subtract c * x^{k-j} (x^2 + Q)^j
      ZPoly term(static_cast<size_t>(k + j) + 1, Int(0));
      for (unsigned t = 0; t <= j; ++t)
        term[k - j + 2 * t] = binomial(j, t) * pow_ui(Q, j - t);
      for (size_t i = 0; i < term.size(); ++i) residual[i] -= c * term[i];
    }
  }
  for (const Int& r : residual)
    if (r != 0) return false;

  // Squarefree part of h over Q.
  QPoly hq(h.size());
  for (size_t i = 0; i < h.size(); ++i) hq[i] = Rat(h[i]);
  QPoly g = qgcd(hq, qderiv(hq));
  QPoly h0 = qdeg(g) > 0 ? qdiv_exact(hq, g) : hq;

  // Strip endpoint roots y = +-2 sqrt(Q).
  if (q_square) {
    for (int eps : {-1, 1}) {
      Rat endpoint = Rat(2 * eps) * Rat(s);
      Rat val(0);
      for (size_t i = h0.size(); i-- > 0;) val = val * endpoint + h0[i];
      if (val == 0) {
        QPoly lin{-endpoint, Rat(1)};
        h0 = qdiv_exact(h0, lin);
      }
    }
  } else {
    QPoly quad{Rat(-4 * Q), Rat(0), Rat(1)};  // y^2 - 4Q
    QPoly r = qrem(h0, quad);
    if (qdeg(r) < 0) h0 = qdiv_exact(h0, quad);
  }
  int dh = qdeg(h0);
  if (dh <= 0) return true;
  return sturm_count_in_interval(h0, Q, q_square, s) == dh;
}

namespace {

Int coeff_bound(unsigned d, unsigned i, const Int& Q) {
  // |a_{d-i}| <= C(d,i) Q^{i/2}
  Int b = binomial(d, i);
  return isqrt(b * b * pow_ui(Q, i));
}

}  // namespace

std::vector<WeilPoly> enumerate_weil(const Int& q, unsigned w, unsigned d, uint64_t budget) {
  if (d < 1) throw std::invalid_argument("enumerate_weil: d must be >= 1");
  if (!is_prime_power(q)) throw std::invalid_argument("enumerate_weil: q must be a prime power");
  const Int Q = pow_ui(q, w);
  const bool q_square = mpz_perfect_square_p(Q.get_mpz_t()) != 0;
  const Int s = isqrt(Q);

  // |constant term| = Q^{d/2}; for odd d this is integral only when Q is a
  // perfect square, otherwise no polynomial qualifies.
  if (d % 2 == 1 && !q_square) return {};

  const unsigned k = d / 2;  // number of free high coefficients for sign +1
  Int a0_abs = (d % 2 == 0) ? pow_ui(Q, k) : pow_ui(s, d);

  std::vector<Int> bounds(k + 1, Int(0));
  for (unsigned i = 1; i <= k; ++i) bounds[i] = coeff_bound(d, i, Q);

  // Budget check across both constant-term signs.
  Int candidates(0);
  for (int eps : {1, -1}) {
    unsigned free_top = (d % 2 == 0 && eps == -1) ? k - 1 : k;
    if (d % 2 == 1) free_top = k;
    Int c(1);
    for (unsigned i = 1; i <= free_top; ++i) c *= 2 * bounds[i] + 1;
    candidates += c;
  }
  if (candidates > Int(static_cast<unsigned long>(budget)))
    throw WeilBudgetExceeded(candidates, budget);

  std::vector<WeilPoly> out;
  for (int eps : {1, -1}) {
    unsigned free_top = k;
    bool middle_zero = false;
    if (d % 2 == 0 && eps == -1) {
      free_top = k - 1;
      middle_zero = true;  // the pairing forces a_{d/2} = 0 when a_0 = -Q^{d/2}
    }
    std::vector<Int> free_coeffs(free_top + 1, Int(0));  // index i -> a_{d-i}
    for (unsigned i = 1; i <= free_top; ++i) free_coeffs[i] = -bounds[i];
    while (true) {
      ZPoly p(d + 1, Int(0));
      p[d] = 1;
      p[0] = eps * a0_abs;
      for (unsigned i = 1; i <= free_top; ++i) p[d - i] = free_coeffs[i];
      if (middle_zero) p[k] = 0;
      bool ok = true;
      // Derived low coefficients from the pairing a_i = eps Q^{d/2-i} a_{d-i}.
      for (unsigned i = free_top + (middle_zero ? 2 : 1); i <= d - 1; ++i) {
        // i indexes a_{d-i}, i > d/2
        unsigned low = d - i;
        Int factor = (d % 2 == 0) ? pow_ui(Q, k - low) : pow_ui(s, d - 2 * low);
        Int value = eps * factor * p[d - low];
        if (abs(value) > coeff_bound(d, i, Q)) {
          ok = false;
          break;
        }
        p[low] = value;
      }
      if (ok && is_weil_poly(p, q, w)) out.push_back(WeilPoly{q, w, d, p});
      // Advance the odometer.
      unsigned pos = free_top;
      while (pos >= 1) {
        if (free_coeffs[pos] < bounds[pos]) {
          ++free_coeffs[pos];
          break;
        }
        free_coeffs[pos] = -bounds[pos];
        --pos;
      }
      if (pos == 0 || free_top == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const WeilPoly& a, const WeilPoly& b) {
    for (size_t i = a.coeffs.size(); i-- > 0;) {
      if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
    }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const WeilPoly& a, const WeilPoly& b) { return a.coeffs == b.coeffs; }),
            out.end());
  return out;
}

uint64_t weil_count(const Int& q, unsigned w, unsigned d, uint64_t budget) {
  return static_cast<uint64_t>(enumerate_weil(q, w, d, budget).size());
}

}  // namespace galrep

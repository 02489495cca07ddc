#include "galrep/local_bound.hpp"

#include <sstream>

namespace galrep {

void LocalFieldParams::validate() const {
  if (e < 1 || f < 1) throw std::invalid_argument("LocalFieldParams: e, f must be >= 1");
  if (ell < 2 || mpz_probab_prime_p(ell.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("LocalFieldParams: ell must be prime");
}

namespace {

// phi(ell^t) = ell^(t-1) (ell - 1) for t >= 1; phi(1) = 1.
Int phi_prime_power(const Int& ell, unsigned t) {
  if (t == 0) return Int(1);
  Int p(1);
  for (unsigned i = 0; i + 1 < t; ++i) p *= ell;
  return p * (ell - 1);
}

unsigned max_t_with_phi_at_most(const Int& ell, const Int& bound) {
  unsigned t = 0;
  while (phi_prime_power(ell, t + 1) <= bound) ++t;
  return t;
}

Int pow_ui(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Int roots_of_unity_bound(const LocalFieldParams& field) {
  field.validate();
  unsigned t = 0;
  while (phi_prime_power(field.ell, t + 1) <= field.e &&
         field.e % phi_prime_power(field.ell, t + 1) == 0)
    ++t;
  return (pow_ui(field.ell, field.f) - 1) * pow_ui(field.ell, t);
}

FactoredInt paper_m_bound(unsigned n, const LocalFieldParams& field, bool factor) {
  field.validate();
  if (n < 1) throw std::invalid_argument("paper_m_bound: n must be >= 1");
  const Int bound = Int(n) * n * field.e * field.f;
  // The defining set is { u ell^t : ord_u(ell) phi(ell^t) <= bound }.
  // Its lcm collapses to ell^{t_max} * lcm_{1 <= j <= bound} (ell^j - 1):
  // every admissible u divides ell^{ord_u(ell)} - 1, ell^j - 1 itself is
  // admissible with t = 0, and ell^{t_max} is admissible with u = 1.
  const unsigned t_max = max_t_with_phi_at_most(field.ell, bound);
  Int value = pow_ui(field.ell, t_max);
  Int acc(1);
  Int ell_pow(1);
  for (Int j(1); j <= bound; ++j) {
    ell_pow *= field.ell;
    acc = lcm(acc, Int(ell_pow - 1));
  }
  value *= acc;
  if (!factor) return FactoredInt{value, {}, false};
  FactoredInt out = factor_integer(value);
  out.value = value;
  return out;
}

namespace {

Int pollard_rho(const Int& n, unsigned long max_iter) {
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEul);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Int x = rng.get_z_range(n - 2) + 2;
    Int y = x;
    Int c = rng.get_z_range(n - 1) + 1;
    Int d(1);
    for (unsigned long i = 0; i < max_iter && d == 1; ++i) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(Int(x - y), n);
    }
    if (d != 1 && d != n) return d;
  }
  return Int(0);  // gave up
}

void factor_into(const Int& n, std::map<Int, unsigned>& out, bool& complete) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n, 60000);
  if (d == 0) {
    ++out[n];  // unfactored composite residual
    complete = false;
    return;
  }
  factor_into(d, out, complete);
  factor_into(Int(n / d), out, complete);
}

}  // namespace

FactoredInt factor_integer(const Int& n) {
  if (n < 1) throw std::invalid_argument("factor_integer: n must be positive");
  FactoredInt out;
  out.value = n;
  Int rem = n;
  for (unsigned long p = 2; p < 100000 && Int(p) * p <= rem; p += (p == 2 ? 1 : 2)) {
    while (rem % p == 0) {
      ++out.factors[Int(p)];
      rem /= p;
    }
  }
  factor_into(rem, out.factors, out.fully_factored);
  return out;
}

std::string FactoredInt::factored_str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    os << p.get_str();
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

}  // namespace galrep

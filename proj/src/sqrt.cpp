#include "padic/sqrt.hpp"

namespace padic {

bool is_quadratic_residue(const mpz_class& a, long p) {
  mpz_class pz(p);
  return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t()) == 1;
}

mpz_class sqrt_mod_prime(const mpz_class& a, long p) {
  mpz_class pz(p);
  mpz_class am = a % pz;
  if (am < 0) am += pz;
  if (am == 0) return 0;
  if (!is_quadratic_residue(am, p)) throw Error("sqrt_mod_prime: non-residue");
  if (p % 4 == 3) {
    mpz_class e = (pz + 1) / 4, r;
    mpz_powm(r.get_mpz_t(), am.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
    return r;
  }
  // Tonelli-Shanks for p = 1 mod 4.
  mpz_class q = pz - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), pz.get_mpz_t()) != -1) z += 1;
  mpz_class c, t, r, e = (q + 1) / 2;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
  mpz_powm(t.get_mpz_t(), am.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
  mpz_powm(r.get_mpz_t(), am.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    mpz_class tt = t;
    unsigned long i = 0;
    while (tt != 1) {
      tt = (tt * tt) % pz;
      ++i;
      if (i == m) throw Error("sqrt_mod_prime: lost (p not prime?)");
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % pz;
    m = i;
    c = (b * b) % pz;
    t = (t * c) % pz;
    r = (r * b) % pz;
  }
  return r;
}

namespace {

// Lift s0^2 = u (mod p) to s^2 = u (mod p^rel) by Newton steps, p odd.
mpz_class hensel_lift_odd(const mpz_class& u, long p, int rel, const mpz_class& s0) {
  mpz_class s = s0;
  long k = 1;
  while (k < rel) {
    k = std::min<long>(2 * k, rel);
    mpz_class mod = pow_of(p, k);
    mpz_class two_s_inv;
    mpz_class two_s = (2 * s) % mod;
    mpz_invert(two_s_inv.get_mpz_t(), two_s.get_mpz_t(), mod.get_mpz_t());
    s = (s - (s * s - u) * two_s_inv) % mod;
    if (s < 0) s += mod;
  }
  return s;
}

// Lift a dyadic root of u = 1 (mod 8) to s^2 = u (mod 2^rel), bit by bit.
mpz_class hensel_lift_two(const mpz_class& u, int rel) {
  mpz_class s = 1;
  for (int k = 3; k < rel; ++k) {
    mpz_class mod = pow_of(2, k + 1);
    mpz_class r = (s * s - u) % mod;
    if (r < 0) r += mod;
    if (r != 0) s += pow_of(2, k - 1);
  }
  return s;
}

}  // namespace

SqrtResult padic_sqrt(const PadicNumber& a) {
  SqrtResult out;
  if (a.is_exact_zero()) {
    out.exists = true;
    out.canonical = a;
    out.negated = a;
    return out;
  }
  if (a.is_zero_at_precision())
    throw ZeroAtPrecision("padic_sqrt: radicand is zero at working precision");

  const long p = a.prime();
  const long gamma = a.valuation();

  if (gamma % 2 != 0) {
    out.failure = SqrtFailure::OddValuation;
    out.detail = "valuation odd";
    return out;
  }

  const mpz_class& u = a.unit();
  const int rel = a.rel_precision();

  if (p == 2) {
    if (rel < 3)
      throw PrecisionExhausted("padic_sqrt: need >= 3 dyadic digits to decide");
    long u_mod8 = mpz_fdiv_ui(u.get_mpz_t(), 8);
    if (u_mod8 != 1) {
      out.failure = SqrtFailure::NonResidue;
      out.detail = "dyadic digits a1, a2 not both zero (unit is " +
                   std::to_string(u_mod8) + " mod 8)";
      return out;
    }
    mpz_class s = hensel_lift_two(u, rel);
    int root_rel = rel - 1;  // dyadic roots are determined one digit short
    if (mpz_fdiv_ui(s.get_mpz_t(), 4) != 1) s = pow_of(2, rel) - s;
    PadicNumber r = PadicNumber::from_unit(p, gamma / 2, s, root_rel,
                                           {a.precision_cap()});
    out.exists = true;
    out.canonical = r;
    out.negated = -r;
    return out;
  }

  long a0 = mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(p));
  if (!is_quadratic_residue(mpz_class(a0), p)) {
    out.failure = SqrtFailure::NonResidue;
    out.detail = "leading digit " + std::to_string(a0) +
                 " is not a quadratic residue modulo " + std::to_string(p);
    return out;
  }

  mpz_class s0 = sqrt_mod_prime(mpz_class(a0), p);
  mpz_class s = hensel_lift_odd(u, p, rel, s0);
  long lead = mpz_fdiv_ui(s.get_mpz_t(), static_cast<unsigned long>(p));
  if (lead > (p - 1) / 2) s = pow_of(p, rel) - s;
  PadicNumber r =
      PadicNumber::from_unit(p, gamma / 2, s, rel, {a.precision_cap()});
  out.exists = true;
  out.canonical = r;
  out.negated = -r;
  return out;
}

}  // namespace padic

#pragma once

#include <optional>
#include <string>

#include "padic/padic_number.hpp"

namespace padic {

enum class SqrtFailure { None, OddValuation, NonResidue };

/// Outcome of a square-root extraction in Q_p. Nonexistence is an ordinary
/// result, not an error: the failing condition is recorded.
struct SqrtResult {
  bool exists = false;
  SqrtFailure failure = SqrtFailure::None;
  std::string detail;  // e.g. "valuation odd"
  // For odd p the canonical root has leading digit in {1,...,(p-1)/2};
  // for p = 2 it is congruent to 1 mod 4. `negated` is its negative.
  std::optional<PadicNumber> canonical;
  std::optional<PadicNumber> negated;
};

/// Square roots of `a` via digit-by-digit lifting of a mod-p root.
/// Existence criteria: the valuation must be even, and the leading digit a
/// quadratic residue mod p (for p = 2, additionally a1 = a2 = 0, i.e. the
/// unit part must be 1 mod 8). Exact zero yields the root 0.
SqrtResult padic_sqrt(const PadicNumber& a);

/// Euler-criterion residue test; `a` must be a unit mod the odd prime p.
bool is_quadratic_residue(const mpz_class& a, long p);

/// Tonelli-Shanks square root of a residue modulo an odd prime.
mpz_class sqrt_mod_prime(const mpz_class& a, long p);

}  // namespace padic

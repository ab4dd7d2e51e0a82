#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/errors.hpp"

namespace padic {

/// Working-precision configuration. `digits` is the cap K on relative
/// precision: every nonzero value carries its unit part modulo p^K at most.
struct PrecisionConfig {
  int digits = 64;

  void validate() const {
    if (digits < 8) throw Error("precision cap K must be at least 8");
  }
};

mpz_class pow_of(long prime, long exponent);  // p^e for e >= 0

/// An element of Q_p tracked at capped relative precision.
///
/// A nonzero value is stored in canonical form x = p^valuation * unit with
/// unit coprime to p, the unit known modulo p^rel_precision
/// (1 <= rel_precision <= K). The norm is |x|_p = p^(-valuation), read off
/// the representation exactly; no floating point is involved anywhere.
///
/// Additive cancellation reduces the relative precision of the result by the
/// number of leading digits lost. A value whose digits cancel to the full
/// known precision degrades to a "zero at precision" state that remembers
/// only the absolute bound m with |x|_p <= p^(-m); norm queries on such a
/// value fail loudly instead of fabricating a valuation. Exact zero (e.g.
/// the image of the rational 0) is a separate state.
///
/// Values are immutable after construction and all operations are pure.
class PadicNumber {
 public:
  // --- factories ---------------------------------------------------------
  static PadicNumber from_rational(const mpz_class& num, const mpz_class& den,
                                   long prime, const PrecisionConfig& cfg = {});
  static PadicNumber from_integer(long value, long prime,
                                  const PrecisionConfig& cfg = {});
  static PadicNumber zero(long prime, const PrecisionConfig& cfg = {});
  /// p^exponent, exact to the precision cap (unit = 1).
  static PadicNumber prime_power(long prime, long exponent,
                                 const PrecisionConfig& cfg = {});
  /// Assemble from parts; `unit` is reduced mod p^rel_precision and must be
  /// coprime to p after reduction.
  static PadicNumber from_unit(long prime, long valuation, mpz_class unit,
                               int rel_precision, const PrecisionConfig& cfg = {});
  /// Zero known only up to |x|_p <= p^(-bound).
  static PadicNumber zero_at_precision(long prime, long bound,
                                       const PrecisionConfig& cfg = {});

  // --- inspection --------------------------------------------------------
  long prime() const { return prime_; }
  int precision_cap() const { return cap_; }

  bool is_zero() const { return kind_ != Kind::Unit; }
  bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
  bool is_zero_at_precision() const { return kind_ == Kind::ZeroAtPrecision; }
  /// Absolute bound m with |x|_p <= p^(-m); ZeroAtPrecision state only.
  long zero_bound() const;

  /// Exponent of the canonical form; requires a nonzero value.
  long valuation() const;
  /// e with |x|_p = p^(-e); identical to valuation(), named per its role.
  long norm_valuation() const { return valuation(); }
  int rel_precision() const;
  const mpz_class& unit() const;

  /// Little-endian base-p digits of the unit part, `count` of them
  /// (count <= rel_precision to stay within what is actually known).
  std::vector<int> digits(int count) const;

  // --- arithmetic ---------------------------------------------------------
  PadicNumber operator-() const;
  PadicNumber operator+(const PadicNumber& rhs) const;
  PadicNumber operator-(const PadicNumber& rhs) const;
  PadicNumber operator*(const PadicNumber& rhs) const;
  PadicNumber operator/(const PadicNumber& rhs) const;
  PadicNumber pow(long exponent) const;
  PadicNumber reciprocal() const;

  // --- comparisons at precision -------------------------------------------
  /// True when (*this - other) is indistinguishable from zero.
  bool same_value(const PadicNumber& other) const;
  /// True when |*this - other|_p <= p^(-tol_exponent).
  bool within(const PadicNumber& other, long tol_exponent) const;

  std::string to_string() const;

 private:
  enum class Kind { Unit, ExactZero, ZeroAtPrecision };

  PadicNumber(long prime, int cap) : prime_(prime), cap_(cap) {}

  void normalize();  // reduce unit mod p^rel, enforce invariants
  static void check_compatible(const PadicNumber& a, const PadicNumber& b);

  long prime_ = 0;
  int cap_ = 0;  // K
  Kind kind_ = Kind::ExactZero;
  long valuation_ = 0;     // Unit only
  mpz_class unit_ = 0;     // Unit only; in [1, p^rel), coprime to p
  int rel_ = 0;            // Unit only; 1..K
  long zero_bound_ = 0;    // ZeroAtPrecision only
};

/// |a - b|_p <= p^(-tol)? Free-function spelling used by the model layers.
inline bool values_agree(const PadicNumber& a, const PadicNumber& b, long tol) {
  return a.within(b, tol);
}

}  // namespace padic

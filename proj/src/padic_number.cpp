#include "padic/padic_number.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

mpz_class pow_of(long prime, long exponent) {
  if (exponent < 0) throw Error("pow_of: negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(prime),
                static_cast<unsigned long>(exponent));
  return r;
}

namespace {

long remove_factor(mpz_class& n, long prime) {
  mpz_class p(prime);
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

void check_prime_arg(long prime) {
  if (prime < 2) throw Error("prime must be >= 2");
}

}  // namespace

PadicNumber PadicNumber::zero(long prime, const PrecisionConfig& cfg) {
  check_prime_arg(prime);
  cfg.validate();
  PadicNumber x(prime, cfg.digits);
  x.kind_ = Kind::ExactZero;
  return x;
}

PadicNumber PadicNumber::zero_at_precision(long prime, long bound,
                                           const PrecisionConfig& cfg) {
  check_prime_arg(prime);
  cfg.validate();
  PadicNumber x(prime, cfg.digits);
  x.kind_ = Kind::ZeroAtPrecision;
  x.zero_bound_ = bound;
  return x;
}

PadicNumber PadicNumber::from_unit(long prime, long valuation, mpz_class unit,
                                   int rel_precision, const PrecisionConfig& cfg) {
  check_prime_arg(prime);
  cfg.validate();
  if (rel_precision < 1) throw PrecisionExhausted();
  PadicNumber x(prime, cfg.digits);
  x.kind_ = Kind::Unit;
  x.valuation_ = valuation;
  x.rel_ = std::min(rel_precision, cfg.digits);
  mpz_class mod = pow_of(prime, x.rel_);
  mpz_mod(x.unit_.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
  if (x.unit_ == 0 || mpz_divisible_ui_p(x.unit_.get_mpz_t(),
                                         static_cast<unsigned long>(prime)))
    throw Error("from_unit: unit part is divisible by p");
  return x;
}

PadicNumber PadicNumber::from_rational(const mpz_class& num, const mpz_class& den,
                                       long prime, const PrecisionConfig& cfg) {
  check_prime_arg(prime);
  cfg.validate();
  if (den == 0) throw DivisionByZero("from_rational: zero denominator");
  if (num == 0) return zero(prime, cfg);

  mpz_class n = num, d = den;
  long v = remove_factor(n, prime) - remove_factor(d, prime);

  mpz_class mod = pow_of(prime, cfg.digits);
  mpz_class d_inv;
  if (mpz_invert(d_inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw Error("from_rational: denominator not invertible (internal)");
  mpz_class u = n * d_inv;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());

  PadicNumber x(prime, cfg.digits);
  x.kind_ = Kind::Unit;
  x.valuation_ = v;
  x.rel_ = cfg.digits;
  x.unit_ = u;
  return x;
}

PadicNumber PadicNumber::from_integer(long value, long prime,
                                      const PrecisionConfig& cfg) {
  return from_rational(mpz_class(value), mpz_class(1), prime, cfg);
}

PadicNumber PadicNumber::prime_power(long prime, long exponent,
                                     const PrecisionConfig& cfg) {
  check_prime_arg(prime);
  cfg.validate();
  PadicNumber x(prime, cfg.digits);
  x.kind_ = Kind::Unit;
  x.valuation_ = exponent;
  x.unit_ = 1;
  x.rel_ = cfg.digits;
  return x;
}

long PadicNumber::zero_bound() const {
  if (kind_ != Kind::ZeroAtPrecision)
    throw Error("zero_bound: value is not a zero-at-precision state");
  return zero_bound_;
}

long PadicNumber::valuation() const {
  if (kind_ == Kind::Unit) return valuation_;
  if (kind_ == Kind::ZeroAtPrecision)
    throw ZeroAtPrecision("norm undecidable: zero at precision p^(-" +
                          std::to_string(zero_bound_) + ")");
  throw ZeroAtPrecision("norm exponent undefined for exact zero");
}

int PadicNumber::rel_precision() const {
  if (kind_ != Kind::Unit) throw Error("rel_precision: value is zero");
  return rel_;
}

const mpz_class& PadicNumber::unit() const {
  if (kind_ != Kind::Unit) throw Error("unit: value is zero");
  return unit_;
}

std::vector<int> PadicNumber::digits(int count) const {
  if (kind_ != Kind::Unit) throw Error("digits: value is zero");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count));
  mpz_class u = unit_;
  for (int i = 0; i < count; ++i) {
    out.push_back(static_cast<int>(mpz_fdiv_ui(u.get_mpz_t(),
                                               static_cast<unsigned long>(prime_))));
    mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(prime_));
  }
  return out;
}

void PadicNumber::check_compatible(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime_ != b.prime_)
    throw PrimeMismatch("operands live in Q_" + std::to_string(a.prime_) +
                        " and Q_" + std::to_string(b.prime_));
}

PadicNumber PadicNumber::operator-() const {
  if (kind_ != Kind::Unit) return *this;
  PadicNumber r(prime_, cap_);
  r.kind_ = Kind::Unit;
  r.valuation_ = valuation_;
  r.rel_ = rel_;
  r.unit_ = pow_of(prime_, rel_) - unit_;
  return r;
}

PadicNumber PadicNumber::operator+(const PadicNumber& rhs) const {
  check_compatible(*this, rhs);
  const int cap = std::min(cap_, rhs.cap_);

  if (kind_ == Kind::ExactZero) return rhs;
  if (rhs.kind_ == Kind::ExactZero) return *this;

  if (kind_ == Kind::ZeroAtPrecision && rhs.kind_ == Kind::ZeroAtPrecision)
    return zero_at_precision(prime_, std::min(zero_bound_, rhs.zero_bound_),
                             {cap});

  if (kind_ == Kind::ZeroAtPrecision || rhs.kind_ == Kind::ZeroAtPrecision) {
    const PadicNumber& z = (kind_ == Kind::ZeroAtPrecision) ? *this : rhs;
    const PadicNumber& x = (kind_ == Kind::ZeroAtPrecision) ? rhs : *this;
    if (x.valuation_ >= z.zero_bound_)
      return zero_at_precision(prime_, z.zero_bound_, {cap});
    long keep = z.zero_bound_ - x.valuation_;  // digits of x still certain
    int rel = static_cast<int>(std::min<long>({keep, x.rel_, cap}));
    return from_unit(prime_, x.valuation_, x.unit_, rel, {cap});
  }

  // Unit + Unit. Absolute precision of the sum is the weaker of the two.
  const long v = std::min(valuation_, rhs.valuation_);
  const long abs_prec = std::min(valuation_ + rel_, rhs.valuation_ + rhs.rel_);
  long width = abs_prec - v;
  if (width > cap) width = cap;  // cannot exceed the cap anyway

  mpz_class mod = pow_of(prime_, width);
  mpz_class s = unit_ * pow_of(prime_, valuation_ - v) +
                rhs.unit_ * pow_of(prime_, rhs.valuation_ - v);
  mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());

  if (s == 0) return zero_at_precision(prime_, v + width, {cap});

  long shift = remove_factor(s, prime_);
  long rel = width - shift;
  if (rel < 1) throw PrecisionExhausted("addition lost all significant digits");
  if (rel > cap) rel = cap;
  return from_unit(prime_, v + shift, s, static_cast<int>(rel), {cap});
}

PadicNumber PadicNumber::operator-(const PadicNumber& rhs) const {
  return *this + (-rhs);
}

PadicNumber PadicNumber::operator*(const PadicNumber& rhs) const {
  check_compatible(*this, rhs);
  const int cap = std::min(cap_, rhs.cap_);

  if (kind_ == Kind::ExactZero || rhs.kind_ == Kind::ExactZero)
    return zero(prime_, {cap});

  if (kind_ == Kind::ZeroAtPrecision && rhs.kind_ == Kind::ZeroAtPrecision)
    return zero_at_precision(prime_, zero_bound_ + rhs.zero_bound_, {cap});

  if (kind_ == Kind::ZeroAtPrecision || rhs.kind_ == Kind::ZeroAtPrecision) {
    const PadicNumber& z = (kind_ == Kind::ZeroAtPrecision) ? *this : rhs;
    const PadicNumber& x = (kind_ == Kind::ZeroAtPrecision) ? rhs : *this;
    return zero_at_precision(prime_, z.zero_bound_ + x.valuation_, {cap});
  }

  int rel = std::min({rel_, rhs.rel_, cap});
  mpz_class mod = pow_of(prime_, rel);
  mpz_class u = unit_ * rhs.unit_;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  return from_unit(prime_, valuation_ + rhs.valuation_, u, rel, {cap});
}

PadicNumber PadicNumber::reciprocal() const {
  if (kind_ == Kind::ExactZero) throw DivisionByZero("reciprocal of exact zero");
  if (kind_ == Kind::ZeroAtPrecision)
    throw DivisionByZero("reciprocal of a value that is zero at precision");
  mpz_class mod = pow_of(prime_, rel_);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  return from_unit(prime_, -valuation_, inv, rel_, {cap_});
}

PadicNumber PadicNumber::operator/(const PadicNumber& rhs) const {
  check_compatible(*this, rhs);
  if (rhs.kind_ != Kind::Unit)
    throw DivisionByZero("division by a value indistinguishable from zero");
  if (kind_ == Kind::ExactZero) return zero(prime_, {std::min(cap_, rhs.cap_)});
  if (kind_ == Kind::ZeroAtPrecision)
    return zero_at_precision(prime_, zero_bound_ - rhs.valuation_,
                             {std::min(cap_, rhs.cap_)});
  return *this * rhs.reciprocal();
}

PadicNumber PadicNumber::pow(long exponent) const {
  if (exponent == 0) return from_integer(1, prime_, {cap_});
  if (kind_ == Kind::ExactZero) {
    if (exponent < 0) throw DivisionByZero("0 raised to a negative power");
    return *this;
  }
  if (kind_ == Kind::ZeroAtPrecision) {
    if (exponent < 0) throw DivisionByZero("zero-at-precision raised to a negative power");
    return zero_at_precision(prime_, zero_bound_ * exponent, {cap_});
  }
  PadicNumber base = exponent > 0 ? *this : reciprocal();
  unsigned long e = static_cast<unsigned long>(exponent > 0 ? exponent : -exponent);
  mpz_class mod = pow_of(prime_, base.rel_);
  mpz_class u;
  mpz_powm_ui(u.get_mpz_t(), base.unit_.get_mpz_t(), e, mod.get_mpz_t());
  return from_unit(prime_, base.valuation_ * static_cast<long>(e), u, base.rel_,
                   {cap_});
}

bool PadicNumber::same_value(const PadicNumber& other) const {
  return (*this - other).is_zero();
}

bool PadicNumber::within(const PadicNumber& other, long tol_exponent) const {
  PadicNumber d = *this - other;
  if (d.is_exact_zero()) return true;
  if (d.is_zero_at_precision()) return d.zero_bound_ >= tol_exponent;
  return d.valuation_ >= tol_exponent;
}

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  if (kind_ == Kind::ExactZero) return "0";
  if (kind_ == Kind::ZeroAtPrecision) {
    os << "O(" << prime_ << "^" << zero_bound_ << ")";
    return os.str();
  }
  const int shown = std::min(rel_, 6);
  auto d = digits(shown);
  bool first = true;
  for (int i = 0; i < shown; ++i) {
    if (d[static_cast<std::size_t>(i)] == 0) continue;
    if (!first) os << " + ";
    os << d[static_cast<std::size_t>(i)];
    long e = valuation_ + i;
    if (e != 0) os << "*" << prime_ << "^" << e;
    first = false;
  }
  os << " + O(" << prime_ << "^" << (valuation_ + rel_) << ")";
  return os.str();
}

}  // namespace padic

#include <doctest.h>

#include "padic/selftest.hpp"
#include "padic/sqrt.hpp"

using namespace padic;

namespace {
PrecisionConfig cfg{};

PadicNumber lift(long num, long p) {
  return PadicNumber::from_rational(mpz_class(num), mpz_class(1), p, cfg);
}
}  // namespace

TEST_CASE("sqrt(-3) in Q_7 has the root 2 mod 7") {
  SqrtResult r = padic_sqrt(lift(-3, 7));
  REQUIRE(r.exists);
  CHECK(r.canonical->digits(1)[0] == 2);
  CHECK(((*r.canonical) * (*r.canonical) - lift(-3, 7)).is_zero());
}

TEST_CASE("sqrt(-11) in Q_5 has the root 2 mod 5") {
  SqrtResult r = padic_sqrt(lift(-11, 5));
  REQUIRE(r.exists);
  CHECK(r.canonical->digits(1)[0] == 2);
}

TEST_CASE("sqrt(3) in Q_3 fails on valuation parity") {
  SqrtResult r = padic_sqrt(lift(3, 3));
  CHECK_FALSE(r.exists);
  CHECK(r.failure == SqrtFailure::OddValuation);
  CHECK(r.detail == "valuation odd");
}

TEST_CASE("sqrt(556) in Q_5 exists: 556 = 1 mod 5") {
  PadicNumber a = lift(556, 5);
  CHECK(a.digits(1)[0] == 1);
  SqrtResult r = padic_sqrt(a);
  REQUIRE(r.exists);
  // Verify r^2 = 556 modulo 5^K by the big-integer route.
  mpz_class mod = pow_of(5, cfg.digits);
  mpz_class sq = (r.canonical->unit() * r.canonical->unit()) % mod;
  CHECK(sq == 556);
}

TEST_CASE("non-residue leading digit is rejected with the digit named") {
  // 2 is not a square mod 3; neither is p^2 * 2.
  SqrtResult r = padic_sqrt(lift(2, 3));
  CHECK_FALSE(r.exists);
  CHECK(r.failure == SqrtFailure::NonResidue);
  SqrtResult r2 = padic_sqrt(lift(18, 3));  // 3^2 * 2: even valuation, bad unit
  CHECK_FALSE(r2.exists);
  CHECK(r2.failure == SqrtFailure::NonResidue);
}

TEST_CASE("dyadic square roots need unit = 1 mod 8") {
  SqrtResult ok = padic_sqrt(lift(17, 2));
  REQUIRE(ok.exists);
  CHECK(ok.canonical->digits(2) == std::vector<int>{1, 0});  // canonical: 1 mod 4
  CHECK(((*ok.canonical) * (*ok.canonical) - lift(17, 2)).is_zero_at_precision());

  SqrtResult bad = padic_sqrt(lift(5, 2));  // 5 = 101_2: a2 != 0
  CHECK_FALSE(bad.exists);
  CHECK(bad.failure == SqrtFailure::NonResidue);

  SqrtResult odd = padic_sqrt(lift(2, 2));
  CHECK(odd.failure == SqrtFailure::OddValuation);

  // 4 * 17 has even valuation and a good unit: root is 2 * sqrt(17).
  SqrtResult scaled = padic_sqrt(lift(68, 2));
  REQUIRE(scaled.exists);
  CHECK(scaled.canonical->valuation() == 1);
}

TEST_CASE("sqrt of zero states") {
  SqrtResult zr = padic_sqrt(PadicNumber::zero(5, cfg));
  CHECK(zr.exists);
  CHECK(zr.canonical->is_exact_zero());

  PadicNumber x = lift(9, 7);
  CHECK_THROWS_AS(padic_sqrt(x - x), ZeroAtPrecision);
}

TEST_CASE("negated root is the negative and squares back") {
  for (long p : {3L, 5L, 13L}) {
    SqrtResult r = padic_sqrt(lift(4 * p * p, p));
    REQUIRE(r.exists);
    CHECK(r.canonical->valuation() == 1);
    CHECK((-(*r.canonical)).same_value(*r.negated));
    CHECK(((*r.negated) * (*r.negated)).same_value(lift(4 * p * p, p)));
  }
}

TEST_CASE("property: sqrt soundness on random radicands") {
  auto r = selftest::sqrt_soundness(5, 400);
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("property: existence matches exhaustive squaring mod p") {
  auto r = selftest::sqrt_completeness_mod_p();
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("property: existence matches the mod-p^6 oracle") {
  auto r = selftest::sqrt_oracle_mod_p6(17, 60);
  INFO(r.detail);
  CHECK(r.pass);
}

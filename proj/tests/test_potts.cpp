#include <doctest.h>

#include "padic/dynamics.hpp"
#include "padic/potts.hpp"
#include "padic/selftest.hpp"

using namespace padic;
using potts::BoundaryField;
using potts::ModelParams;
using tree::Configuration;
using tree::Vertex;

namespace {

Configuration constant_sigma(int depth, const ModelParams& p, int spin) {
  Configuration sigma(depth, p.q, p.branching, Configuration::Domain::Volume);
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma.set_spin_at(i, spin);
  return sigma;
}

}  // namespace

TEST_CASE("hamiltonian counts matching non-root edges") {
  ModelParams params{3, 1, 1};
  CHECK(potts::hamiltonian(constant_sigma(1, params, 0), params) == 0);
  CHECK(potts::hamiltonian(constant_sigma(2, params, 1), params) == 4);

  // Alternating levels: no edge matches.
  Configuration alt(2, 1, 2, Configuration::Domain::Volume);
  for (std::size_t i = 0; i < 2; ++i) alt.set_spin_at(i, 1);
  CHECK(potts::hamiltonian(alt, params) == 0);

  ModelParams anti{3, 1, -2};
  CHECK(potts::hamiltonian(constant_sigma(2, anti, 0), anti) == -8);
}

TEST_CASE("symmetric field at depth 1: all weights equal, mu = 1/4") {
  ModelParams params{3, 1, 1};
  auto field = BoundaryField::invariant_line(params.constant(1), params);
  tree::ConfigurationRange range(1, 1, 2, Configuration::Domain::Volume);
  PadicNumber quarter =
      PadicNumber::from_rational(mpz_class(1), mpz_class(4), 3, params.prec);
  for (const auto& sigma : range) {
    auto m = potts::finite_volume_measure(sigma, field, params);
    CHECK(m.weight.same_value(params.constant(1)));
    CHECK(m.partition.same_value(params.constant(4)));
    CHECK(m.mu.same_value(quarter));
  }
}

TEST_CASE("partition function: contraction equals literal enumeration") {
  std::mt19937_64 gen(3);
  for (auto params : {ModelParams{3, 1, 1}, ModelParams{3, 2, 2},
                      ModelParams{5, 1, -2}}) {
    std::vector<PadicNumber> h;
    for (int i = 0; i <= params.q; ++i)
      h.push_back(selftest::random_value(gen, params.prime, params.prec, -1, 1));
    auto field = BoundaryField::translation_invariant(h);
    for (int depth : {1, 2, 3}) {
      PadicNumber a = potts::partition_function(depth, field, params);
      PadicNumber b = potts::partition_function_enumerated(depth, field, params);
      CHECK(a.same_value(b));
    }
  }
}

TEST_CASE("measures sum to one") {
  std::mt19937_64 gen(8);
  ModelParams params{3, 1, 1};
  std::vector<PadicNumber> h{
      selftest::random_value(gen, 3, params.prec, 0, 0),
      selftest::random_value(gen, 3, params.prec, -1, 1)};
  auto field = BoundaryField::translation_invariant(h);
  PadicNumber total = PadicNumber::zero(3, params.prec);
  tree::ConfigurationRange range(2, 1, 2, Configuration::Domain::Volume);
  for (const auto& sigma : range)
    total = total + potts::finite_volume_measure(sigma, field, params).mu;
  CHECK(total.same_value(params.constant(1)));
}

TEST_CASE("recursion map fixes the uniform vector") {
  for (auto params : {ModelParams{3, 1, 1}, ModelParams{5, 4, 2},
                      ModelParams{3, 2, -2}}) {
    std::vector<PadicNumber> ones(static_cast<std::size_t>(params.q),
                                  params.constant(1));
    auto f = potts::recursion_map(ones, params);
    for (const auto& fi : f) CHECK(fi.same_value(params.constant(1)));
  }
}

TEST_CASE("recursion map on the invariant line reduces to f") {
  std::mt19937_64 gen(21);
  ModelParams params{5, 3, 2};
  for (int t = 0; t < 25; ++t) {
    PadicNumber h = selftest::random_value(gen, 5, params.prec, -2, 2);
    std::vector<PadicNumber> hat(static_cast<std::size_t>(params.q),
                                 params.constant(1));
    hat[0] = h;  // invariant line at position 1
    try {
      auto prod = potts::vertex_recursion_product({hat, hat}, params);
      // Off-line coordinates stay at 1; the line coordinate becomes f(h).
      for (std::size_t i = 1; i < prod.size(); ++i)
        CHECK(prod[i].same_value(params.constant(1)));
      CHECK(prod[0].same_value(dynamics::eval_f(h, params)));
    } catch (const SingularRecursion&) {
      continue;
    } catch (const PoleEncountered&) {
      continue;
    }
  }
}

TEST_CASE("compatibility marginal sum equals the literal omega-sum") {
  // compatibility_check contracts the omega-sum per leaf. Force every sigma
  // into the failure list (impossible tolerance) and compare each recorded
  // LHS against the term-by-term sum of mu over Omega_{W_n}.
  ModelParams params{3, 1, 1};
  std::mt19937_64 gen(4);
  std::vector<PadicNumber> h{
      selftest::random_value(gen, 3, params.prec, 0, 0),
      selftest::random_value(gen, 3, params.prec, 0, 1)};
  auto field = BoundaryField::translation_invariant(h);
  for (int depth : {2, 3}) {
    tree::ConfigurationRange lower(depth - 1, 1, 2, Configuration::Domain::Volume);
    auto report = potts::compatibility_check(
        depth, field, params, params.prec.digits + 1000, lower.count());
    REQUIRE(report.failures.size() == lower.count());

    PadicNumber z = potts::partition_function(depth, field, params);
    tree::ConfigurationRange boundary(depth, 1, 2, Configuration::Domain::Level);
    for (const auto& failure : report.failures) {
      PadicNumber literal = PadicNumber::zero(3, params.prec);
      for (const auto& omega : boundary)
        literal = literal + potts::boundary_weight(
                                tree::concat(failure.sigma, omega), field, params);
      CHECK(failure.lhs.same_value(literal / z));
      CHECK(failure.rhs.same_value(
          potts::finite_volume_measure(failure.sigma, field, params).mu));
    }
  }
}

TEST_CASE("compatibility: recursion solutions pass, random fields fail") {
  std::mt19937_64 gen(12);
  for (auto params : {ModelParams{3, 1, 1}, ModelParams{5, 1, 2},
                      ModelParams{3, 2, 2}}) {
    const long tol = params.prec.digits - 8;
    auto uniform = BoundaryField::invariant_line(params.constant(1), params);
    for (int depth : {2, 3}) {
      auto report = potts::compatibility_check(depth, uniform, params, tol);
      CHECK(report.pass);
      CHECK(report.checked ==
            tree::ConfigurationRange(depth - 1, params.q, 2,
                                     Configuration::Domain::Volume)
                .count());
    }
    // A random translation-invariant field that does not solve the
    // recursion must fail, with a concrete violating configuration.
    int rejected = 0;
    for (int t = 0; t < 20; ++t) {
      std::vector<PadicNumber> h{params.constant(1)};
      for (int i = 1; i <= params.q; ++i)
        h.push_back(selftest::random_value(gen, params.prime, params.prec, -1, 1));
      auto field = BoundaryField::translation_invariant(h);
      auto hat = field.hat(Vertex::parse("1"));
      auto image = potts::vertex_recursion_product({hat, hat}, params);
      bool solves = true;
      for (std::size_t i = 0; i < hat.size(); ++i)
        solves = solves && image[i].same_value(hat[i]);
      if (solves) continue;
      auto report = potts::compatibility_check(2, field, params, tol);
      CHECK_FALSE(report.pass);
      CHECK_FALSE(report.failures.empty());
      ++rejected;
    }
    CHECK(rejected >= 15);
  }
}

TEST_CASE("compatibility with fields from fixed points (ferromagnetic Potts)") {
  ModelParams params{5, 5, 3};
  auto fps = dynamics::fixed_points(params);
  REQUIRE(fps.roots_exist);
  const long tol = params.prec.digits - 8;
  for (const PadicNumber& x : {fps.x0.value, fps.x1->value, fps.x2->value}) {
    auto field = BoundaryField::invariant_line(x, params);
    auto report = potts::compatibility_check(2, field, params, tol);
    CHECK(report.pass);
  }
}

TEST_CASE("partition recursion Z_{n+1} = A Z_n") {
  ModelParams params{3, 1, 1};
  const long tol = params.prec.digits - 8;
  auto field = BoundaryField::invariant_line(params.constant(1), params);
  for (int depth : {1, 2}) {
    auto report = potts::partition_recursion_check(depth, field, params, tol);
    CHECK(report.holds);
    // a = (theta + q)^2 = 16 per vertex, A = a^{|W_n|}.
    PadicNumber expect =
        params.constant(16).pow(tree::tree_counts(2, depth).level_size);
    CHECK(report.prefactor.same_value(expect));
  }

  // Non-solutions are refused rather than silently averaged.
  std::mt19937_64 gen(5);
  std::vector<PadicNumber> h{params.constant(1),
                             selftest::random_value(gen, 3, params.prec, 0, 0)};
  auto bad = BoundaryField::translation_invariant(h);
  auto hat = bad.hat(Vertex::parse("1"));
  auto image = potts::vertex_recursion_product({hat, hat}, params);
  REQUIRE_FALSE(image[0].same_value(hat[0]));
  CHECK_THROWS_AS(potts::partition_recursion_check(1, bad, params, tol),
                  NotARecursionSolution);
}

TEST_CASE("partition recursion for the attractive fixed point at (5,5,3)") {
  ModelParams params{5, 5, 3};
  auto fps = dynamics::fixed_points(params);
  auto field = BoundaryField::invariant_line(fps.x1->value, params);
  const long tol = params.prec.digits - 8;
  for (int depth : {1, 2}) {
    auto report = potts::partition_recursion_check(depth, field, params, tol);
    CHECK(report.holds);
    // a = h0 (x1 + theta + q - 1)^2 is a unit here: |a| = 1.
    CHECK(report.prefactor.valuation() == 0);
  }
}

TEST_CASE("property: measures invariant under global field scaling") {
  auto r = selftest::measure_scale_invariance(23);
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("per-level and per-vertex field lookups") {
  ModelParams params{3, 1, 1};
  auto one = params.constant(1);
  auto two = params.constant(2);
  auto lv = BoundaryField::per_level({{one, two}, {two, one}});
  CHECK(lv.at(Vertex::parse("2"))[1].same_value(two));
  CHECK(lv.at(Vertex::parse("1.2"))[1].same_value(one));
  CHECK_THROWS_AS(lv.at(Vertex::parse("1.1.1")), Error);

  std::map<Vertex, std::vector<PadicNumber>> m;
  m[Vertex::parse("1")] = {one, two};
  auto pv = BoundaryField::per_vertex(m);
  CHECK(pv.at(Vertex::parse("1"))[0].same_value(one));
  CHECK_THROWS_AS(pv.at(Vertex::parse("2")), Error);
  CHECK(pv.hat(Vertex::parse("1"))[0].same_value(two));
}

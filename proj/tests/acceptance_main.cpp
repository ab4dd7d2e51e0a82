// Acceptance suite: one line per criterion, every tolerance pinned here.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "padic/dynamics.hpp"
#include "padic/phase.hpp"
#include "padic/selftest.hpp"

using namespace padic;
using potts::ModelParams;
using tree::Configuration;

namespace {

struct Criterion {
  int number;
  std::string label;
  std::function<bool(std::string&)> run;
  double budget_seconds;  // 0: no stated budget
};

constexpr std::uint64_t kSeed = 0x9d1c;

// --- criterion bodies ------------------------------------------------------

bool criterion1(std::string& detail) {
  auto r = selftest::sqrt_oracle_mod_p6(kSeed + 1, 500);
  detail = r.detail;
  return r.pass;
}

bool criterion2(std::string& detail) {
  PrecisionConfig cfg;
  bool ok = true;
  SqrtResult a = padic_sqrt(PadicNumber::from_integer(-3, 7, cfg));
  ok = ok && a.exists && a.canonical->digits(1)[0] == 2;
  SqrtResult b = padic_sqrt(PadicNumber::from_integer(-11, 5, cfg));
  ok = ok && b.exists && b.canonical->digits(1)[0] == 2;
  auto fps = dynamics::fixed_points(ModelParams{3, 1, 1});
  ok = ok && fps.discriminant.is_exact_zero() && fps.degenerate;
  detail = "sqrt(-3) in Q_7 = 2 mod 7; sqrt(-11) in Q_5 = 2 mod 5; D(3,1,1) = 0";
  return ok;
}

const ModelParams kDeskCases[] = {{3, 1, 1}, {5, 1, 2}, {3, 2, 2}, {5, 5, 3}};

std::vector<PadicNumber> existing_fixed_points(const ModelParams& params) {
  auto fps = dynamics::fixed_points(params);
  std::vector<PadicNumber> out{fps.x0.value};
  if (fps.roots_exist && !fps.degenerate) {
    out.push_back(fps.x1->value);
    out.push_back(fps.x2->value);
  }
  return out;
}

bool criterion3(std::string& detail) {
  std::mt19937_64 gen(kSeed + 3);
  int fields_checked = 0, rejected = 0;
  for (const auto& params : kDeskCases) {
    const long tol = params.prec.digits - 8;
    for (const auto& x : existing_fixed_points(params)) {
      auto field = potts::BoundaryField::invariant_line(x, params);
      for (int depth : {2, 3}) {
        auto report = potts::compatibility_check(depth, field, params, tol);
        if (!report.pass) {
          detail = "solution field failed at p=" + std::to_string(params.prime) +
                   " depth=" + std::to_string(depth);
          return false;
        }
        ++fields_checked;
      }
    }
    int nonsolutions = 0;
    while (nonsolutions < 20) {
      std::vector<PadicNumber> h{params.constant(1)};
      for (int i = 1; i <= params.q; ++i)
        h.push_back(selftest::random_value(gen, params.prime, params.prec, -1, 1));
      auto field = potts::BoundaryField::translation_invariant(h);
      auto hat = field.hat(tree::Vertex::parse("1"));
      auto image = potts::vertex_recursion_product({hat, hat}, params);
      bool solves = true;
      for (std::size_t i = 0; i < hat.size(); ++i)
        solves = solves && image[i].same_value(hat[i]);
      if (solves) continue;
      ++nonsolutions;
      auto report = potts::compatibility_check(2, field, params, tol);
      if (report.pass || report.failures.empty()) {
        detail = "random non-solution field not rejected with a witness";
        return false;
      }
      ++rejected;
    }
  }
  detail = std::to_string(fields_checked) + " solution field/depth pairs pass; " +
           std::to_string(rejected) + " random fields rejected with witnesses";
  return true;
}

bool criterion4(std::string& detail) {
  int checks = 0;
  for (const auto& params : kDeskCases) {
    const long tol = params.prec.digits - 8;
    for (const auto& x : existing_fixed_points(params)) {
      auto field = potts::BoundaryField::invariant_line(x, params);
      for (int depth : {1, 2}) {
        auto report = potts::partition_recursion_check(depth, field, params, tol);
        if (!report.holds) {
          detail = "Z_{n+1} != A Z_n at p=" + std::to_string(params.prime) +
                   " depth=" + std::to_string(depth);
          return false;
        }
        ++checks;
      }
    }
  }
  detail = std::to_string(checks) + " partition recursions hold at K-8";
  return true;
}

bool criterion5(std::string& detail) {
  using dynamics::StabilityClass;
  auto ferro = dynamics::fixed_points(ModelParams{5, 5, 3});
  bool ok = ferro.roots_exist;
  ok = ok && ferro.x1->cls == StabilityClass::Attractive &&
       ferro.x1->multiplier_exponent == -2;
  ok = ok && ferro.x0.cls == StabilityClass::Repelling &&
       ferro.x0.multiplier_exponent == 1;
  ok = ok && ferro.x2->cls == StabilityClass::Repelling &&
       ferro.x2->multiplier_exponent == 1;
  auto anti = dynamics::fixed_points(ModelParams{3, 1, -2});
  ok = ok && anti.roots_exist;
  ok = ok && anti.x0.cls == StabilityClass::Neutral &&
       anti.x0.multiplier_exponent == 0;
  ok = ok && anti.x1->cls == StabilityClass::Attractive &&
       anti.x1->multiplier_exponent == -2;
  // |f'(x2)| = |q/theta|_p = 3^-2 here (see the notes on the stated form).
  ok = ok && anti.x2->cls == StabilityClass::Attractive &&
       anti.x2->multiplier_exponent == -2;
  detail = "(5,5,3): 5^-2 / 5 / 5; (3,1,-2): neutral, 3^-2, 3^-2 - exact";
  return ok;
}

bool criterion6(std::string& detail) {
  auto r = selftest::vieta_sweep();
  detail = r.pass ? r.detail + ", residuals zero at relative precision K-4"
                  : r.detail;
  return r.pass;
}

bool criterion7(std::string& detail) {
  auto orbits = selftest::orbit_basin_convergence(kSeed + 7, 100);
  auto sphere = selftest::sphere_invariance(kSeed + 8, 200, 50);
  detail = orbits.pass && sphere.pass
               ? "100 starts per regime converge; 200 sphere points stay 50 steps"
               : orbits.detail + "; " + sphere.detail;
  return orbits.pass && sphere.pass;
}

bool criterion8(std::string& detail) {
  std::vector<selftest::SuiteResult> suites{
      selftest::fixed_point_norm_table(),
      selftest::ferro_contraction(kSeed + 9, 1000),
      selftest::g_norms_ferro(kSeed + 10, 1000),
      selftest::f_norms_antiferro(kSeed + 11, 1000),
      selftest::g_norms_antiferro(kSeed + 12, 1000),
  };
  for (const auto& s : suites)
    if (!s.pass) {
      detail = s.name + ": " + s.detail;
      return false;
    }
  detail = "norm tables and region suites, 1000 points per region";
  return true;
}

bool criterion9(std::string& detail) {
  std::size_t checked = 0;
  auto run = [&](int i, int depth, const ModelParams& params) -> bool {
    auto r = phase::brute_force_cross_check(i, depth, params);
    checked += r.checked;
    if (!r.pass)
      detail = "mismatch at p=" + std::to_string(params.prime) +
               " i=" + std::to_string(i) + " n=" + std::to_string(depth);
    return r.pass;
  };
  // q <= 2 members of the desk list at depths 1..3 for every existing
  // measure, the antiferromagnetic triple likewise, and the q = 5 triple at
  // its feasible depths.
  for (int n : {1, 2, 3}) {
    if (!run(0, n, ModelParams{3, 1, 1})) return false;
    if (!run(1, n, ModelParams{3, 1, 1})) return false;  // degenerate: x1 = x0
    if (!run(0, n, ModelParams{5, 1, 2})) return false;
    if (!run(0, n, ModelParams{3, 2, 2})) return false;
    for (int i : {0, 1, 2})
      if (!run(i, n, ModelParams{3, 1, -2})) return false;
  }
  for (int n : {1, 2})
    for (int i : {0, 1, 2})
      if (!run(i, n, ModelParams{5, 5, 3})) return false;
  detail = std::to_string(checked) + " configurations, exponents all agree";
  return true;
}

bool criterion10(std::string& detail) {
  using phase::Boundedness;
  using phase::Verdict;
  auto strong = phase::phase_diagnosis(ModelParams{5, 5, 3});
  if (strong.verdict != Verdict::StrongTransition) {
    detail = "(5,5,3) verdict wrong";
    return false;
  }
  // Witness exponents on the H = 0, all-boundary-1 family, v(h0) = 0:
  // e(mu2) = 2(2^n - 2) exactly, and e(mu1) + e(mu2) constant in n (the
  // product law; the constant is |q|^2 under exact normalization).
  ModelParams params{5, 5, 3};
  for (int n : {2, 3, 4}) {
    Configuration w = phase::alternating_witness(n, params, 1);
    long e2 = phase::measure_norm_exponent(2, w, params, 0);
    long e1 = phase::measure_norm_exponent(1, w, params, 0);
    if (e2 != 2 * ((1L << n) - 2)) {
      detail = "mu2 witness exponent wrong at n=" + std::to_string(n);
      return false;
    }
    if (e1 + e2 != -2) {
      detail = "mu1 mu2 product-law constant wrong at n=" + std::to_string(n);
      return false;
    }
  }
  if (phase::phase_diagnosis(ModelParams{7, 1, 1}).verdict !=
      Verdict::QuasiTransition) {
    detail = "(7,1,1) verdict wrong";
    return false;
  }
  auto anti = phase::phase_diagnosis(ModelParams{3, 1, -2});
  if (anti.verdict != Verdict::QuasiTransition) {
    detail = "(3,1,-2) verdict wrong";
    return false;
  }
  // All three bounded with certified sups within the stated bounds
  // p^{nbar}, p^{5 nbar}, p^{nbar} for mu_0, mu_1, mu_2 (nbar = 2, v(h0) = 0).
  const long caps[3] = {2, 10, 2};
  for (int i = 0; i < 3; ++i) {
    const auto& m = anti.measures[static_cast<std::size_t>(i)];
    if (!m.exists || m.bounded != Boundedness::Bounded || !m.bound_exponent ||
        *m.bound_exponent > caps[i]) {
      detail = "(3,1,-2) mu_" + std::to_string(i) + " bound violated";
      return false;
    }
  }
  if (phase::phase_diagnosis(ModelParams{3, 1, -1}).verdict !=
      Verdict::NoTransition) {
    detail = "(3,1,-1) verdict wrong";
    return false;
  }
  if (phase::phase_diagnosis(ModelParams{2, 1, 1}).verdict !=
      Verdict::NoTransition) {
    detail = "(2,1,1) verdict wrong";
    return false;
  }
  detail = "verdicts and witness exponents exact";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "square-root existence oracle (p in {2,3,5,7,13}, 500 each)", criterion1, 10},
      {2, "paper-exact residue facts", criterion2, 0},
      {3, "compatibility certificates, both directions", criterion3, 60},
      {4, "partition recursion Z_{n+1} = A Z_n", criterion4, 0},
      {5, "fixed-point classification table", criterion5, 0},
      {6, "Vieta invariants over the parameter sweep", criterion6, 0},
      {7, "basin/orbit convergence checks", criterion7, 30},
      {8, "norm property suites per region", criterion8, 0},
      {9, "closed-form norms vs brute force", criterion9, 0},
      {10, "phase verdicts with witness exponents", criterion10, 10},
  };

  int failed = 0;
  for (auto& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
      pass = false;
      detail += " [exceeded " + std::to_string(c.budget_seconds) + "s budget]";
    }
    std::printf("CRITERION %2d  %s  [%6.2fs]  %s -- %s\n", c.number,
                pass ? "PASS" : "FAIL", secs, c.label.c_str(), detail.c_str());
    if (!pass) ++failed;
  }
  if (failed == 0)
    std::printf("acceptance: all %zu criteria pass\n", criteria.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failed);
  return failed;
}

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "padic/padic_number.hpp"
#include "padic/potts.hpp"

namespace padic::selftest {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// --- deterministic random generation for property sweeps ------------------

/// Random unit-digit value with valuation drawn uniformly from [vmin, vmax].
PadicNumber random_value(std::mt19937_64& gen, long prime,
                         const PrecisionConfig& cfg, long vmin, long vmax);
/// Random point with |x|_p = p^(-v), i.e. fixed valuation v.
PadicNumber random_with_valuation(std::mt19937_64& gen, long prime,
                                  const PrecisionConfig& cfg, long v);

// --- property suites -------------------------------------------------------

SuiteResult field_axioms(std::uint64_t seed, int trials = 1000);
SuiteResult ultrametric_inequality(std::uint64_t seed, int trials = 1000);
SuiteResult rational_oracle_round_trip(std::uint64_t seed, int trials = 400);
SuiteResult sqrt_soundness(std::uint64_t seed, int trials = 400);
SuiteResult sqrt_completeness_mod_p();
/// Criterion-1 style oracle: existence against exhaustive squares mod p^6
/// for p in {2,3,5,7,13}, plus residual |r^2 - a| <= p^-(K-2).
SuiteResult sqrt_oracle_mod_p6(std::uint64_t seed, int per_prime = 500);
SuiteResult vieta_sweep();
SuiteResult f_g_identities(std::uint64_t seed, int trials = 1000);
SuiteResult fixed_point_norm_table();  // per-regime norms and classes
SuiteResult ferro_contraction(std::uint64_t seed, int trials = 1000);
SuiteResult g_norms_ferro(std::uint64_t seed, int trials = 1000);
SuiteResult f_norms_antiferro(std::uint64_t seed, int trials = 1000);
SuiteResult g_norms_antiferro(std::uint64_t seed, int trials = 1000);
SuiteResult sphere_invariance(std::uint64_t seed, int points = 200, int iters = 50);
SuiteResult root_existence_crosscheck();        // digit criteria sweep
SuiteResult orbit_basin_convergence(std::uint64_t seed, int starts = 100);
SuiteResult measure_scale_invariance(std::uint64_t seed);
SuiteResult compatibility_desk_scale(std::uint64_t seed);

/// Every suite above, in a fixed order, with per-suite derived seeds.
std::vector<SuiteResult> run_all(std::uint64_t seed);

}  // namespace padic::selftest

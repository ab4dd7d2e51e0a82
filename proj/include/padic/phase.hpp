#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "padic/dynamics.hpp"
#include "padic/potts.hpp"

namespace padic::phase {

using potts::ModelParams;

enum class Regime { Ferromagnetic, Antiferromagnetic };
enum class Boundedness { Bounded, Unbounded, Unknown };
enum class Verdict { StrongTransition, QuasiTransition, NoTransition };

std::string to_string(Boundedness b);
std::string to_string(Verdict v);

/// Closed-form exponent of |mu_i(sigma)|_p = p^e on the invariant-line
/// measure built from fixed point x_i (position m = 1, scale h0):
///
///   e = constant + coeff_volume * |V_{n-1}| + coeff_count * #sigma
///       - H(sigma) + coeff_h0 * v(h0)
///
/// assembled from the exact valuations of x_i, x_i + theta + q - 1 and
/// q + x_i. The measure is invariant under h -> c h, so coeff_h0 vanishes
/// identically on the order-2 tree (|W_n| - |V_{n-1}| - 2 = 0); it is kept
/// symbolic so the cancellation is visible in reports.
struct NormFormula {
  long constant;      // 2 * v(q + x_i)
  long coeff_volume;  // 2 * v(x_i + theta + q - 1)
  long coeff_count;   // -v(x_i)
  long coeff_h0;      // |W_n| - |V_{n-1}| - 2 = 0 for k = 2

  long evaluate(long long volume_prev, long long count, long long hamiltonian,
                long h0_valuation = 0) const {
    return constant + coeff_volume * static_cast<long>(volume_prev) +
           coeff_count * static_cast<long>(count) -
           static_cast<long>(hamiltonian) + coeff_h0 * h0_valuation;
  }
};

/// Throws MeasureUndefined when the fixed point x_i does not exist.
NormFormula measure_norm_formula(int i, const ModelParams& params);

/// e with |mu_i(sigma)|_p = p^e, straight from the formula.
long measure_norm_exponent(int i, const tree::Configuration& sigma,
                           const ModelParams& params, long h0_valuation = 0);

struct BoundednessReport {
  Boundedness status = Boundedness::Unknown;
  /// Certified sup of the exponent over all depths (Bounded only).
  std::optional<long> sup_exponent;
  /// Growth of max_sigma e per extra boundary vertex; > 0 means unbounded.
  long growth_per_leaf = 0;
  /// (n, max exponent at depth n) for n = 1..n_max.
  std::vector<std::pair<int, long>> depth_extremes;
  std::string witness;  // configuration family realizing the extreme
};

/// Certifies boundedness of mu_i by maximizing the affine exponent formula
/// over the feasible corners of (#matching edges, #sigma): constant-spin
/// and level-alternating families realize every corner, so the maximum over
/// configurations is exact, with a closed-form growth law in n.
BoundednessReport boundedness(int i, const ModelParams& params, int n_max);

struct MeasureSummary {
  bool exists = false;
  Boundedness bounded = Boundedness::Unknown;
  std::optional<long> bound_exponent;  // sup of e when bounded
};

struct PhaseWitness {
  int measure;  // 0/1/2
  int depth;
  std::string sigma;  // descriptor of the configuration family
  long exponent;
};

struct PhaseReport {
  ModelParams params;
  Regime regime = Regime::Ferromagnetic;
  Verdict verdict = Verdict::NoTransition;
  std::array<MeasureSummary, 3> measures;
  std::vector<PhaseWitness> witnesses;
  std::string notes;
};

/// Phase-transition diagnosis. Ferromagnetic: |q|_p < 1 with
/// |theta|_p <= |q|_p^2 gives a strong transition (mu_1 bounded, mu_0 and
/// mu_2 unbounded on a common witness sequence); |q|_p = 1 with existing
/// roots gives a quasi transition; no roots, no transition.
/// Antiferromagnetic: -N even gives a quasi transition with all three
/// measures bounded; -N odd reports no transition (only mu_0 within the
/// certified theory).
PhaseReport phase_diagnosis(const ModelParams& params, int n_max = 6);

struct CrossCheckMismatch {
  tree::Configuration sigma;
  long formula_exponent;
  std::optional<long> brute_exponent;  // nullopt: undecidable at precision
};

struct CrossCheckReport {
  int depth = 0;
  int measure = 0;
  std::size_t checked = 0;
  std::size_t undecidable = 0;
  std::vector<CrossCheckMismatch> mismatches;  // capped
  bool pass = false;
};

/// Exhaustive comparison of the closed-form exponents against exact
/// finite-volume measure computations over the whole of Phi^{V_n}.
CrossCheckReport brute_force_cross_check(int i, int depth, const ModelParams& params,
                                         std::size_t max_mismatches = 8);

/// The configuration family used as transition witness: boundary level all
/// at spin `boundary_spin`, interior levels alternating between the two
/// colors so that no edge carries equal spins (H = 0).
tree::Configuration alternating_witness(int depth, const ModelParams& params,
                                        int boundary_spin = 1);

/// Constant-spin configuration (every vertex of V_n at `spin`).
tree::Configuration constant_configuration(int depth, const ModelParams& params,
                                           int spin);

}  // namespace padic::phase

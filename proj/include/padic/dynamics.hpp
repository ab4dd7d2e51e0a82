#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padic/potts.hpp"
#include "padic/sqrt.hpp"

namespace padic::dynamics {

using potts::ModelParams;

/// f(x) = ((theta x + q) / (x + theta + q - 1))^2, the one-dimensional
/// system governing invariant-line recursion solutions on the order-2 tree.
PadicNumber eval_f(const PadicNumber& x, const ModelParams& params);
PadicNumber eval_f_prime(const PadicNumber& x, const ModelParams& params);
/// g(x) = (theta x + q) / (x + theta + q - 1); f = g^2.
PadicNumber eval_g(const PadicNumber& x, const ModelParams& params);
/// g^{-1}(x) = ((theta + q - 1) x - q) / (theta - x).
PadicNumber eval_g_inverse(const PadicNumber& x, const ModelParams& params);
/// eta(theta,q;x,y) = A theta (x+y) + 2 theta x y + 2 q A + q (x+y),
/// A = theta + q - 1: the symmetric factor in f(x) - f(y).
PadicNumber eval_eta(const PadicNumber& x, const PadicNumber& y,
                     const ModelParams& params);
/// The pole of f and g, 1 - theta - q.
PadicNumber pole_of_f(const ModelParams& params);

enum class StabilityClass { Attractive, Neutral, Repelling };

std::string to_string(StabilityClass c);

struct FixedPointInfo {
  PadicNumber value;
  long norm_exponent;        // |x|_p = p^e
  long theta_x_q_exponent;   // |theta x + q|_p = p^e
  long shifted_exponent;     // |x + theta + q - 1|_p = p^e
  long multiplier_exponent;  // |f'(x)|_p = p^e
  StabilityClass cls;
};

struct FixedPointReport {
  PadicNumber discriminant;  // D(theta, q) = theta^2 - 2 theta - 4q + 1
  bool roots_exist = false;
  bool degenerate = false;  // D = 0: x1 = x2 (= x0 when q = 1... only if 1)
  SqrtFailure failure = SqrtFailure::None;
  std::string existence_detail;
  FixedPointInfo x0;
  std::optional<FixedPointInfo> x1, x2;
};

/// Solves x = f(x): x0 = 1 always; the other two roots come from the
/// quadratic x^2 + (2 theta - theta^2 + 2q - 1) x + q^2 = 0 via the
/// discriminant D and padic_sqrt. Labels follow the norm conventions:
/// ferromagnetic with |q|_p < 1 puts |x1| = |q|^2; antiferromagnetic puts
/// |x1| = |theta|^2; when norms tie the canonical sqrt branch decides.
FixedPointReport fixed_points(const ModelParams& params);

struct Classification {
  StabilityClass cls;
  long multiplier_exponent;  // |f'(x*)|_p = p^e
};

/// Requires |f(x*) - x*|_p <= p^(-ceil(K/2)); otherwise NotAFixedPoint.
Classification classify_fixed_point(const PadicNumber& x_star,
                                    const ModelParams& params);

enum class OrbitStatus { Converged, Cycle, PoleHit, Undecided };

struct OrbitResult {
  OrbitStatus status = OrbitStatus::Undecided;
  std::optional<int> target;  // 0/1/2 when Converged
  int steps = 0;
  std::vector<PadicNumber> trajectory;  // x_0 .. x_steps (capped)
};

/// Iterates f, declaring convergence when within p^(-ceil(K/2)) of a fixed
/// point, detecting exact pole hits and exact revisits (cycles).
OrbitResult iterate_orbit(const PadicNumber& start, const ModelParams& params,
                          int max_iter, std::size_t trajectory_cap = 256);

enum class BasinVerdict { InProvenBasin, OutsideProvenRegion, Excluded };

std::string to_string(BasinVerdict v);

/// Membership in the proven basin descriptions. Ferromagnetic regime
/// (|q| < 1, |theta| <= |q|^2, target x1): the norm sets plus the J-annulus
/// preimage sets, explored to `depth_cap`. Antiferromagnetic (|theta| > 1):
/// A(x2) = B_1(0) exactly; A(x1) = {|x| > 1} minus pole preimages.
/// Beyond the cap the answer is OutsideProvenRegion, never a guess.
BasinVerdict basin_predicate(const PadicNumber& x, const ModelParams& params,
                             int target, int depth_cap = 32);

enum class RigidityStatus { Rigid, HypothesisNotMet, DecayViolated };

struct RigidityReport {
  RigidityStatus status = RigidityStatus::HypothesisNotMet;
  int fixed_point = 0;  // 1 or 2: the forced value
  /// Per-level max |h_x - x*| as exponents e (|.| = p^e), nullopt when the
  /// whole level equals x* exactly; decreasing toward the top by at least
  /// the contraction rate.
  std::vector<std::optional<long>> level_distance_exponents;
  long contraction_rate_exponent = 0;  // per-level factor |.| <= p^(-rate)
  std::string detail;
};

/// Verifies boundary-field rigidity on a finite invariant-line
/// solution given per level (depths 1..n, scalar h per vertex). Checks the
/// recursion, the norm hypotheses (ferro: all |h| != 1; antiferro: all < 1
/// or all > 1), and the per-level geometric decay toward the forced fixed
/// point. Violated hypotheses raise HypothesisNotMet via the report.
RigidityReport field_rigidity_check(
    const std::vector<std::vector<PadicNumber>>& level_scalars,
    const ModelParams& params);

}  // namespace padic::dynamics

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "padic/cayley_tree.hpp"
#include "padic/padic_number.hpp"

namespace padic::potts {

/// Model configuration: the q+1 spin states {0,...,q}, coupling exponent N
/// (theta = p^N, ferromagnetic when N > 0), branching k of the tree.
struct ModelParams {
  long prime;
  int q;
  int coupling;  // N, nonzero
  int branching = 2;
  PrecisionConfig prec{};

  void validate() const;
  bool ferromagnetic() const { return coupling > 0; }
  PadicNumber theta() const {
    return PadicNumber::prime_power(prime, coupling, prec);
  }
  PadicNumber constant(long v) const {
    return PadicNumber::from_integer(v, prime, prec);
  }
};

/// Boundary weights h_x = (h_{0,x},...,h_{q,x}) on tree vertices. Storage is
/// translation-invariant, per-level, or fully per-vertex; lookups expand on
/// demand.
class BoundaryField {
 public:
  static BoundaryField translation_invariant(std::vector<PadicNumber> h);
  static BoundaryField per_level(std::vector<std::vector<PadicNumber>> levels);
  static BoundaryField per_vertex(std::map<tree::Vertex, std::vector<PadicNumber>> values);

  /// The invariant-line field (h0, h0,..., h0*scalar,..., h0) with the
  /// scalar at spin index `position`. Passing a fixed point of the
  /// one-dimensional system yields a recursion solution.
  static BoundaryField invariant_line(const PadicNumber& scalar,
                                      const ModelParams& params,
                                      int position = 1,
                                      std::optional<PadicNumber> h0 = std::nullopt);

  const std::vector<PadicNumber>& at(const tree::Vertex& x) const;
  /// hat-normalization (h_1/h_0, ..., h_q/h_0); h_0 must be invertible.
  std::vector<PadicNumber> hat(const tree::Vertex& x) const;

  bool is_translation_invariant() const { return mode_ == Mode::Invariant; }
  int components() const { return components_; }

 private:
  enum class Mode { Invariant, PerLevel, PerVertex };
  Mode mode_ = Mode::Invariant;
  int components_ = 0;  // q + 1
  std::vector<PadicNumber> uniform_;
  std::vector<std::vector<PadicNumber>> levels_;  // index 0 -> level 1
  std::map<tree::Vertex, std::vector<PadicNumber>> vertices_;
};

/// H_n(sigma) = N * #{edges of L_n with equal spins}; exact integer, so that
/// p^{H_n} has valuation exactly H_n.
long long hamiltonian(const tree::Configuration& sigma, const ModelParams& params);

/// p^{H_n(sigma)} * prod_{x in W_n} h_{sigma(x),x}.
PadicNumber boundary_weight(const tree::Configuration& sigma,
                            const BoundaryField& h, const ModelParams& params);

/// Partition function by exact leaf-to-root contraction of the defining sum.
PadicNumber partition_function(int depth, const BoundaryField& h,
                               const ModelParams& params);

/// Same sum evaluated term by term over Phi^{V_n}; cross-validates the
/// contraction on small slices.
PadicNumber partition_function_enumerated(int depth, const BoundaryField& h,
                                          const ModelParams& params,
                                          std::size_t cap = tree::kDefaultEnumerationCap);

struct MeasureValue {
  PadicNumber weight;
  PadicNumber partition;
  PadicNumber mu;  // weight / partition
};

MeasureValue finite_volume_measure(const tree::Configuration& sigma,
                                   const BoundaryField& h, const ModelParams& params);

/// The recursion map F_i(x; theta) = ((theta-1)x_i + sum_j x_j + 1) /
/// (sum_j x_j + theta) applied to a hat-normalized vector of length q.
std::vector<PadicNumber> recursion_map(const std::vector<PadicNumber>& hat_h,
                                       const ModelParams& params);

/// prod_{y in S(x)} F(hat_h_y; theta): component-wise product over children.
std::vector<PadicNumber> vertex_recursion_product(
    const std::vector<std::vector<PadicNumber>>& child_hats,
    const ModelParams& params);

struct CompatibilityFailure {
  tree::Configuration sigma;
  PadicNumber lhs, rhs;
  std::optional<long> difference_norm_exponent;  // e with |LHS-RHS| = p^e
};

struct CompatibilityReport {
  int depth = 0;
  long tol_exponent = 0;  // pass needs |LHS-RHS|_p <= p^(-tol)
  bool pass = false;
  std::size_t checked = 0;
  /// Largest |LHS-RHS|_p seen, as e with |diff| = p^e; absent when every
  /// difference vanished at working precision.
  std::optional<long> max_violation_exponent;
  std::vector<CompatibilityFailure> failures;  // capped
};

/// Kolmogorov-consistency check: for every sigma on V_{n-1}, the marginal
/// sum of mu^{(n)} over the boundary level must reproduce mu^{(n-1)}(sigma).
/// The omega-sum is contracted per leaf (an exact reassociation).
CompatibilityReport compatibility_check(int depth, const BoundaryField& h,
                                        const ModelParams& params,
                                        long tol_exponent,
                                        std::size_t max_failures = 8,
                                        std::size_t cap = tree::kDefaultEnumerationCap);

struct PartitionRecursionReport {
  PadicNumber prefactor;  // A_{h,n} = prod_{x in W_n} a_h(x)
  bool holds = false;
  long tol_exponent = 0;
};

/// Verifies Z_{n+1} = A_{h,n} Z_n for a field solving the recursion; the
/// per-vertex constant a_h(x) is computed from spin 0 and cross-checked
/// against every other spin (mismatch raises NotARecursionSolution).
PartitionRecursionReport partition_recursion_check(int depth, const BoundaryField& h,
                                                   const ModelParams& params,
                                                   long tol_exponent);

}  // namespace padic::potts

#include "padic/potts.hpp"

#include <algorithm>

namespace padic::potts {

using tree::Configuration;
using tree::Vertex;

void ModelParams::validate() const {
  if (prime < 2) throw Error("prime must be >= 2");
  if (q < 1) throw Error("q must be >= 1");
  if (coupling == 0) throw Error("coupling N must be nonzero");
  if (branching < 1) throw Error("branching k must be >= 1");
  prec.validate();
}

BoundaryField BoundaryField::translation_invariant(std::vector<PadicNumber> h) {
  if (h.empty()) throw Error("boundary field needs q+1 components");
  BoundaryField f;
  f.mode_ = Mode::Invariant;
  f.components_ = static_cast<int>(h.size());
  f.uniform_ = std::move(h);
  return f;
}

BoundaryField BoundaryField::per_level(std::vector<std::vector<PadicNumber>> levels) {
  if (levels.empty() || levels.front().empty())
    throw Error("per-level field needs at least one level");
  BoundaryField f;
  f.mode_ = Mode::PerLevel;
  f.components_ = static_cast<int>(levels.front().size());
  for (const auto& lv : levels)
    if (static_cast<int>(lv.size()) != f.components_)
      throw Error("per-level field has inconsistent component counts");
  f.levels_ = std::move(levels);
  return f;
}

BoundaryField BoundaryField::per_vertex(
    std::map<Vertex, std::vector<PadicNumber>> values) {
  if (values.empty()) throw Error("per-vertex field is empty");
  BoundaryField f;
  f.mode_ = Mode::PerVertex;
  f.components_ = static_cast<int>(values.begin()->second.size());
  for (const auto& [v, h] : values)
    if (static_cast<int>(h.size()) != f.components_)
      throw Error("per-vertex field has inconsistent component counts");
  f.vertices_ = std::move(values);
  return f;
}

BoundaryField BoundaryField::invariant_line(const PadicNumber& scalar,
                                            const ModelParams& params,
                                            int position,
                                            std::optional<PadicNumber> h0) {
  if (position < 1 || position > params.q)
    throw Error("invariant-line position must be in 1..q");
  PadicNumber base = h0 ? *h0 : params.constant(1);
  if (base.is_zero()) throw Error("h0 must be invertible");
  std::vector<PadicNumber> h;
  h.reserve(static_cast<std::size_t>(params.q) + 1);
  for (int i = 0; i <= params.q; ++i)
    h.push_back(i == position ? base * scalar : base);
  return translation_invariant(std::move(h));
}

const std::vector<PadicNumber>& BoundaryField::at(const Vertex& x) const {
  switch (mode_) {
    case Mode::Invariant:
      return uniform_;
    case Mode::PerLevel: {
      int level = x.level();
      if (level < 1 || level > static_cast<int>(levels_.size()))
        throw Error("field not defined at level " + std::to_string(level));
      return levels_[static_cast<std::size_t>(level - 1)];
    }
    case Mode::PerVertex: {
      auto it = vertices_.find(x);
      if (it == vertices_.end())
        throw Error("field not defined at vertex " + x.to_string());
      return it->second;
    }
  }
  throw Error("unreachable");
}

std::vector<PadicNumber> BoundaryField::hat(const Vertex& x) const {
  const auto& h = at(x);
  if (h.front().is_zero())
    throw Error("hat normalization needs invertible h_0 at " + x.to_string());
  std::vector<PadicNumber> out;
  out.reserve(h.size() - 1);
  for (std::size_t i = 1; i < h.size(); ++i) out.push_back(h[i] / h.front());
  return out;
}

long long hamiltonian(const Configuration& sigma, const ModelParams& params) {
  params.validate();
  if (sigma.domain() != Configuration::Domain::Volume)
    throw Error("hamiltonian needs a volume configuration");
  long long matches = 0;
  tree::for_each_edge(sigma.depth(), sigma.k(),
                      [&](std::size_t parent, std::size_t child) {
                        if (sigma.spin_at(parent) == sigma.spin_at(child)) ++matches;
                      });
  return static_cast<long long>(params.coupling) * matches;
}

namespace {

// Level-major flat indices of the boundary level, paired with their vertices.
std::vector<Vertex> boundary_vertices(int depth, int k) {
  std::vector<Vertex> out;
  std::vector<Vertex> frontier{Vertex{}};
  for (int m = 1; m <= depth; ++m) {
    std::vector<Vertex> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(k));
    for (const auto& v : frontier)
      for (int i = 1; i <= k; ++i) next.push_back(v.child(i));
    frontier = std::move(next);
  }
  return frontier;
}

// B_y(i) = sum_j p^{N delta_ij} h_{j,y}: the one-leaf transfer sum.
std::vector<PadicNumber> leaf_transfer(const std::vector<PadicNumber>& h,
                                       const ModelParams& params) {
  PadicNumber theta = params.theta();
  PadicNumber plain = PadicNumber::zero(params.prime, params.prec);
  for (const auto& hi : h) plain = plain + hi;
  std::vector<PadicNumber> out;
  out.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    out.push_back(plain - h[i] + theta * h[i]);
  return out;
}

}  // namespace

PadicNumber boundary_weight(const Configuration& sigma, const BoundaryField& h,
                            const ModelParams& params) {
  params.validate();
  long long H = hamiltonian(sigma, params);
  PadicNumber w = PadicNumber::prime_power(params.prime, H, params.prec);
  auto leaves = boundary_vertices(sigma.depth(), sigma.k());
  auto [begin, end] = sigma.level_range(sigma.depth());
  for (std::size_t j = 0; begin + j < end; ++j) {
    const auto& hv = h.at(leaves[j]);
    w = w * hv[static_cast<std::size_t>(sigma.spin_at(begin + j))];
  }
  return w;
}

PadicNumber partition_function(int depth, const BoundaryField& h,
                               const ModelParams& params) {
  params.validate();
  if (depth < 1) throw Error("partition_function: depth must be >= 1");
  // Bottom-up contraction. At the boundary the per-spin weight is h itself;
  // one level up each vertex absorbs its children through leaf_transfer.
  const int k = params.branching;
  std::vector<Vertex> level = boundary_vertices(depth, k);
  std::vector<std::vector<PadicNumber>> table;
  table.reserve(level.size());
  for (const auto& y : level) table.push_back(h.at(y));

  for (int m = depth - 1; m >= 1; --m) {
    std::vector<Vertex> up = boundary_vertices(m, k);
    std::vector<std::vector<PadicNumber>> next;
    next.reserve(up.size());
    for (std::size_t x = 0; x < up.size(); ++x) {
      std::vector<PadicNumber> acc;
      for (int c = 0; c < k; ++c) {
        auto b = leaf_transfer(table[x * static_cast<std::size_t>(k) +
                                     static_cast<std::size_t>(c)],
                               params);
        if (acc.empty()) {
          acc = std::move(b);
        } else {
          for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] * b[i];
        }
      }
      next.push_back(std::move(acc));
    }
    table = std::move(next);
  }

  PadicNumber z = params.constant(1);
  for (const auto& root_child : table) {
    PadicNumber s = PadicNumber::zero(params.prime, params.prec);
    for (const auto& t : root_child) s = s + t;
    z = z * s;
  }
  return z;
}

PadicNumber partition_function_enumerated(int depth, const BoundaryField& h,
                                          const ModelParams& params,
                                          std::size_t cap) {
  params.validate();
  tree::ConfigurationRange range(depth, params.q, params.branching,
                                 Configuration::Domain::Volume, cap);
  PadicNumber z = PadicNumber::zero(params.prime, params.prec);
  for (const auto& sigma : range) z = z + boundary_weight(sigma, h, params);
  return z;
}

MeasureValue finite_volume_measure(const Configuration& sigma,
                                   const BoundaryField& h,
                                   const ModelParams& params) {
  PadicNumber w = boundary_weight(sigma, h, params);
  PadicNumber z = partition_function(sigma.depth(), h, params);
  if (z.is_zero()) throw DegeneratePartitionFunction();
  return {w, z, w / z};
}

std::vector<PadicNumber> recursion_map(const std::vector<PadicNumber>& hat_h,
                                       const ModelParams& params) {
  params.validate();
  if (static_cast<int>(hat_h.size()) != params.q)
    throw Error("recursion_map expects a hat vector of length q");
  PadicNumber theta = params.theta();
  PadicNumber sum = PadicNumber::zero(params.prime, params.prec);
  for (const auto& x : hat_h) sum = sum + x;
  PadicNumber denom = sum + theta;
  if (denom.is_zero()) throw SingularRecursion();
  PadicNumber one = params.constant(1);
  std::vector<PadicNumber> out;
  out.reserve(hat_h.size());
  for (const auto& xi : hat_h)
    out.push_back(((theta - one) * xi + sum + one) / denom);
  return out;
}

std::vector<PadicNumber> vertex_recursion_product(
    const std::vector<std::vector<PadicNumber>>& child_hats,
    const ModelParams& params) {
  if (child_hats.empty()) throw Error("vertex_recursion_product: no children");
  std::vector<PadicNumber> acc;
  for (const auto& hat : child_hats) {
    auto f = recursion_map(hat, params);
    if (acc.empty()) {
      acc = std::move(f);
    } else {
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] * f[i];
    }
  }
  return acc;
}

CompatibilityReport compatibility_check(int depth, const BoundaryField& h,
                                        const ModelParams& params,
                                        long tol_exponent,
                                        std::size_t max_failures,
                                        std::size_t cap) {
  params.validate();
  if (depth < 2) throw Error("compatibility check needs depth >= 2");

  CompatibilityReport report;
  report.depth = depth;
  report.tol_exponent = tol_exponent;

  PadicNumber z_n = partition_function(depth, h, params);
  PadicNumber z_prev = partition_function(depth - 1, h, params);
  if (z_n.is_zero() || z_prev.is_zero()) throw DegeneratePartitionFunction();
  PadicNumber z_n_inv = z_n.reciprocal();
  PadicNumber z_prev_inv = z_prev.reciprocal();

  // Transfer sums of the boundary level, one per parent vertex and spin.
  const int k = params.branching;
  auto parents = boundary_vertices(depth - 1, k);
  std::vector<std::vector<PadicNumber>> absorbed;  // [parent][spin]
  absorbed.reserve(parents.size());
  for (const auto& x : parents) {
    std::vector<PadicNumber> acc;
    for (int c = 1; c <= k; ++c) {
      auto b = leaf_transfer(h.at(x.child(c)), params);
      if (acc.empty()) {
        acc = std::move(b);
      } else {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] * b[i];
      }
    }
    absorbed.push_back(std::move(acc));
  }

  tree::ConfigurationRange range(depth - 1, params.q, k,
                                 Configuration::Domain::Volume, cap);
  bool all_pass = true;
  for (const auto& sigma : range) {
    PadicNumber w = boundary_weight(sigma, h, params);
    auto [begin, end] = sigma.level_range(depth - 1);
    // Replace the boundary weights by the absorbed transfer sums: this is
    // exactly sum_omega weight(sigma v omega) after per-leaf factorization.
    PadicNumber lhs_weight =
        PadicNumber::prime_power(params.prime, hamiltonian(sigma, params), params.prec);
    for (std::size_t j = 0; begin + j < end; ++j)
      lhs_weight = lhs_weight *
                   absorbed[j][static_cast<std::size_t>(sigma.spin_at(begin + j))];
    PadicNumber lhs = lhs_weight * z_n_inv;
    PadicNumber rhs = w * z_prev_inv;
    PadicNumber diff = lhs - rhs;
    ++report.checked;

    std::optional<long> diff_exp;
    bool ok;
    if (diff.is_exact_zero()) {
      ok = true;
    } else if (diff.is_zero_at_precision()) {
      ok = diff.zero_bound() >= tol_exponent;
      if (!ok) diff_exp = -diff.zero_bound();  // only an upper bound
    } else {
      diff_exp = -diff.valuation();
      ok = diff.valuation() >= tol_exponent;
    }
    if (diff_exp &&
        (!report.max_violation_exponent || *diff_exp > *report.max_violation_exponent))
      report.max_violation_exponent = diff_exp;
    if (!ok) {
      all_pass = false;
      if (report.failures.size() < max_failures)
        report.failures.push_back({sigma, lhs, rhs, diff_exp});
    }
  }
  report.pass = all_pass;
  return report;
}

PartitionRecursionReport partition_recursion_check(int depth,
                                                   const BoundaryField& h,
                                                   const ModelParams& params,
                                                   long tol_exponent) {
  params.validate();
  if (depth < 1) throw Error("partition recursion check needs depth >= 1");

  const int k = params.branching;
  PadicNumber prefactor = params.constant(1);
  for (const auto& x : boundary_vertices(depth, k)) {
    const auto& hx = h.at(x);
    std::vector<PadicNumber> acc;
    for (int c = 1; c <= k; ++c) {
      auto b = leaf_transfer(h.at(x.child(c)), params);
      if (acc.empty()) {
        acc = std::move(b);
      } else {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] * b[i];
      }
    }
    if (hx.front().is_zero()) throw NotARecursionSolution("h_0 vanishes at " + x.to_string());
    PadicNumber a = acc.front() / hx.front();
    for (std::size_t i = 1; i < acc.size(); ++i) {
      if (hx[i].is_zero()) throw NotARecursionSolution("h_i vanishes at " + x.to_string());
      PadicNumber ai = acc[i] / hx[i];
      if (!ai.within(a, tol_exponent))
        throw NotARecursionSolution(
            "a_h(" + x.to_string() + ") differs between spins 0 and " +
            std::to_string(i));
    }
    prefactor = prefactor * a;
  }

  PadicNumber z_next = partition_function(depth + 1, h, params);
  PadicNumber z = partition_function(depth, h, params);
  return {prefactor, z_next.within(prefactor * z, tol_exponent), tol_exponent};
}

}  // namespace padic::potts

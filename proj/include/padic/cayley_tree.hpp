#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "padic/errors.hpp"

namespace padic::tree {

/// Vertex of the rooted Cayley tree, addressed by its path from the root:
/// a sequence of child indices in {1,...,k}. The empty path is the root.
struct Vertex {
  std::vector<int> path;

  int level() const { return static_cast<int>(path.size()); }
  bool is_root() const { return path.empty(); }
  Vertex child(int i) const {
    Vertex c = *this;
    c.path.push_back(i);
    return c;
  }
  std::string to_string() const;         // "1.2.1", root is "(0)"
  static Vertex parse(const std::string& text);

  auto operator<=>(const Vertex&) const = default;
};

struct TreeCounts {
  long long level_size;  // |W_n|
  long long volume;      // |V_n| = sum of levels 1..n (root excluded)
  long long edges;       // |L_n|, edges with both endpoints inside V_n
};

/// |W_n| = k^n, |V_n| = k + k^2 + ... + k^n, |L_n| = |V_n| - k; the k edges
/// touching the root fall outside V_n and are not counted.
TreeCounts tree_counts(int k, int n);

std::vector<Vertex> direct_successors(const Vertex& x, int k);

/// Spin assignment on a slice of the tree: either the full volume V_n
/// (levels 1..n, root excluded) or the single boundary level W_n.
/// Spins are stored level-major, lexicographic within each level, which is
/// also the order `flat_index` exposes.
class Configuration {
 public:
  enum class Domain { Volume, Level };

  Configuration(int depth, int q, int k, Domain domain);

  int depth() const { return depth_; }
  int q() const { return q_; }
  int k() const { return k_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return spins_.size(); }

  int spin_at(std::size_t flat_index) const { return spins_[flat_index]; }
  void set_spin_at(std::size_t flat_index, int s) { spins_[flat_index] = s; }
  int spin(const Vertex& x) const;
  void set_spin(const Vertex& x, int s);

  /// Slice of the flat spin array covering one level (Volume domain).
  std::pair<std::size_t, std::size_t> level_range(int level) const;

  /// #{x in W_depth : spin(x) == value}.
  int boundary_count(int value) const;

  const std::vector<int>& spins() const { return spins_; }

  bool operator==(const Configuration&) const = default;

 private:
  std::size_t flat_index(const Vertex& x) const;

  int depth_, q_, k_;
  Domain domain_;
  std::vector<int> spins_;
};

/// sigma on V_{n-1} joined with omega on W_n, giving a volume configuration
/// of depth n.
Configuration concat(const Configuration& sigma, const Configuration& omega);

/// Visits every parent-child edge inside V_n (levels 1..n) as a pair of
/// flat indices into a Volume configuration of depth n.
void for_each_edge(int depth, int k,
                   const std::function<void(std::size_t parent, std::size_t child)>& fn);

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 24;

/// Exhaustive lexicographic enumeration of Phi^{V_n} or Phi^{W_n}.
/// The first spin slot is the most significant. Throws EnumerationTooLarge
/// (with the exact cardinality) when (q+1)^slots exceeds the cap.
class ConfigurationRange {
 public:
  ConfigurationRange(int depth, int q, int k, Configuration::Domain domain,
                     std::size_t cap = kDefaultEnumerationCap);

  std::size_t count() const { return count_; }

  class iterator {
   public:
    iterator() = default;
    iterator(const ConfigurationRange* range, bool at_end);
    const Configuration& operator*() const { return current_; }
    const Configuration* operator->() const { return &current_; }
    iterator& operator++();
    bool operator!=(const iterator& other) const { return done_ != other.done_; }

   private:
    const ConfigurationRange* range_ = nullptr;
    Configuration current_{1, 1, 2, Configuration::Domain::Volume};
    bool done_ = true;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

 private:
  friend class iterator;
  int depth_, q_, k_;
  Configuration::Domain domain_;
  std::size_t count_;
};

}  // namespace padic::tree

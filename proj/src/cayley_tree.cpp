#include "padic/cayley_tree.hpp"

#include <gmpxx.h>

#include <sstream>

namespace padic::tree {

std::string Vertex::to_string() const {
  if (path.empty()) return "(0)";
  std::ostringstream os;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) os << '.';
    os << path[i];
  }
  return os.str();
}

Vertex Vertex::parse(const std::string& text) {
  Vertex v;
  if (text.empty() || text == "(0)") return v;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, '.')) {
    int d = std::stoi(part);
    if (d < 1) throw Error("vertex path digits must be >= 1");
    v.path.push_back(d);
  }
  return v;
}

TreeCounts tree_counts(int k, int n) {
  if (k < 1 || n < 1) throw Error("tree_counts: need k >= 1 and n >= 1");
  TreeCounts c{1, 0, 0};
  long long level = 1;
  for (int m = 1; m <= n; ++m) {
    level *= k;
    c.volume += level;
  }
  c.level_size = level;
  c.edges = c.volume - k;
  return c;
}

std::vector<Vertex> direct_successors(const Vertex& x, int k) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) out.push_back(x.child(i));
  return out;
}

Configuration::Configuration(int depth, int q, int k, Domain domain)
    : depth_(depth), q_(q), k_(k), domain_(domain) {
  if (depth < 1 || q < 1 || k < 1) throw Error("Configuration: bad parameters");
  auto counts = tree_counts(k, depth);
  std::size_t slots = domain == Domain::Volume
                          ? static_cast<std::size_t>(counts.volume)
                          : static_cast<std::size_t>(counts.level_size);
  spins_.assign(slots, 0);
}

std::pair<std::size_t, std::size_t> Configuration::level_range(int level) const {
  if (domain_ != Domain::Volume) throw Error("level_range: not a volume configuration");
  if (level < 1 || level > depth_) throw Error("level_range: level out of range");
  std::size_t offset = 0, pw = 1;
  for (int m = 1; m < level; ++m) {
    pw *= static_cast<std::size_t>(k_);
    offset += pw;
  }
  pw *= static_cast<std::size_t>(k_);
  return {offset, offset + pw};
}

std::size_t Configuration::flat_index(const Vertex& x) const {
  if (x.is_root()) throw Error("configurations do not cover the root");
  int level = x.level();
  std::size_t within = 0;
  for (int d : x.path) {
    if (d < 1 || d > k_) throw Error("vertex path digit out of range");
    within = within * static_cast<std::size_t>(k_) + static_cast<std::size_t>(d - 1);
  }
  if (domain_ == Domain::Level) {
    if (level != depth_) throw Error("vertex not on the boundary level");
    return within;
  }
  if (level > depth_) throw Error("vertex outside the volume");
  std::size_t offset = 0, pw = 1;
  for (int m = 1; m < level; ++m) {
    pw *= static_cast<std::size_t>(k_);
    offset += pw;
  }
  return offset + within;
}

int Configuration::spin(const Vertex& x) const { return spins_[flat_index(x)]; }

void Configuration::set_spin(const Vertex& x, int s) {
  if (s < 0 || s > q_) throw Error("spin value out of range");
  spins_[flat_index(x)] = s;
}

int Configuration::boundary_count(int value) const {
  std::size_t begin = 0, end = spins_.size();
  if (domain_ == Domain::Volume) std::tie(begin, end) = level_range(depth_);
  int c = 0;
  for (std::size_t i = begin; i < end; ++i)
    if (spins_[i] == value) ++c;
  return c;
}

Configuration concat(const Configuration& sigma, const Configuration& omega) {
  if (sigma.domain() != Configuration::Domain::Volume ||
      omega.domain() != Configuration::Domain::Level)
    throw Error("concat: expected a volume configuration and a level configuration");
  if (omega.depth() != sigma.depth() + 1 || omega.q() != sigma.q() ||
      omega.k() != sigma.k())
    throw Error("concat: incompatible slices");
  Configuration out(omega.depth(), sigma.q(), sigma.k(),
                    Configuration::Domain::Volume);
  for (std::size_t i = 0; i < sigma.size(); ++i)
    out.set_spin_at(i, sigma.spin_at(i));
  for (std::size_t i = 0; i < omega.size(); ++i)
    out.set_spin_at(sigma.size() + i, omega.spin_at(i));
  return out;
}

void for_each_edge(int depth, int k,
                   const std::function<void(std::size_t, std::size_t)>& fn) {
  // Parent of the j-th vertex (0-based) at level m is the (j/k)-th at m-1.
  std::size_t parent_offset = 0, offset = static_cast<std::size_t>(k), pw =
      static_cast<std::size_t>(k);
  for (int m = 2; m <= depth; ++m) {
    pw *= static_cast<std::size_t>(k);
    for (std::size_t j = 0; j < pw; ++j)
      fn(parent_offset + j / static_cast<std::size_t>(k), offset + j);
    parent_offset = offset;
    offset += pw;
  }
}

ConfigurationRange::ConfigurationRange(int depth, int q, int k,
                                       Configuration::Domain domain,
                                       std::size_t cap)
    : depth_(depth), q_(q), k_(k), domain_(domain) {
  Configuration probe(depth, q, k, domain);
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(q + 1),
                static_cast<unsigned long>(probe.size()));
  if (total > cap)
    throw EnumerationTooLarge(
        "configuration space of size " + total.get_str() +
            " exceeds the enumeration cap " + std::to_string(cap),
        total.get_str());
  count_ = static_cast<std::size_t>(total.get_ui());
}

ConfigurationRange::iterator::iterator(const ConfigurationRange* range, bool at_end)
    : range_(range),
      current_(range->depth_, range->q_, range->k_, range->domain_),
      done_(at_end) {}

ConfigurationRange::iterator& ConfigurationRange::iterator::operator++() {
  // Odometer with the last slot least significant: lexicographic order.
  const int q = range_->q_;
  std::size_t i = current_.size();
  while (i > 0) {
    --i;
    int s = current_.spin_at(i);
    if (s < q) {
      current_.set_spin_at(i, s + 1);
      return *this;
    }
    current_.set_spin_at(i, 0);
  }
  done_ = true;
  return *this;
}

}  // namespace padic::tree

#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "permldpc/binary_matrix.hpp"

namespace permldpc {

/// Shortest cycle length of a Tanner graph, or infinity for a forest.
class Girth {
 public:
  constexpr Girth() = default;
  constexpr explicit Girth(std::size_t length) : length_(length) {}
  static constexpr Girth infinite() { return Girth(); }

  constexpr bool is_infinite() const { return length_ == kInfinite; }
  constexpr std::size_t length() const { return length_; }

  friend constexpr auto operator<=>(const Girth&, const Girth&) = default;

 private:
  static constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
  std::size_t length_ = kInfinite;
};

std::string to_string(Girth g);

/// Bipartite graph of a parity-check matrix. Variable node c is column c,
/// check node r is row r.
class TannerGraph {
 public:
  explicit TannerGraph(const BinaryMatrix& h);

  std::size_t variable_count() const noexcept { return var_adj_.size(); }
  std::size_t check_count() const noexcept { return check_adj_.size(); }
  const std::vector<std::size_t>& checks_of(std::size_t var) const { return var_adj_[var]; }
  const std::vector<std::size_t>& variables_of(std::size_t check) const { return check_adj_[check]; }

 private:
  std::vector<std::vector<std::size_t>> var_adj_;
  std::vector<std::vector<std::size_t>> check_adj_;
};

namespace oracle {

/// Exact girth by breadth-first search from every variable node, excluding
/// the edge back to the BFS parent. Independent of how `h` was built.
Girth girth(const BinaryMatrix& h);
Girth girth(const TannerGraph& g);

/// Whether the Tanner graph has a cycle of exactly `length` edges, all nodes
/// distinct. `length` must be even and in 4..12 (ArgumentError otherwise).
bool has_cycle_of_length(const BinaryMatrix& h, std::size_t length);
bool has_cycle_of_length(const TannerGraph& g, std::size_t length);

}  // namespace oracle

}  // namespace permldpc

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permldpc {

using Symbol = std::uint32_t;

/// Disjoint-cycle factorization of a permutation on 0..n-1. Fixed points are
/// omitted, so an empty `cycles` list denotes the identity.
struct CycleNotation {
  std::size_t n = 0;
  std::vector<std::vector<Symbol>> cycles;
};

/// A bijection on Z_n stored as its image table, image[x] = f(x).
///
/// The disjoint-cycle structure is computed once at construction so that
/// any power f^e can be evaluated at a point in O(1) and the existence of
/// fixed points of f^e is answered from the set of cycle lengths alone.
class Permutation {
 public:
  /// Throws DomainSizeError for n == 0 or when `image` is not a bijection,
  /// ArgumentError when the order overflows 64 bits.
  explicit Permutation(std::vector<Symbol> image);

  static Permutation identity(std::size_t n);
  /// x -> x + 1 mod n.
  static Permutation m_cycle(std::size_t n);
  static Permutation from_cycles(const CycleNotation& notation);

  std::size_t size() const noexcept { return image_.size(); }
  Symbol operator()(Symbol x) const { return image_[x]; }
  std::span<const Symbol> image() const noexcept { return image_; }

  /// lcm of the disjoint-cycle lengths.
  std::uint64_t order() const noexcept { return order_; }

  bool is_derangement() const noexcept;
  std::vector<Symbol> fixed_points() const;
  Permutation inverse() const;
  CycleNotation cycles() const;

  /// f^e(x) without materializing f^e. `e` is any integer.
  Symbol apply_power(Symbol x, std::int64_t e) const;

  /// Whether f^e has a fixed point, i.e. some cycle length divides e.
  bool power_has_fixed_point(std::int64_t e) const;

  /// Length of the cycle of f containing x.
  std::size_t cycle_length_of(Symbol x) const { return cycle_len_[cycle_id_[x]]; }

  /// Distinct cycle lengths, ascending (1 included when f has fixed points).
  std::span<const std::size_t> cycle_lengths() const noexcept { return distinct_lengths_; }

  /// Smallest point of each cycle of f (orbit representatives), ascending.
  std::vector<Symbol> orbit_representatives() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<Symbol> image_;
  // Flattened cycles: cycle c occupies members_[start_[c] .. start_[c] + len_[c]).
  std::vector<Symbol> members_;
  std::vector<std::size_t> cycle_start_;
  std::vector<std::size_t> cycle_len_;
  std::vector<std::uint32_t> cycle_id_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> distinct_lengths_;
  std::uint64_t order_ = 1;
};

/// result(x) = g(h(x)). Throws DomainSizeError on size mismatch.
Permutation compose(const Permutation& g, const Permutation& h);

/// k-fold composition; k is reduced mod order(f) first, so negative k gives
/// powers of the inverse.
Permutation power(const Permutation& f, std::int64_t k);

/// Non-negative representative of k mod m.
std::uint64_t reduce_mod(std::int64_t k, std::uint64_t m);

/// Parses `(0 1 2)(3 4)` or `id`. Without `n` the domain size is one more
/// than the largest symbol; `id` then requires `n`.
CycleNotation parse_cycle_notation(std::string_view text,
                                   std::optional<std::size_t> n = std::nullopt);

/// Parses cycle notation, `cycle:<n>` (the n-cycle x -> x+1) or `id:<n>`.
Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> n = std::nullopt);

std::string to_string(const CycleNotation& notation);
std::string to_string(const Permutation& f);

}  // namespace permldpc

#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permldpc {

using Residue = std::uint64_t;

/// A set of residues mod m, stored sorted and duplicate-free.
class ResidueSet {
 public:
  /// The empty set mod 1.
  ResidueSet() = default;
  /// Reduces each value mod `modulus`. Throws MalformedSetError if two values
  /// collide after reduction and ArgumentError for a zero modulus.
  ResidueSet(std::uint64_t modulus, std::span<const std::int64_t> values);
  ResidueSet(std::uint64_t modulus, std::initializer_list<std::int64_t> values);

  /// Builds from arbitrary residues, silently merging duplicates.
  static ResidueSet collect(std::uint64_t modulus, std::vector<Residue> residues);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::span<const Residue> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(Residue r) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::uint64_t modulus_ = 1;
  std::vector<Residue> elements_;
};

/// {a - b : a, b in B, a != b}. Never contains 0.
ResidueSet difference_set(const ResidueSet& b);

/// {a + b : a, b in B}, a == b allowed.
ResidueSet sum_set(const ResidueSet& b);

/// {a * b mod m : a in A, b in B}. Throws ModulusMismatchError.
ResidueSet product_set(const ResidueSet& a, const ResidueSet& b);

/// Whether all t-element multisets drawn from B have distinct sums mod m.
/// For t > 2 the multisets are enumerated, guarded by |B|^t <= 10^7
/// (ArgumentError beyond that).
bool is_bt_set(const ResidueSet& b, unsigned t);

/// The three characterizations of a Sidon B2 set, each computed on its own:
/// the multiset-sum definition, the sum-set cardinality and the absence of 0
/// among differences of sums taken over distinct index pairs.
struct B2Equivalences {
  bool distinct_pair_sums = false;
  bool full_sum_set = false;
  bool zero_free_sum_differences = false;

  bool agree() const {
    return distinct_pair_sums == full_sum_set && full_sum_set == zero_free_sum_differences;
  }
};

B2Equivalences b2_equivalences(const ResidueSet& b);

/// i_1 = 0, i_l = 1 + 2 i_{l-1}, i.e. {0, 1, 3, 7, 15, ...}, over the
/// integers. Any odd modulus exceeding every pairwise sum, i.e. at least
/// `min_odd_modulus`, keeps it a B2 set after reduction.
struct GreedyB2 {
  std::vector<std::int64_t> elements;
  std::uint64_t min_odd_modulus = 1;

  ResidueSet reduce(std::uint64_t modulus) const;
};

/// Throws ArgumentError for count == 0 or count > 62.
GreedyB2 greedy_b2(std::size_t count);

enum class SequenceKind {
  // (a_0, ..., a_t) with a_i != a_{i+1} and a_t != a_0.
  S,
  // (a_0 - a_t, a_1 - a_0, ..., a_t - a_{t-1}) for each S-sequence.
  d,
};

struct ExponentSequence {
  std::uint64_t modulus = 1;
  std::vector<Residue> terms;
  SequenceKind kind = SequenceKind::S;

  friend bool operator==(const ExponentSequence&, const ExponentSequence&) = default;
};

/// Lazy, lexicographically ordered stream of the t+1-term sequences of B
/// (indices into B's sorted elements define the order).
class SequenceStream {
 public:
  SequenceStream(ResidueSet set, unsigned t, SequenceKind kind);

  std::optional<ExponentSequence> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ExponentSequence;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(SequenceStream* stream) : stream_(stream) { ++*this; }

    const ExponentSequence& operator*() const { return *current_; }
    const ExponentSequence* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

   private:
    SequenceStream* stream_ = nullptr;
    std::optional<ExponentSequence> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  bool advance();
  bool valid_closure() const;

  ResidueSet set_;
  SequenceKind kind_;
  std::vector<std::size_t> index_;
  bool started_ = false;
  bool exhausted_ = false;
};

SequenceStream enumerate_sequences(const ResidueSet& b, unsigned t, SequenceKind kind);

/// Parses `{0, 1, 4, 6, 13}`; braces optional, negatives reduced mod m.
ResidueSet parse_residue_set(std::string_view text, std::uint64_t modulus);

/// `{0, 1, 4}` with canonical residues.
std::string to_string(const ResidueSet& b);

/// Signed display: each residue shown as its representative in
/// (-m/2, m/2], and pairs {x, -x} folded into `±x`.
std::string to_signed_string(const ResidueSet& b);

}  // namespace permldpc

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permldpc/binary_matrix.hpp"
#include "permldpc/permutation.hpp"
#include "permldpc/residue_set.hpp"

namespace permldpc {

/// One block of a proto-matrix: the identity, a power f^e of the generator,
/// or the all-zero block.
class BlockEntry {
 public:
  enum class Kind { Zero, Identity, Power };

  static BlockEntry zero() { return BlockEntry(Kind::Zero, 0); }
  static BlockEntry identity() { return BlockEntry(Kind::Identity, 0); }
  /// Reduces e mod `order`; f^0 becomes Identity.
  static BlockEntry power(std::int64_t e, std::uint64_t order);

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  /// 0 for Identity. Meaningless for Zero.
  std::uint64_t exponent() const noexcept { return exponent_; }

  friend bool operator==(const BlockEntry&, const BlockEntry&) = default;

 private:
  BlockEntry(Kind kind, std::uint64_t e) : kind_(kind), exponent_(e) {}
  Kind kind_;
  std::uint64_t exponent_;
};

/// Coefficient set A (one element per block row) and exponent set I (one per
/// block column) a regular proto-matrix was built from.
struct Provenance {
  ResidueSet coefficients;
  ResidueSet exponents;
};

/// A grid of blocks that are all powers of one generator permutation, lifted
/// by the generator's domain size n.
class ProtoMatrix {
 public:
  /// Hand-built grid; rows must have equal length. Throws ArgumentError for
  /// an empty or ragged grid.
  ProtoMatrix(Permutation generator, std::vector<std::vector<BlockEntry>> grid);

  const Permutation& generator() const noexcept { return generator_; }
  std::size_t lift() const noexcept { return generator_.size(); }
  std::uint64_t order() const noexcept { return generator_.order(); }
  std::size_t block_rows() const noexcept { return rows_; }
  std::size_t block_cols() const noexcept { return cols_; }

  const BlockEntry& at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }

  /// Present only for grids produced by build_regular.
  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

  friend bool operator==(const ProtoMatrix& a, const ProtoMatrix& b) {
    return a.generator_ == b.generator_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  friend ProtoMatrix build_regular(const Permutation&, const ResidueSet&, const ResidueSet&);

  Permutation generator_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BlockEntry> entries_;
  std::optional<Provenance> provenance_;
};

/// |A| x |I| grid with block (k, j) = f^(A_k * i_j mod m), m = order(f).
/// Both sets must be taken mod m and contain 0 (MalformedSetError otherwise,
/// ModulusMismatchError for a wrong modulus).
ProtoMatrix build_regular(const Permutation& f, const ResidueSet& coefficients,
                          const ResidueSet& exponents);

/// Block (l, j) becomes the permutation matrix with a one at (R(k), k) for
/// each column k, or zeros.
BinaryMatrix expand(const ProtoMatrix& p);

struct ColumnExtension {
  std::size_t block_row = 0;
  std::int64_t exponent = 0;
};

/// Appends one column block per extension with f^exponent at `block_row` and
/// zero blocks elsewhere. The result carries no provenance. Throws
/// BlockIndexError for an out-of-range row.
ProtoMatrix extend_irregular(const ProtoMatrix& p, std::span<const ColumnExtension> additions);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& r);

struct CodeParameters {
  std::size_t length = 0;     // columns of the expansion
  std::size_t rank = 0;       // GF(2) rank
  std::size_t dimension = 0;  // length - rank
  Rational rate;
};

CodeParameters code_parameters(const BinaryMatrix& h);

/// Exact (cols - rank) / cols of the expansion, reduced.
Rational rate(const ProtoMatrix& p);

/// One line per block row, entries `1`, `f^e` or `0`.
std::string format_proto(const ProtoMatrix& p);

/// Inverse of format_proto for the given generator; `f^-3` style negative
/// exponents are accepted and reduced.
ProtoMatrix parse_proto(std::string_view text, const Permutation& generator);

}  // namespace permldpc

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace permldpc {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row_words(r)[c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row_words(std::size_t r) {
    return {bits_.data() + r * words_, words_};
  }

  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;

  /// Column indices of the ones in row r, ascending.
  std::vector<std::size_t> row_support(std::size_t r) const;
  /// Row indices of the ones in column c, ascending.
  std::vector<std::size_t> col_support(std::size_t c) const;

  BinaryMatrix transpose() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2) by Gaussian elimination on packed rows.
std::size_t gf2_rank(const BinaryMatrix& m);

/// Writes the alist sparse format: "cols rows", max column/row weights,
/// the weight lists, then 1-based row indices per column and column indices
/// per row, zero-padded to the maximum weight.
void write_alist(std::ostream& out, const BinaryMatrix& m);
std::string to_alist(const BinaryMatrix& m);

/// Reads the format produced by write_alist. Throws ParseError on malformed
/// input, including column and row lists that disagree.
BinaryMatrix read_alist(std::istream& in);
BinaryMatrix parse_alist(const std::string& text);

}  // namespace permldpc

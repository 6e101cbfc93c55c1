#include "permldpc/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "permldpc/error.hpp"

namespace permldpc {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t& word = row_words(r)[c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (std::uint64_t word : row_words(r)) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::size_t BinaryMatrix::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
  return w;
}

std::vector<std::size_t> BinaryMatrix::row_support(std::size_t r) const {
  std::vector<std::size_t> out;
  const auto words = row_words(r);
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t word = words[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<std::size_t> BinaryMatrix::col_support(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) out.push_back(r);
  return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c : row_support(r)) t.set(c, r);
  return t;
}

std::size_t gf2_rank(const BinaryMatrix& m) {
  const std::size_t words = m.words_per_row();
  std::vector<std::uint64_t> a;
  a.reserve(m.rows() * words);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row_words(r);
    a.insert(a.end(), row.begin(), row.end());
  }
  auto row = [&](std::size_t r) { return a.data() + r * words; };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(row(pivot)[w] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) std::swap_ranges(row(pivot), row(pivot) + words, row(rank));
    const std::uint64_t* p = row(rank);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      std::uint64_t* q = row(r);
      if (!(q[w] & mask)) continue;
      // Columns left of c are already zero in both rows.
      for (std::size_t k = w; k < words; ++k) q[k] ^= p[k];
    }
    ++rank;
  }
  return rank;
}

void write_alist(std::ostream& out, const BinaryMatrix& m) {
  std::vector<std::vector<std::size_t>> cols(m.cols());
  std::vector<std::vector<std::size_t>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r] = m.row_support(r);
    for (std::size_t c : rows[r]) cols[c].push_back(r);
  }
  std::size_t max_col = 0;
  std::size_t max_row = 0;
  for (const auto& c : cols) max_col = std::max(max_col, c.size());
  for (const auto& r : rows) max_row = std::max(max_row, r.size());

  auto write_weights = [&](const std::vector<std::vector<std::size_t>>& lists) {
    for (std::size_t i = 0; i < lists.size(); ++i) out << (i ? " " : "") << lists[i].size();
    out << '\n';
  };
  auto write_lists = [&](const std::vector<std::vector<std::size_t>>& lists, std::size_t width) {
    for (const auto& list : lists) {
      for (std::size_t i = 0; i < width; ++i) {
        out << (i ? " " : "") << (i < list.size() ? list[i] + 1 : 0);
      }
      out << '\n';
    }
  };

  out << m.cols() << ' ' << m.rows() << '\n';
  out << max_col << ' ' << max_row << '\n';
  write_weights(cols);
  write_weights(rows);
  write_lists(cols, max_col);
  write_lists(rows, max_row);
}

std::string to_alist(const BinaryMatrix& m) {
  std::ostringstream os;
  write_alist(os, m);
  return os.str();
}

namespace {

// Token reader that tracks line numbers for diagnostics.
class AlistReader {
 public:
  explicit AlistReader(std::istream& in) : in_(in) {}

  std::size_t next(const char* what) {
    skip_space();
    const std::size_t column = column_;
    std::size_t v = 0;
    bool any = false;
    while (true) {
      const int ch = in_.peek();
      if (ch < '0' || ch > '9') break;
      v = v * 10 + static_cast<std::size_t>(in_.get() - '0');
      ++column_;
      any = true;
    }
    if (!any) {
      const int ch = in_.peek();
      throw ParseError(std::string("expected ") + what +
                           (ch == std::char_traits<char>::eof() ? " before end of input" : ""),
                       line_, column);
    }
    return v;
  }

  std::size_t line() const { return line_; }

 private:
  void skip_space() {
    while (true) {
      const int ch = in_.peek();
      if (ch == '\n') {
        in_.get();
        ++line_;
        column_ = 1;
      } else if (ch == ' ' || ch == '\t' || ch == '\r') {
        in_.get();
        ++column_;
      } else {
        return;
      }
    }
  }

  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

BinaryMatrix read_alist(std::istream& in) {
  AlistReader reader(in);
  const std::size_t cols = reader.next("column count");
  const std::size_t rows = reader.next("row count");
  const std::size_t max_col = reader.next("maximum column weight");
  const std::size_t max_row = reader.next("maximum row weight");
  std::vector<std::size_t> col_w(cols);
  std::vector<std::size_t> row_w(rows);
  for (auto& w : col_w) {
    w = reader.next("column weight");
    if (w > max_col) throw ParseError("column weight exceeds declared maximum", reader.line(), 1);
  }
  for (auto& w : row_w) {
    w = reader.next("row weight");
    if (w > max_row) throw ParseError("row weight exceeds declared maximum", reader.line(), 1);
  }

  BinaryMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = 0; i < max_col; ++i) {
      const std::size_t r = reader.next("row index");
      if (i < col_w[c]) {
        if (r == 0 || r > rows) throw ParseError("row index out of range", reader.line(), 1);
        m.set(r - 1, c);
      } else if (r != 0) {
        throw ParseError("expected 0 padding", reader.line(), 1);
      }
    }
  }
  BinaryMatrix by_rows(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < max_row; ++i) {
      const std::size_t c = reader.next("column index");
      if (i < row_w[r]) {
        if (c == 0 || c > cols) throw ParseError("column index out of range", reader.line(), 1);
        by_rows.set(r, c - 1);
      } else if (c != 0) {
        throw ParseError("expected 0 padding", reader.line(), 1);
      }
    }
  }
  if (!(m == by_rows)) throw ParseError("column and row lists disagree", reader.line(), 1);
  for (std::size_t c = 0; c < cols; ++c)
    if (m.col_weight(c) != col_w[c])
      throw ParseError("repeated index in column list", reader.line(), 1);
  for (std::size_t r = 0; r < rows; ++r)
    if (m.row_weight(r) != row_w[r]) throw ParseError("repeated index in row list", reader.line(), 1);
  return m;
}

BinaryMatrix parse_alist(const std::string& text) {
  std::istringstream is(text);
  return read_alist(is);
}

}  // namespace permldpc

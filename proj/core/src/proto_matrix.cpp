#include "permldpc/proto_matrix.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "permldpc/error.hpp"

namespace permldpc {

BlockEntry BlockEntry::power(std::int64_t e, std::uint64_t order) {
  const std::uint64_t r = reduce_mod(e, order);
  return r == 0 ? identity() : BlockEntry(Kind::Power, r);
}

ProtoMatrix::ProtoMatrix(Permutation generator, std::vector<std::vector<BlockEntry>> grid)
    : generator_(std::move(generator)) {
  if (grid.empty() || grid.front().empty()) throw ArgumentError("proto-matrix grid is empty");
  rows_ = grid.size();
  cols_ = grid.front().size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : grid) {
    if (row.size() != cols_) throw ArgumentError("proto-matrix rows differ in length");
    for (const BlockEntry& e : row) {
      if (e.kind() == BlockEntry::Kind::Power && (e.exponent() == 0 || e.exponent() >= order()))
        throw ArgumentError("block exponent " + std::to_string(e.exponent()) +
                            " not reduced mod " + std::to_string(order()));
      entries_.push_back(e);
    }
  }
}

ProtoMatrix build_regular(const Permutation& f, const ResidueSet& coefficients,
                          const ResidueSet& exponents) {
  const std::uint64_t m = f.order();
  for (const ResidueSet* s : {&coefficients, &exponents}) {
    if (s->modulus() != m)
      throw ModulusMismatchError("set taken mod " + std::to_string(s->modulus()) +
                                 " but the generator has order " + std::to_string(m));
    if (!s->contains(0)) throw MalformedSetError("set " + to_string(*s) + " must contain 0");
  }
  std::vector<std::vector<BlockEntry>> grid;
  grid.reserve(coefficients.size());
  for (Residue a : coefficients.elements()) {
    auto& row = grid.emplace_back();
    row.reserve(exponents.size());
    for (Residue i : exponents.elements()) {
      const auto e = static_cast<Residue>((static_cast<unsigned __int128>(a) * i) % m);
      row.push_back(e == 0 ? BlockEntry::identity() : BlockEntry::power(static_cast<std::int64_t>(e), m));
    }
  }
  ProtoMatrix p(f, std::move(grid));
  p.provenance_ = Provenance{coefficients, exponents};
  return p;
}

BinaryMatrix expand(const ProtoMatrix& p) {
  const std::size_t n = p.lift();
  BinaryMatrix h(p.block_rows() * n, p.block_cols() * n);
  const Permutation& f = p.generator();
  for (std::size_t l = 0; l < p.block_rows(); ++l) {
    for (std::size_t j = 0; j < p.block_cols(); ++j) {
      const BlockEntry& e = p.at(l, j);
      if (e.is_zero()) continue;
      const auto exp = static_cast<std::int64_t>(e.exponent());
      for (Symbol k = 0; k < n; ++k) h.set(l * n + f.apply_power(k, exp), j * n + k);
    }
  }
  return h;
}

ProtoMatrix extend_irregular(const ProtoMatrix& p, std::span<const ColumnExtension> additions) {
  std::vector<std::vector<BlockEntry>> grid(p.block_rows());
  for (std::size_t r = 0; r < p.block_rows(); ++r) {
    grid[r].reserve(p.block_cols() + additions.size());
    for (std::size_t c = 0; c < p.block_cols(); ++c) grid[r].push_back(p.at(r, c));
  }
  for (const ColumnExtension& add : additions) {
    if (add.block_row >= p.block_rows())
      throw BlockIndexError("extension row " + std::to_string(add.block_row) + " outside 0.." +
                            std::to_string(p.block_rows() - 1));
    for (std::size_t r = 0; r < p.block_rows(); ++r)
      grid[r].push_back(r == add.block_row ? BlockEntry::power(add.exponent, p.order())
                                           : BlockEntry::zero());
  }
  if (additions.empty()) return p;
  return ProtoMatrix(p.generator(), std::move(grid));
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

CodeParameters code_parameters(const BinaryMatrix& h) {
  CodeParameters out;
  out.length = h.cols();
  out.rank = gf2_rank(h);
  out.dimension = out.length - out.rank;
  if (out.length == 0) return out;
  const std::uint64_t g = std::gcd<std::uint64_t>(out.dimension, out.length);
  out.rate = Rational{out.dimension / g, out.length / g};
  return out;
}

Rational rate(const ProtoMatrix& p) { return code_parameters(expand(p)).rate; }

std::string format_proto(const ProtoMatrix& p) {
  std::ostringstream os;
  for (std::size_t r = 0; r < p.block_rows(); ++r) {
    for (std::size_t c = 0; c < p.block_cols(); ++c) {
      const BlockEntry& e = p.at(r, c);
      if (c) os << ' ';
      switch (e.kind()) {
        case BlockEntry::Kind::Zero: os << '0'; break;
        case BlockEntry::Kind::Identity: os << '1'; break;
        case BlockEntry::Kind::Power: os << "f^" << e.exponent(); break;
      }
    }
    os << '\n';
  }
  return os.str();
}

ProtoMatrix parse_proto(std::string_view text, const Permutation& generator) {
  std::vector<std::vector<BlockEntry>> grid;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    begin = end + 1;

    std::vector<BlockEntry> row;
    std::size_t pos = 0;
    while (true) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size() || line[pos] == '#') break;
      const std::size_t col = pos + 1;
      std::size_t stop = pos;
      while (stop < line.size() && !std::isspace(static_cast<unsigned char>(line[stop]))) ++stop;
      const std::string_view token = line.substr(pos, stop - pos);
      pos = stop;
      if (token == "0") {
        row.push_back(BlockEntry::zero());
      } else if (token == "1") {
        row.push_back(BlockEntry::identity());
      } else if (token.starts_with("f^") || token == "f") {
        std::int64_t e = 1;
        if (token != "f") {
          std::string_view digits = token.substr(2);
          bool negative = false;
          if (!digits.empty() && digits.front() == '-') {
            negative = true;
            digits.remove_prefix(1);
          }
          if (digits.empty()) throw ParseError("missing exponent after 'f^'", line_no, col);
          e = 0;
          for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
              throw ParseError("bad exponent '" + std::string(token) + "'", line_no, col);
            if (e > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
              throw ParseError("exponent too large", line_no, col);
            e = e * 10 + (ch - '0');
          }
          if (negative) e = -e;
        }
        row.push_back(BlockEntry::power(e, generator.order()));
      } else {
        throw ParseError("expected '1', '0' or 'f^e', got '" + std::string(token) + "'", line_no,
                         col);
      }
    }
    if (row.empty()) continue;
    if (!grid.empty() && row.size() != grid.front().size())
      throw ParseError("block row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(grid.front().size()),
                       line_no, 1);
    grid.push_back(std::move(row));
  }
  if (grid.empty()) throw ParseError("proto-matrix has no block rows", line_no, 1);
  return ProtoMatrix(generator, std::move(grid));
}

}  // namespace permldpc

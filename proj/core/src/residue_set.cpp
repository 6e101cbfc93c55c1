#include "permldpc/residue_set.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_set>

#include "permldpc/error.hpp"
#include "permldpc/permutation.hpp"

namespace permldpc {

namespace {

Residue add_mod(Residue a, Residue b, std::uint64_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}

Residue sub_mod(Residue a, Residue b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }

Residue mul_mod(Residue a, Residue b, std::uint64_t m) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

ResidueSet::ResidueSet(std::uint64_t modulus, std::span<const std::int64_t> values)
    : modulus_(modulus) {
  if (modulus == 0) throw ArgumentError("modulus must be positive");
  elements_.reserve(values.size());
  for (std::int64_t v : values) elements_.push_back(reduce_mod(v, modulus));
  std::sort(elements_.begin(), elements_.end());
  const auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end())
    throw MalformedSetError("elements collide at residue " + std::to_string(*dup) + " mod " +
                            std::to_string(modulus));
}

ResidueSet::ResidueSet(std::uint64_t modulus, std::initializer_list<std::int64_t> values)
    : ResidueSet(modulus, std::span<const std::int64_t>(values.begin(), values.size())) {}

ResidueSet ResidueSet::collect(std::uint64_t modulus, std::vector<Residue> residues) {
  if (modulus == 0) throw ArgumentError("modulus must be positive");
  ResidueSet out;
  out.modulus_ = modulus;
  for (auto& r : residues) r %= modulus;
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  out.elements_ = std::move(residues);
  return out;
}

bool ResidueSet::contains(Residue r) const {
  return std::binary_search(elements_.begin(), elements_.end(), r);
}

ResidueSet difference_set(const ResidueSet& b) {
  const auto m = b.modulus();
  std::vector<Residue> out;
  for (Residue x : b.elements())
    for (Residue y : b.elements())
      if (x != y) out.push_back(sub_mod(x, y, m));
  return ResidueSet::collect(m, std::move(out));
}

ResidueSet sum_set(const ResidueSet& b) {
  const auto m = b.modulus();
  std::vector<Residue> out;
  for (Residue x : b.elements())
    for (Residue y : b.elements()) out.push_back(add_mod(x, y, m));
  return ResidueSet::collect(m, std::move(out));
}

ResidueSet product_set(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus())
    throw ModulusMismatchError("product of sets mod " + std::to_string(a.modulus()) + " and mod " +
                               std::to_string(b.modulus()));
  const auto m = a.modulus();
  std::vector<Residue> out;
  for (Residue x : a.elements())
    for (Residue y : b.elements()) out.push_back(mul_mod(x, y, m));
  return ResidueSet::collect(m, std::move(out));
}

bool is_bt_set(const ResidueSet& b, unsigned t) {
  if (t == 0) throw ArgumentError("t must be at least 1");
  const auto m = b.modulus();
  const auto elems = b.elements();
  const std::size_t k = elems.size();
  if (k <= 1 || t == 1) return true;

  if (t == 2) {
    std::vector<Residue> sums;
    sums.reserve(k * (k + 1) / 2);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) sums.push_back(add_mod(elems[i], elems[j], m));
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
  }

  double work = 1.0;
  for (unsigned i = 0; i < t; ++i) work *= static_cast<double>(k);
  if (work > 1e7)
    throw ArgumentError("B_t check with |B|^t = " + std::to_string(work) + " exceeds 10^7");

  // Non-decreasing index tuples enumerate the t-multisets exactly once.
  std::vector<std::size_t> idx(t, 0);
  std::unordered_set<Residue> seen;
  while (true) {
    Residue s = 0;
    for (std::size_t i : idx) s = add_mod(s, elems[i], m);
    if (!seen.insert(s).second) return false;
    std::size_t pos = t;
    while (pos > 0 && idx[pos - 1] == k - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < t; ++i) idx[i] = idx[pos - 1];
  }
}

B2Equivalences b2_equivalences(const ResidueSet& b) {
  const auto m = b.modulus();
  const auto elems = b.elements();
  const std::size_t k = elems.size();
  B2Equivalences out;

  out.distinct_pair_sums = is_bt_set(b, 2);

  out.full_sum_set = sum_set(b).size() == (k * k + k) / 2;

  // Sums indexed by unordered pairs {i <= j}; a zero difference between two
  // distinct index pairs is a repeated sum.
  std::vector<Residue> indexed_sums;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) indexed_sums.push_back(add_mod(elems[i], elems[j], m));
  out.zero_free_sum_differences = true;
  for (std::size_t p = 0; p < indexed_sums.size() && out.zero_free_sum_differences; ++p)
    for (std::size_t q = 0; q < indexed_sums.size(); ++q)
      if (p != q && sub_mod(indexed_sums[p], indexed_sums[q], m) == 0) {
        out.zero_free_sum_differences = false;
        break;
      }
  return out;
}

ResidueSet GreedyB2::reduce(std::uint64_t modulus) const { return ResidueSet(modulus, elements); }

GreedyB2 greedy_b2(std::size_t count) {
  if (count == 0) throw ArgumentError("greedy B2 construction needs at least one element");
  if (count > 62) throw ArgumentError("greedy B2 construction limited to 62 elements");
  GreedyB2 out;
  std::int64_t v = 0;
  for (std::size_t l = 0; l < count; ++l) {
    out.elements.push_back(v);
    v = 1 + 2 * v;
  }
  // Largest pairwise sum is 2 * i_count; the modulus must exceed it.
  const auto largest = static_cast<std::uint64_t>(out.elements.back());
  out.min_odd_modulus = 2 * largest + 1;
  return out;
}

SequenceStream::SequenceStream(ResidueSet set, unsigned t, SequenceKind kind)
    : set_(std::move(set)), kind_(kind) {
  if (t == 0) throw ArgumentError("sequence length parameter t must be at least 1");
  index_.assign(static_cast<std::size_t>(t) + 1, 0);
  exhausted_ = set_.size() < 2;
}

bool SequenceStream::valid_closure() const { return index_.back() != index_.front(); }

// Odometer over index tuples that keeps consecutive indices distinct; the
// cyclic condition a_t != a_0 is checked on complete tuples.
bool SequenceStream::advance() {
  const std::size_t k = set_.size();
  const std::size_t len = index_.size();
  if (!started_) {
    started_ = true;
    for (std::size_t i = 0; i < len; ++i) index_[i] = i % 2;
    return true;
  }
  std::size_t pos = len;
  while (pos > 0) {
    --pos;
    std::size_t next = index_[pos] + 1;
    if (pos > 0 && next == index_[pos - 1]) ++next;
    if (next < k) {
      index_[pos] = next;
      for (std::size_t i = pos + 1; i < len; ++i) index_[i] = index_[i - 1] == 0 ? 1 : 0;
      return true;
    }
  }
  return false;
}

std::optional<ExponentSequence> SequenceStream::next() {
  while (!exhausted_) {
    if (!advance()) {
      exhausted_ = true;
      break;
    }
    if (!valid_closure()) continue;
    const auto elems = set_.elements();
    const auto m = set_.modulus();
    ExponentSequence seq{m, {}, kind_};
    seq.terms.reserve(index_.size());
    if (kind_ == SequenceKind::S) {
      for (std::size_t i : index_) seq.terms.push_back(elems[i]);
    } else {
      const std::size_t len = index_.size();
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t prev = i == 0 ? len - 1 : i - 1;
        seq.terms.push_back(sub_mod(elems[index_[i]], elems[index_[prev]], m));
      }
    }
    return seq;
  }
  return std::nullopt;
}

SequenceStream enumerate_sequences(const ResidueSet& b, unsigned t, SequenceKind kind) {
  return SequenceStream(b, t, kind);
}

ResidueSet parse_residue_set(std::string_view text, std::uint64_t modulus) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, 1, pos + 1); };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  const bool braced = pos < text.size() && text[pos] == '{';
  if (braced) ++pos;
  bool expect_value = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (braced) fail("missing '}'");
      break;
    }
    const char c = text[pos];
    if (c == '}') {
      if (!braced) fail("unexpected '}'");
      ++pos;
      skip();
      if (pos != text.size()) fail("unexpected text after '}'");
      break;
    }
    if (c == ',') {
      if (expect_value) fail("expected a value before ','");
      expect_value = true;
      ++pos;
      continue;
    }
    if (!expect_value) fail("expected ',' between values");
    bool negative = false;
    if (c == '-' || c == '+') {
      negative = c == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected an integer");
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const int digit = text[pos] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail("integer too large");
      v = v * 10 + digit;
      ++pos;
    }
    values.push_back(negative ? -v : v);
    expect_value = false;
  }
  if (expect_value && !values.empty()) fail("trailing ','");
  return ResidueSet(modulus, values);
}

std::string to_string(const ResidueSet& b) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Residue r : b.elements()) {
    os << (first ? "" : ", ") << r;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_signed_string(const ResidueSet& b) {
  const auto m = b.modulus();
  // magnitude -> (has +, has -)
  std::map<std::uint64_t, std::pair<bool, bool>> folded;
  for (Residue r : b.elements()) {
    if (r == 0) {
      folded[0].first = true;
    } else if (2 * r <= m) {
      folded[r].first = true;
    } else {
      folded[m - r].second = true;
    }
  }
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [mag, signs] : folded) {
    os << (first ? "" : ", ");
    first = false;
    if (mag == 0) os << 0;
    else if (signs.first && signs.second && 2 * mag != m) os << "±" << mag;
    else if (signs.second) os << '-' << mag;
    else os << mag;
  }
  os << '}';
  return os.str();
}

}  // namespace permldpc

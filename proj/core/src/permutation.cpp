#include "permldpc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "permldpc/error.hpp"

namespace permldpc {

std::uint64_t reduce_mod(std::int64_t k, std::uint64_t m) {
  if (m == 0) throw ArgumentError("modulus must be positive");
  if (k >= 0) return static_cast<std::uint64_t>(k) % m;
  // -(k+1) avoids overflow at INT64_MIN.
  const std::uint64_t neg = static_cast<std::uint64_t>(-(k + 1)) % m;
  return (m - 1 - neg) % m;
}

Permutation::Permutation(std::vector<Symbol> image) : image_(std::move(image)) {
  const std::size_t n = image_.size();
  if (n == 0) throw DomainSizeError("permutation domain must be non-empty");
  if (n > std::numeric_limits<Symbol>::max())
    throw DomainSizeError("permutation domain too large");
  std::vector<bool> hit(n, false);
  for (Symbol y : image_) {
    if (y >= n || hit[y]) throw DomainSizeError("image table is not a bijection on 0..n-1");
    hit[y] = true;
  }

  cycle_id_.assign(n, 0);
  position_.assign(n, 0);
  members_.reserve(n);
  std::vector<bool> seen(n, false);
  for (Symbol start = 0; start < n; ++start) {
    if (seen[start]) continue;
    const auto id = static_cast<std::uint32_t>(cycle_len_.size());
    cycle_start_.push_back(members_.size());
    std::size_t len = 0;
    for (Symbol x = start; !seen[x]; x = image_[x]) {
      seen[x] = true;
      cycle_id_[x] = id;
      position_[x] = len++;
      members_.push_back(x);
    }
    cycle_len_.push_back(len);
  }

  distinct_lengths_ = cycle_len_;
  std::sort(distinct_lengths_.begin(), distinct_lengths_.end());
  distinct_lengths_.erase(std::unique(distinct_lengths_.begin(), distinct_lengths_.end()),
                          distinct_lengths_.end());
  order_ = 1;
  for (std::size_t len : distinct_lengths_) {
    const std::uint64_t g = std::gcd(order_, static_cast<std::uint64_t>(len));
    const std::uint64_t step = len / g;
    if (order_ > std::numeric_limits<std::uint64_t>::max() / step)
      throw ArgumentError("permutation order overflows 64 bits");
    order_ *= step;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Symbol> image(n);
  std::iota(image.begin(), image.end(), Symbol{0});
  return Permutation(std::move(image));
}

Permutation Permutation::m_cycle(std::size_t n) {
  std::vector<Symbol> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = static_cast<Symbol>((x + 1) % n);
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(const CycleNotation& notation) {
  if (notation.n == 0) throw DomainSizeError("permutation domain must be non-empty");
  std::vector<Symbol> image(notation.n);
  std::iota(image.begin(), image.end(), Symbol{0});
  std::vector<bool> used(notation.n, false);
  for (const auto& cycle : notation.cycles) {
    if (cycle.size() < 2) throw MalformedCyclesError("cycles must have length at least 2");
    for (Symbol s : cycle) {
      if (s >= notation.n)
        throw MalformedCyclesError("symbol " + std::to_string(s) + " out of range for n=" +
                                   std::to_string(notation.n));
      if (used[s]) throw MalformedCyclesError("symbol " + std::to_string(s) + " repeated");
      used[s] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(image));
}

bool Permutation::is_derangement() const noexcept {
  return distinct_lengths_.front() != 1;
}

std::vector<Symbol> Permutation::fixed_points() const {
  std::vector<Symbol> out;
  for (Symbol x = 0; x < size(); ++x)
    if (image_[x] == x) out.push_back(x);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Symbol> inv(size());
  for (Symbol x = 0; x < size(); ++x) inv[image_[x]] = x;
  return Permutation(std::move(inv));
}

CycleNotation Permutation::cycles() const {
  CycleNotation out{size(), {}};
  for (std::size_t c = 0; c < cycle_len_.size(); ++c) {
    if (cycle_len_[c] < 2) continue;
    out.cycles.emplace_back(members_.begin() + static_cast<std::ptrdiff_t>(cycle_start_[c]),
                            members_.begin() +
                                static_cast<std::ptrdiff_t>(cycle_start_[c] + cycle_len_[c]));
  }
  return out;
}

Symbol Permutation::apply_power(Symbol x, std::int64_t e) const {
  const std::uint32_t c = cycle_id_[x];
  const std::size_t len = cycle_len_[c];
  const std::size_t step = reduce_mod(e, len);
  return members_[cycle_start_[c] + (position_[x] + step) % len];
}

bool Permutation::power_has_fixed_point(std::int64_t e) const {
  for (std::size_t len : distinct_lengths_)
    if (reduce_mod(e, len) == 0) return true;
  return false;
}

std::vector<Symbol> Permutation::orbit_representatives() const {
  std::vector<Symbol> reps;
  reps.reserve(cycle_start_.size());
  // Cycles are discovered in ascending order of their smallest element.
  for (std::size_t start : cycle_start_) reps.push_back(members_[start]);
  return reps;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size())
    throw DomainSizeError("cannot compose permutations on " + std::to_string(g.size()) +
                          " and " + std::to_string(h.size()) + " symbols");
  std::vector<Symbol> image(g.size());
  for (Symbol x = 0; x < g.size(); ++x) image[x] = g(h(x));
  return Permutation(std::move(image));
}

Permutation power(const Permutation& f, std::int64_t k) {
  std::uint64_t e = reduce_mod(k, f.order());
  Permutation result = Permutation::identity(f.size());
  Permutation base = f;
  while (e != 0) {
    if (e & 1U) result = compose(base, result);
    e >>= 1U;
    if (e != 0) base = compose(base, base);
  }
  return result;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, column()); }

  std::uint64_t read_unsigned() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a symbol");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("number too large");
      v = v * 10 + digit;
      advance();
    }
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycleNotation parse_cycle_notation(std::string_view text, std::optional<std::size_t> n) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first).starts_with("id")) {
    Scanner rest(text.substr(first + 2));
    if (!rest.done()) throw ParseError("unexpected text after 'id'", 1, first + 3);
    if (!n) throw ParseError("'id' needs an explicit domain size", 1, first + 1);
    return CycleNotation{*n, {}};
  }

  Scanner in(text);
  CycleNotation out;
  std::uint64_t max_symbol = 0;
  bool any = false;
  std::set<std::uint64_t> seen;
  while (!in.done()) {
    if (in.peek() != '(') in.fail("expected '('");
    in.advance();
    std::vector<Symbol> cycle;
    in.skip_space();
    while (in.peek() != ')') {
      if (in.peek() == '\0') in.fail("unterminated cycle");
      const std::uint64_t s = in.read_unsigned();
      if (s > std::numeric_limits<Symbol>::max()) in.fail("symbol too large");
      if (!seen.insert(s).second)
        throw MalformedCyclesError("symbol " + std::to_string(s) + " repeated");
      cycle.push_back(static_cast<Symbol>(s));
      max_symbol = std::max(max_symbol, s);
      any = true;
      in.skip_space();
    }
    in.advance();
    // 1-cycles are legal input; they only widen the inferred domain.
    if (cycle.size() >= 2) out.cycles.push_back(std::move(cycle));
  }
  if (!any && !n) throw ParseError("empty cycle notation needs a domain size", 1, 1);
  out.n = n ? *n : static_cast<std::size_t>(max_symbol) + 1;
  if (any && max_symbol >= out.n)
    throw MalformedCyclesError("symbol " + std::to_string(max_symbol) + " out of range for n=" +
                               std::to_string(out.n));
  return out;
}

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> n) {
  const auto first = text.find_first_not_of(" \t");
  const std::string_view body = first == std::string_view::npos ? std::string_view{} : text.substr(first);
  auto parse_size = [&](std::string_view digits) {
    Scanner in(digits);
    const std::uint64_t v = in.read_unsigned();
    if (!in.done()) in.fail("unexpected text after domain size");
    if (v == 0) throw ParseError("domain size must be positive", 1, 1);
    return static_cast<std::size_t>(v);
  };
  if (body.starts_with("cycle:")) return Permutation::m_cycle(parse_size(body.substr(6)));
  if (body.starts_with("id:")) return Permutation::identity(parse_size(body.substr(3)));
  return Permutation::from_cycles(parse_cycle_notation(text, n));
}

std::string to_string(const CycleNotation& notation) {
  if (notation.cycles.empty()) return "id";
  std::ostringstream os;
  for (const auto& cycle : notation.cycles) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
    os << ')';
  }
  return os.str();
}

std::string to_string(const Permutation& f) { return to_string(f.cycles()); }

}  // namespace permldpc

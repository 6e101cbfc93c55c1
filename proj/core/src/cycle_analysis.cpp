#include "permldpc/cycle_analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permldpc/error.hpp"
#include "permldpc/residue_set.hpp"

namespace permldpc {

namespace {

Residue add_mod(Residue a, Residue b, std::uint64_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}
Residue sub_mod(Residue a, Residue b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }
Residue mul_mod(Residue a, Residue b, std::uint64_t m) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % m);
}

// Signed view of a residue for Permutation::apply_power; orders beyond
// INT64_MAX are rejected when a BlockGrid is built.
std::int64_t as_exponent(Residue r) { return static_cast<std::int64_t>(r); }

// Dense snapshot of a proto-matrix's block exponents.
class BlockGrid {
 public:
  explicit BlockGrid(const ProtoMatrix& p)
      : f_(p.generator()), m_(p.order()), rows_(p.block_rows()), cols_(p.block_cols()) {
    if (m_ > static_cast<std::uint64_t>(INT64_MAX))
      throw UnsupportedError("generator order too large for cycle analysis");
    nonzero_.resize(rows_ * cols_);
    exponent_.resize(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const BlockEntry& e = p.at(r, c);
        nonzero_[r * cols_ + c] = !e.is_zero();
        exponent_[r * cols_ + c] = e.is_zero() ? 0 : e.exponent();
      }
  }

  const Permutation& f() const { return f_; }
  std::uint64_t modulus() const { return m_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool nonzero(std::size_t r, std::size_t c) const { return nonzero_[r * cols_ + c]; }
  Residue exponent(std::size_t r, std::size_t c) const { return exponent_[r * cols_ + c]; }

  // Exponent T with c_k = f^T(c_0) along the path.
  Residue closure_exponent(std::span<const BlockPosition> pairs) const {
    const std::size_t k = pairs.size();
    Residue total = 0;
    for (std::size_t t = 0; t < k; ++t) {
      const BlockPosition& here = pairs[t];
      const BlockPosition& next = pairs[(t + 1) % k];
      total = add_mod(total, exponent(next.row, here.col), m_);
      total = sub_mod(total, exponent(next.row, next.col), m_);
    }
    return total;
  }

  // Whether the positions visited from c0 are pairwise distinct, assuming
  // closure. Variables (l_t, y_t) and checks (j_t, x_t) for t < k.
  bool distinct_positions(std::span<const BlockPosition> pairs, Symbol c0) const {
    const std::size_t k = pairs.size();
    vars_.clear();
    checks_.clear();
    Symbol y = c0;
    for (std::size_t t = 0; t < k; ++t) {
      const BlockPosition& here = pairs[t];
      const BlockPosition& next = pairs[(t + 1) % k];
      vars_.emplace_back(here.col, y);
      checks_.emplace_back(here.row, f_.apply_power(y, as_exponent(exponent(here.row, here.col))));
      const Symbol x_next = f_.apply_power(y, as_exponent(exponent(next.row, here.col)));
      y = f_.apply_power(x_next, -as_exponent(exponent(next.row, next.col)));
    }
    auto unique = [](std::vector<std::pair<std::size_t, Symbol>>& v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    return y == c0 && unique(vars_) && unique(checks_);
  }

  // Least c0 that closes the path into a genuine cycle. Closure and
  // distinctness are invariant under c -> f(c) applied to every position
  // (all blocks commute with f), so orbit representatives suffice.
  std::optional<Symbol> close(std::span<const BlockPosition> pairs) const {
    const Residue total = closure_exponent(pairs);
    if (!f_.power_has_fixed_point(as_exponent(total))) return std::nullopt;
    for (Symbol c0 : f_.orbit_representatives()) {
      if (total % f_.cycle_length_of(c0) != 0) continue;
      if (distinct_positions(pairs, c0)) return c0;
    }
    return std::nullopt;
  }

 private:
  const Permutation& f_;
  std::uint64_t m_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<bool> nonzero_;
  std::vector<Residue> exponent_;
  mutable std::vector<std::pair<std::size_t, Symbol>> vars_;
  mutable std::vector<std::pair<std::size_t, Symbol>> checks_;
};

const Provenance& require_provenance(const ProtoMatrix& p, const char* what) {
  if (!p.provenance())
    throw UnsupportedError(std::string(what) +
                           " needs a regular proto-matrix; use find_cycle or the oracle");
  return *p.provenance();
}

std::size_t index_of(const ResidueSet& s, Residue r) {
  const auto elems = s.elements();
  return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), r) - elems.begin());
}

// Path whose trajectory visits rows alpha_1..alpha_k and columns
// beta_0..beta_{k-1} (indices), so that its closure exponent equals
// exponent_of_path(A[alpha], I[beta]).
CyclePath path_from_sequences(std::span<const std::size_t> row_seq,
                              std::span<const std::size_t> col_seq) {
  const std::size_t k = row_seq.size();
  std::vector<BlockPosition> pairs(k);
  for (std::size_t t = 0; t < k; ++t) pairs[t] = {row_seq[(t + k - 1) % k], col_seq[t]};
  return CyclePath(std::move(pairs));
}

std::optional<CycleWitness> certify(const ProtoMatrix& p, std::span<const std::size_t> row_seq,
                                    std::span<const std::size_t> col_seq) {
  CyclePath path = path_from_sequences(row_seq, col_seq);
  if (auto c0 = fossorier_check(p, path)) return CycleWitness{std::move(path), *c0};
  return std::nullopt;
}

// Exhaustive lexicographic DFS over block paths of k pairs.
class PathSearch {
 public:
  PathSearch(const BlockGrid& grid, std::size_t k) : g_(grid), k_(k), pairs_(k) {}

  std::optional<CycleWitness> run() {
    if (g_.rows() < 2 || g_.cols() < 2) return std::nullopt;
    for (std::size_t r = 0; r < g_.rows(); ++r)
      for (std::size_t c = 0; c < g_.cols(); ++c) {
        if (!g_.nonzero(r, c)) continue;
        pairs_[0] = {r, c};
        if (extend(1)) return found_;
      }
    return std::nullopt;
  }

 private:
  bool extend(std::size_t t) {
    if (t == k_) {
      if (auto c0 = g_.close(pairs_)) {
        found_ = CycleWitness{CyclePath(pairs_), *c0};
        return true;
      }
      return false;
    }
    const BlockPosition prev = pairs_[t - 1];
    const BlockPosition first = pairs_[0];
    const bool last = t + 1 == k_;
    for (std::size_t r = 0; r < g_.rows(); ++r) {
      if (r == prev.row || (last && r == first.row)) continue;
      if (!g_.nonzero(r, prev.col)) continue;
      for (std::size_t c = 0; c < g_.cols(); ++c) {
        if (c == prev.col || (last && c == first.col)) continue;
        if (!g_.nonzero(r, c) || (last && !g_.nonzero(first.row, c))) continue;
        pairs_[t] = {r, c};
        if (extend(t + 1)) return true;
      }
    }
    return false;
  }

  const BlockGrid& g_;
  std::size_t k_;
  std::vector<BlockPosition> pairs_;
  std::optional<CycleWitness> found_;
};

}  // namespace

CyclePath::CyclePath(std::vector<BlockPosition> pairs) : pairs_(std::move(pairs)) {
  const std::size_t k = pairs_.size();
  if (k < 2) throw InvalidPathError("a cycle path needs at least two block pairs");
  for (std::size_t t = 0; t < k; ++t) {
    const BlockPosition& a = pairs_[t];
    const BlockPosition& b = pairs_[(t + 1) % k];
    if (a.row == b.row || a.col == b.col)
      throw InvalidPathError("pairs " + std::to_string(t) + " and " + std::to_string((t + 1) % k) +
                             " share a block row or column");
  }
}

std::string to_string(const CyclePath& path) {
  std::ostringstream os;
  bool first = true;
  for (const BlockPosition& p : path.pairs()) {
    os << (first ? "" : " ") << '(' << p.row << ',' << p.col << ')';
    first = false;
  }
  return os.str();
}

std::optional<Symbol> fossorier_check(const ProtoMatrix& p, const CyclePath& path) {
  const auto pairs = path.pairs();
  const std::size_t k = pairs.size();
  for (const BlockPosition& b : pairs)
    if (b.row >= p.block_rows() || b.col >= p.block_cols())
      throw BlockIndexError("path position (" + std::to_string(b.row) + "," +
                            std::to_string(b.col) + ") outside the grid");
  for (std::size_t t = 0; t < k; ++t) {
    const BlockPosition& here = pairs[t];
    const BlockPosition& next = pairs[(t + 1) % k];
    if (p.at(here.row, here.col).is_zero() || p.at(next.row, here.col).is_zero())
      throw InvalidPathError("path crosses a zero block");
  }
  const BlockGrid grid(p);
  return grid.close(pairs);
}

Residue exponent_of_path(std::span<const std::int64_t> coefficients,
                         std::span<const std::int64_t> exponents, std::uint64_t modulus) {
  const std::size_t t = coefficients.size();
  if (exponents.size() != t) throw InvalidPathError("coefficient and exponent sequences differ in length");
  if (t < 2) throw InvalidPathError("a trajectory needs at least two steps");
  for (std::size_t s = 0; s < t; ++s) {
    const std::size_t n = (s + 1) % t;
    if (reduce_mod(coefficients[s], modulus) == reduce_mod(coefficients[n], modulus))
      throw InvalidPathError("consecutive coefficients must differ");
    if (reduce_mod(exponents[s], modulus) == reduce_mod(exponents[n], modulus))
      throw InvalidPathError("consecutive exponents must differ");
  }
  Residue total = 0;
  for (std::size_t s = 0; s < t; ++s) {
    const std::size_t prev = (s + t - 1) % t;
    const Residue diff = sub_mod(reduce_mod(coefficients[s], modulus),
                                 reduce_mod(coefficients[prev], modulus), modulus);
    total = add_mod(total, mul_mod(diff, reduce_mod(exponents[s], modulus), modulus), modulus);
  }
  return total;
}

CycleTest has_4cycle(const ProtoMatrix& p) {
  const Provenance& prov = require_provenance(p, "has_4cycle");
  const ResidueSet& a = prov.coefficients;
  const ResidueSet& in = prov.exponents;
  const std::uint64_t m = p.order();
  const Permutation& f = p.generator();

  const ResidueSet governing = p.block_rows() == 2
                             ? product_set(ResidueSet::collect(m, {a.elements()[1]}), difference_set(in))
                             : product_set(difference_set(a), difference_set(in));

  CycleTest out;
  for (Residue i : governing.elements())
    if (f.power_has_fixed_point(as_exponent(i))) out.present = true;
  if (!out.present) return out;

  // Locate a factorization (a1 - a2)(j1 - j2) with a fixed point.
  const auto av = a.elements();
  const auto iv = in.elements();
  for (std::size_t r1 = 0; r1 < av.size(); ++r1)
    for (std::size_t r2 = 0; r2 < av.size(); ++r2) {
      if (r1 == r2) continue;
      for (std::size_t c1 = 0; c1 < iv.size(); ++c1)
        for (std::size_t c2 = 0; c2 < iv.size(); ++c2) {
          if (c1 == c2) continue;
          const Residue i = mul_mod(sub_mod(av[r1], av[r2], m), sub_mod(iv[c1], iv[c2], m), m);
          if (!f.power_has_fixed_point(as_exponent(i))) continue;
          const std::size_t rows[] = {r1, r2};
          const std::size_t cols[] = {c1, c2};
          if (auto w = certify(p, rows, cols)) {
            out.witness = std::move(w);
            return out;
          }
        }
    }
  throw std::logic_error("4-cycle predicate holds but no witness certifies");
}

CycleTest has_6cycle(const ProtoMatrix& p) {
  const Provenance& prov = require_provenance(p, "has_6cycle");
  CycleTest out;
  if (p.block_rows() <= 2 || p.block_cols() < 3) return out;

  const ResidueSet& a = prov.coefficients;
  const ResidueSet& in = prov.exponents;
  const std::uint64_t m = p.order();
  const Permutation& f = p.generator();
  const ResidueSet a_delta = difference_set(a);
  const auto iv = in.elements();

  // (c1, c2) = (a0 - a2, a1 - a0) over ordered triples of distinct rows; each
  // satisfies c1, c2, c1 + c2 in A_Delta.
  for (Residue a2 : a.elements())
    for (Residue c1 : a_delta.elements()) {
      const Residue a0 = add_mod(a2, c1, m);
      if (!a.contains(a0)) continue;
      for (Residue c2 : a_delta.elements()) {
        const Residue a1 = add_mod(a0, c2, m);
        const Residue c12 = add_mod(c1, c2, m);
        if (!a.contains(a1) || a1 == a2 || !a_delta.contains(c12)) continue;
        for (std::size_t j1 = 0; j1 < iv.size(); ++j1)
          for (std::size_t j2 = 0; j2 < iv.size(); ++j2)
            for (std::size_t j3 = 0; j3 < iv.size(); ++j3) {
              if (j1 == j2 || j2 == j3 || j1 == j3) continue;
              Residue i = add_mod(mul_mod(c1, iv[j1], m), mul_mod(c2, iv[j2], m), m);
              i = sub_mod(i, mul_mod(c12, iv[j3], m), m);
              if (!f.power_has_fixed_point(as_exponent(i))) continue;
              out.present = true;
              const std::size_t rows[] = {index_of(a, a0), index_of(a, a1), index_of(a, a2)};
              const std::size_t cols[] = {j1, j2, j3};
              out.witness = certify(p, rows, cols);
              if (!out.witness)
                throw std::logic_error("6-cycle predicate holds but no witness certifies");
              return out;
            }
      }
    }
  return out;
}

CycleVerdict has_8cycle(const ProtoMatrix& p) {
  const Provenance& prov = require_provenance(p, "has_8cycle");
  const ResidueSet& a = prov.coefficients;
  const ResidueSet& in = prov.exponents;
  const std::uint64_t m = p.order();
  const Permutation& f = p.generator();
  const auto av = a.elements();
  const auto iv = in.elements();
  CycleVerdict out;

  if (p.block_rows() < 2 || p.block_cols() < 2) {
    out.verdict = Verdict::no;
    return out;
  }

  if (p.block_rows() == 2) {
    // Degenerate terms of (I_+)_Delta are 4-cycle exponents; without
    // 4-cycles they never contribute and the test is exact.
    if (has_4cycle(p).present) return out;
    const Residue coeff = av[1];
    out.verdict = Verdict::no;
    const std::size_t k = iv.size();
    for (std::size_t j1 = 0; j1 < k; ++j1)
      for (std::size_t j3 = j1; j3 < k; ++j3)
        for (std::size_t j2 = 0; j2 < k; ++j2)
          for (std::size_t j4 = j2; j4 < k; ++j4) {
            if (j1 == j2 && j3 == j4) continue;
            const Residue d = sub_mod(add_mod(iv[j1], iv[j3], m), add_mod(iv[j2], iv[j4], m), m);
            if (!f.power_has_fixed_point(as_exponent(mul_mod(coeff, d, m)))) continue;
            out.verdict = Verdict::yes;
            const std::size_t rows[] = {1, 0, 1, 0};
            const std::size_t cols[] = {j1, j2, j3, j4};
            if (j1 != j2 && j2 != j3 && j3 != j4 && j4 != j1) out.witness = certify(p, rows, cols);
            if (!out.witness)
              throw std::logic_error("8-cycle predicate holds but no witness certifies");
            return out;
          }
    return out;
  }

  // More than two block rows: a repeated pair sum in A or I forces an
  // 8-cycle through a zero exponent sum; otherwise nothing is claimed.
  if (!is_bt_set(a, 2)) {
    for (std::size_t a0 = 0; a0 < av.size(); ++a0)
      for (std::size_t a1 = 0; a1 < av.size(); ++a1)
        for (std::size_t a2 = 0; a2 < av.size(); ++a2)
          for (std::size_t a3 = 0; a3 < av.size(); ++a3) {
            if (a0 == a1 || a1 == a2 || a2 == a3 || a3 == a0) continue;
            if (add_mod(av[a0], av[a2], m) != add_mod(av[a1], av[a3], m)) continue;
            for (std::size_t j1 = 0; j1 < iv.size(); ++j1)
              for (std::size_t j2 = 0; j2 < iv.size(); ++j2) {
                if (j1 == j2) continue;
                const std::size_t rows[] = {a0, a1, a2, a3};
                const std::size_t cols[] = {j1, j2, j1, j2};
                if (auto w = certify(p, rows, cols)) return {Verdict::yes, std::move(w)};
              }
          }
  }
  if (!is_bt_set(in, 2)) {
    for (std::size_t j1 = 0; j1 < iv.size(); ++j1)
      for (std::size_t j2 = 0; j2 < iv.size(); ++j2)
        for (std::size_t j3 = 0; j3 < iv.size(); ++j3)
          for (std::size_t j4 = 0; j4 < iv.size(); ++j4) {
            if (j1 == j2 || j2 == j3 || j3 == j4 || j4 == j1) continue;
            if (add_mod(iv[j1], iv[j3], m) != add_mod(iv[j2], iv[j4], m)) continue;
            for (std::size_t a0 = 0; a0 < av.size(); ++a0)
              for (std::size_t a1 = 0; a1 < av.size(); ++a1) {
                if (a0 == a1) continue;
                const std::size_t rows[] = {a0, a1, a0, a1};
                const std::size_t cols[] = {j1, j2, j3, j4};
                if (auto w = certify(p, rows, cols)) return {Verdict::yes, std::move(w)};
              }
          }
  }
  return out;
}

std::size_t girth_2x2(const Permutation& f) {
  // f^order is the identity, so the loop ends by k = order(f).
  for (std::uint64_t k = 1;; ++k)
    if (f.power_has_fixed_point(static_cast<std::int64_t>(k))) return static_cast<std::size_t>(4 * k);
}

std::optional<CycleWitness> forced_12cycle(const ProtoMatrix& p) {
  if (p.block_rows() < 2 || p.block_cols() < 3) return std::nullopt;
  const BlockGrid grid(p);
  for (std::size_t u = 0; u < p.block_rows(); ++u)
    for (std::size_t v = 0; v < p.block_rows(); ++v) {
      if (u == v) continue;
      for (std::size_t x = 0; x < p.block_cols(); ++x)
        for (std::size_t y = 0; y < p.block_cols(); ++y)
          for (std::size_t z = 0; z < p.block_cols(); ++z) {
            if (x == y || y == z || x == z) continue;
            const bool all_nonzero = grid.nonzero(u, x) && grid.nonzero(u, y) && grid.nonzero(u, z) &&
                                     grid.nonzero(v, x) && grid.nonzero(v, y) && grid.nonzero(v, z);
            if (!all_nonzero) continue;
            CyclePath path({{u, x}, {v, y}, {u, z}, {v, x}, {u, y}, {v, z}});
            if (auto c0 = grid.close(path.pairs())) return CycleWitness{std::move(path), *c0};
          }
    }
  return std::nullopt;
}

bool odd_multiple_cycle_check(std::span<const Permutation> sigmas, Symbol c) {
  if (sigmas.size() < 2 || sigmas.size() % 2 != 0 || (sigmas.size() / 2) % 2 == 0)
    throw ArgumentError("expected 2r permutations with r odd, got " + std::to_string(sigmas.size()));
  const std::size_t n = sigmas.front().size();
  for (const Permutation& s : sigmas)
    if (s.size() != n) throw DomainSizeError("permutations act on different domains");
  if (c >= n) throw DomainSizeError("point " + std::to_string(c) + " outside 0.." + std::to_string(n - 1));

  for (std::size_t i = 0; i < sigmas.size(); ++i)
    for (std::size_t j = i + 1; j < sigmas.size(); ++j)
      if (sigmas[i](sigmas[j](c)) != sigmas[j](sigmas[i](c))) return false;

  const std::size_t r = sigmas.size() / 2;
  // odd = s_1 s_3 ... s_{2t-1}, even = s_2 s_4 ... s_{2t}, applied to c.
  std::vector<Symbol> odd_images;
  std::vector<Symbol> even_images;
  for (std::size_t t = 1; t <= r; ++t) {
    Symbol odd = c;
    Symbol even = c;
    for (std::size_t s = t; s-- > 0;) {
      odd = sigmas[2 * s](odd);
      even = sigmas[2 * s + 1](even);
    }
    const bool equal = odd == even;
    if (t < r && equal) return false;
    if (t == r && !equal) return false;
  }
  return true;
}

std::optional<CycleWitness> find_cycle(const ProtoMatrix& p, std::size_t length) {
  if (length < 4 || length % 2 != 0)
    throw ArgumentError("cycle length must be even and at least 4");
  const BlockGrid grid(p);
  return PathSearch(grid, length / 2).run();
}

Girth walk_girth(const ProtoMatrix& p, std::size_t min_length, std::size_t max_length) {
  const BlockGrid g(p);
  const std::size_t rows = p.block_rows();
  const std::size_t cols = p.block_cols();
  const std::uint64_t m = p.order();
  if (m > (std::uint64_t{1} << 24)) throw UnsupportedError("walk search limited to orders below 2^24");
  const std::size_t states = rows * cols;
  const std::size_t max_steps = max_length / 2;
  const std::size_t min_steps = std::max<std::size_t>(2, (min_length + 1) / 2);

  // For each start block, reachable[(r,l)][e] after t steps.
  std::vector<std::vector<char>> reach(states), next(states);
  std::size_t best = static_cast<std::size_t>(-1);
  for (std::size_t r0 = 0; r0 < rows; ++r0)
    for (std::size_t l0 = 0; l0 < cols; ++l0) {
      if (!g.nonzero(r0, l0)) continue;
      for (auto& v : reach) v.assign(m, 0);
      reach[r0 * cols + l0][0] = 1;
      for (std::size_t t = 1; t <= max_steps && t < best; ++t) {
        for (auto& v : next) v.assign(m, 0);
        bool any = false;
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t l = 0; l < cols; ++l) {
            const auto& from = reach[r * cols + l];
            if (std::find(from.begin(), from.end(), 1) == from.end()) continue;
            for (std::size_t r2 = 0; r2 < rows; ++r2) {
              if (r2 == r || !g.nonzero(r2, l)) continue;
              for (std::size_t l2 = 0; l2 < cols; ++l2) {
                if (l2 == l || !g.nonzero(r2, l2)) continue;
                const Residue shift = sub_mod(g.exponent(r2, l), g.exponent(r2, l2), m);
                auto& to = next[r2 * cols + l2];
                for (std::uint64_t e = 0; e < m; ++e)
                  if (from[e]) {
                    to[add_mod(e, shift, m)] = 1;
                    any = true;
                  }
              }
            }
          }
        reach.swap(next);
        if (!any) break;
        if (t < min_steps) continue;
        const auto& closed = reach[r0 * cols + l0];
        for (std::uint64_t e = 0; e < m; ++e)
          if (closed[e] && g.f().power_has_fixed_point(as_exponent(e))) {
            best = std::min(best, t);
            break;
          }
      }
    }
  return best == static_cast<std::size_t>(-1) ? Girth::infinite() : Girth(2 * best);
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::theorem: return "theorem";
    case Basis::enumeration: return "enumeration";
    case Basis::parity: return "parity";
    case Basis::walk: return "walk";
  }
  return "?";
}

std::string CycleReport::to_text() const {
  std::ostringstream os;
  os << "girth: " << to_string(girth) << '\n';
  os << "cycles:";
  for (const auto& [len, yes] : present) os << ' ' << len << '=' << (yes ? "yes" : "no");
  os << '\n';
  os << "basis:";
  for (const auto& [len, how] : basis) os << ' ' << len << '=' << to_string(how);
  os << '\n';
  os << "witness: ";
  if (witness) os << to_string(witness->path) << " c0=" << witness->start_column;
  else os << "none";
  os << '\n';
  return os.str();
}

CycleReport classify(const ProtoMatrix& p) {
  CycleReport report;
  const bool two_rows = p.block_rows() == 2;
  auto record = [&](std::size_t len, bool yes, Basis how) {
    report.present[len] = yes;
    report.basis[len] = how;
  };
  auto enumerate = [&](std::size_t len) { record(len, find_cycle(p, len).has_value(), Basis::enumeration); };

  if (p.provenance()) {
    record(4, has_4cycle(p).present, Basis::theorem);
    if (two_rows) record(6, false, Basis::parity);
    else record(6, has_6cycle(p).present, Basis::theorem);
    const CycleVerdict v8 = has_8cycle(p);
    if (v8.verdict == Verdict::unknown) enumerate(8);
    else record(8, v8.verdict == Verdict::yes, Basis::theorem);
  } else {
    enumerate(4);
    if (two_rows) record(6, false, Basis::parity);
    else enumerate(6);
    enumerate(8);
  }
  if (two_rows) record(10, false, Basis::parity);
  else enumerate(10);
  if (forced_12cycle(p)) record(12, true, Basis::theorem);
  else enumerate(12);

  for (const auto& [len, yes] : report.present)
    if (yes) {
      report.girth = Girth(len);
      break;
    }

  if (report.girth.is_infinite()) {
    const bool dense_2x2 = p.block_rows() == 2 && p.block_cols() == 2 && !p.at(0, 0).is_zero() &&
                           !p.at(0, 1).is_zero() && !p.at(1, 0).is_zero() && !p.at(1, 1).is_zero();
    if (dense_2x2) {
      // (1 1; 1 f^d) up to row and column scaling.
      const std::uint64_t m = p.order();
      const Residue d = sub_mod(add_mod(p.at(0, 1).exponent(), p.at(1, 0).exponent(), m),
                                add_mod(p.at(0, 0).exponent(), p.at(1, 1).exponent(), m), m);
      report.girth = Girth(girth_2x2(power(p.generator(), as_exponent(d))));
    } else {
      const std::size_t vertices = (p.block_rows() + p.block_cols()) * p.lift();
      report.girth = walk_girth(p, 14, std::max<std::size_t>(14, vertices));
    }
  }

  if (!report.girth.is_infinite()) {
    report.witness = find_cycle(p, report.girth.length());
    if (!report.witness) throw std::logic_error("girth-attaining cycle not found by enumeration");
  }
  return report;
}

}  // namespace permldpc

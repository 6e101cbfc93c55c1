#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permldpc/girth_oracle.hpp"
#include "permldpc/permutation.hpp"
#include "permldpc/proto_matrix.hpp"

namespace permldpc {

struct BlockPosition {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const BlockPosition&, const BlockPosition&) = default;
};

/// Block-index path of a 2k-cycle, following the row-first convention:
/// positions (j_0,l_0) -> (j_1,l_0) -> (j_1,l_1) -> ... -> (j_0,l_{k-1}) ->
/// (j_0,l_0). Only the k "pairs" (j_t, l_t) are stored; consecutive pairs
/// (cyclically) must differ in both row and column.
class CyclePath {
 public:
  /// Throws InvalidPathError for fewer than two pairs or a pair that repeats
  /// the row or column of its successor.
  explicit CyclePath(std::vector<BlockPosition> pairs);

  std::span<const BlockPosition> pairs() const noexcept { return pairs_; }
  std::size_t half_length() const noexcept { return pairs_.size(); }
  /// Number of Tanner-graph edges, 2k.
  std::size_t length() const noexcept { return 2 * pairs_.size(); }

  friend auto operator<=>(const CyclePath&, const CyclePath&) = default;

 private:
  std::vector<BlockPosition> pairs_;
};

std::string to_string(const CyclePath& path);

struct CycleWitness {
  CyclePath path;
  Symbol start_column = 0;

  friend auto operator<=>(const CycleWitness&, const CycleWitness&) = default;
};

/// Column-index recurrence c_{i+1} = R_{j_{i+1},l_{i+1}}^{-1}(R_{j_{i+1},l_i}(c_i)).
/// Returns the least c_0 for which c_k = c_0 and the 2k visited positions are
/// pairwise distinct, i.e. the path carries a genuine 2k-cycle. Throws
/// BlockIndexError for indices outside the grid and InvalidPathError when the
/// path touches a zero block.
std::optional<Symbol> fossorier_check(const ProtoMatrix& p, const CyclePath& path);

/// i = (a_1 - a_t) j_1 + (a_2 - a_1) j_2 + ... + (a_t - a_{t-1}) j_t mod m, the
/// exponent with c_{2t} = f^i(c_0) along the trajectory visiting rows with
/// coefficients a and columns with exponents j. Throws InvalidPathError for
/// unequal lengths, t < 2, or equal cyclic neighbours in either sequence.
Residue exponent_of_path(std::span<const std::int64_t> coefficients,
                         std::span<const std::int64_t> exponents, std::uint64_t modulus);

struct CycleTest {
  bool present = false;
  std::optional<CycleWitness> witness;
};

enum class Verdict { yes, no, unknown };

struct CycleVerdict {
  Verdict verdict = Verdict::unknown;
  std::optional<CycleWitness> witness;
};

// The closed-form predicates below need a regular proto-matrix (one with
// provenance) and throw UnsupportedError otherwise. Every positive answer
// carries a witness certified by fossorier_check.

/// Two block rows: some t in I_Delta (scaled by the nonzero coefficient) has
/// f^t with a fixed point. More rows: the same over A_Delta * I_Delta.
CycleTest has_4cycle(const ProtoMatrix& p);

/// Always absent with two block rows. Otherwise some distinct j1, j2, j3 in I
/// and coefficient differences c1 = a0 - a2, c2 = a1 - a0 of three distinct
/// rows give f^(c1 j1 + c2 j2 - (c1 + c2) j3) a fixed point.
CycleTest has_6cycle(const ProtoMatrix& p);

/// Two block rows without 4-cycles: exact, through differences of pair sums
/// of I. More rows: `yes` when A or I is not a B2 set (with the witness from
/// that coincidence), otherwise `unknown`; also `unknown` for two rows when
/// 4-cycles are present.
CycleVerdict has_8cycle(const ProtoMatrix& p);

/// Girth of the 2x2 matrix (1 1; 1 f): 4k for the least k with f^k not a
/// derangement.
std::size_t girth_2x2(const Permutation& f);

/// 12-cycle along (1 1 1; 1 s1 s2)-shaped 2x3 submatrices of commuting
/// blocks: pairs (u,x) (v,y) (u,z) (v,x) (u,y) (v,z). Returns the first
/// submatrix (rows, then columns, lexicographically) that
/// fossorier_check certifies; none for fewer than three block columns.
std::optional<CycleWitness> forced_12cycle(const ProtoMatrix& p);

/// For sigmas s_1..s_{2r} with r odd, checks at point c that all pairs commute
/// at c, that (s_1 s_3 ... s_{2t-1})(c) != (s_2 s_4 ... s_{2t})(c) for t < r and
/// that equality holds for t = r. Throws ArgumentError if the list length is
/// not 2r with r odd, DomainSizeError if c or the sizes do not fit.
bool odd_multiple_cycle_check(std::span<const Permutation> sigmas, Symbol c);

/// Exhaustive search over block paths in lexicographic order for a genuine
/// cycle of exactly `length` edges; returns the least (path, c_0). Works on
/// any proto-matrix, including irregular ones.
std::optional<CycleWitness> find_cycle(const ProtoMatrix& p, std::size_t length);

/// Shortest closed non-backtracking block walk of length in
/// [min_length, max_length] whose exponent sum lets f fix a point. When no
/// shorter cycle exists this is the girth. Infinity if none.
Girth walk_girth(const ProtoMatrix& p, std::size_t min_length, std::size_t max_length);

enum class Basis { theorem, enumeration, parity, walk };

std::string to_string(Basis b);

struct CycleReport {
  Girth girth;
  /// Cycle existence for lengths 4, 6, 8, 10, 12.
  std::map<std::size_t, bool> present;
  /// How each entry of `present` was decided.
  std::map<std::size_t, Basis> basis;
  std::optional<CycleWitness> witness;

  /// girth, per-length booleans and the witness as (j,l) pairs plus c0.
  std::string to_text() const;
};

/// Girth classification: closed-form predicates where they apply, exact
/// enumeration for the rest, and a walk search beyond length 12.
CycleReport classify(const ProtoMatrix& p);

}  // namespace permldpc

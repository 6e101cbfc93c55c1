#pragma once

#include <initializer_list>
#include <vector>

#include "permldpc/permutation.hpp"
#include "permldpc/proto_matrix.hpp"
#include "permldpc/residue_set.hpp"

namespace fixtures {

using namespace permldpc;

inline Permutation two_13_cycles() {
  CycleNotation c{26, {{}, {}}};
  for (Symbol x = 0; x < 13; ++x) {
    c.cycles[0].push_back(x);
    c.cycles[1].push_back(13 + x);
  }
  return Permutation::from_cycles(c);
}

inline ProtoMatrix regular(const Permutation& f, std::initializer_list<std::int64_t> a,
                           std::initializer_list<std::int64_t> i) {
  return build_regular(f, ResidueSet(f.order(), a), ResidueSet(f.order(), i));
}

// 29-cycle, A = {0, 1}, I = {0, 1, 4, 6, 13}.
inline ProtoMatrix two_row_29() { return regular(Permutation::m_cycle(29), {0, 1}, {0, 1, 4, 6, 13}); }

inline ProtoMatrix two_row_wide(const Permutation& f) {
  return regular(f, {0, 1}, {0, 1, 4, 6, 12, 10, 15, 24});
}

// A = {0, 1, -1} with a 17-cycle.
inline ProtoMatrix three_row(std::initializer_list<std::int64_t> i, std::size_t n = 17) {
  return regular(Permutation::m_cycle(n), {0, 1, -1}, i);
}

// 39x65 with 13x13 blocks; the base of the irregular extension.
inline ProtoMatrix three_row_13() { return three_row({0, 1, 4, 6, 8}, 13); }

// Appended column blocks: f^-4 in row 2, f in row 1, identity in row 0.
inline std::vector<ColumnExtension> irregular_additions() { return {{2, -4}, {1, 1}, {0, 0}}; }

inline ProtoMatrix irregular_13() { return extend_irregular(three_row_13(), irregular_additions()); }

}  // namespace fixtures

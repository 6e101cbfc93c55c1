#include <deque>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "permldpc/error.hpp"
#include "permldpc/girth_oracle.hpp"

using namespace permldpc;

namespace {

// Shortest cycle = min over edges (r, c) of 1 + distance(r, c) once that edge
// is removed.
Girth girth_by_edge_removal(const BinaryMatrix& h) {
  const std::size_t v = h.cols();
  const std::size_t total = v + h.rows();
  std::vector<std::vector<std::size_t>> adj(total);
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (h.get(r, c)) {
        adj[c].push_back(v + r);
        adj[v + r].push_back(c);
      }
  std::size_t best = SIZE_MAX;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) {
      if (!h.get(r, c)) continue;
      std::vector<std::size_t> dist(total, SIZE_MAX);
      std::deque<std::size_t> q{c};
      dist[c] = 0;
      while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop_front();
        for (std::size_t w : adj[u]) {
          if ((u == c && w == v + r) || dist[w] != SIZE_MAX) continue;
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
      }
      if (dist[v + r] != SIZE_MAX) best = std::min(best, dist[v + r] + 1);
    }
  return best == SIZE_MAX ? Girth::infinite() : Girth(best);
}

BinaryMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned density) {
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() % 100 < density) m.set(r, c);
  return m;
}

BinaryMatrix permuted(const BinaryMatrix& m, std::mt19937_64& rng) {
  std::vector<std::size_t> rp(m.rows()), cp(m.cols());
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  BinaryMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) out.set(rp[r], cp[c]);
  return out;
}

}  // namespace

TEST_CASE("girth of small matrices") {
  CHECK(oracle::girth(BinaryMatrix(0, 0)).is_infinite());
  CHECK(oracle::girth(BinaryMatrix(4, 6)).is_infinite());

  BinaryMatrix id(6, 6);
  for (std::size_t i = 0; i < 6; ++i) id.set(i, i);
  CHECK(oracle::girth(id).is_infinite());
  for (std::size_t len : {4, 6, 8, 10, 12}) CHECK_FALSE(oracle::has_cycle_of_length(id, len));

  // A path graph c0 - r0 - c1 - r1 - c2 is a tree.
  BinaryMatrix tree(2, 3);
  tree.set(0, 0);
  tree.set(0, 1);
  tree.set(1, 1);
  tree.set(1, 2);
  CHECK(oracle::girth(tree).is_infinite());

  for (std::size_t n : {1, 3, 8}) {
    const ProtoMatrix ones = fixtures::regular(Permutation::m_cycle(n), {0}, {0});
    const ProtoMatrix dup(Permutation::m_cycle(n), {{BlockEntry::identity(), BlockEntry::identity()},
                                                    {BlockEntry::identity(), BlockEntry::identity()}});
    CHECK(oracle::girth(expand(dup)) == Girth(4));
    CHECK(oracle::girth(expand(ones)).is_infinite());
  }
}

TEST_CASE("girth of the reference constructions") {
  CHECK(oracle::girth(expand(fixtures::two_row_29())) == Girth(12));
  const BinaryMatrix ex3 = expand(fixtures::three_row({0, 2, 4, 6, 8}));
  CHECK_FALSE(oracle::has_cycle_of_length(ex3, 4));
  CHECK(oracle::girth(ex3) >= Girth(6));
  CHECK(oracle::girth(ex3) == girth_by_edge_removal(ex3));
  CHECK(oracle::has_cycle_of_length(expand(fixtures::three_row({0, 1, 4, 6, 10})), 8));
  CHECK(oracle::girth(expand(fixtures::three_row({0, 1, 2, 3, 4}))) == Girth(6));
}

TEST_CASE("length-specific search rejects unsupported lengths") {
  const BinaryMatrix m(2, 2);
  CHECK_THROWS_AS(oracle::has_cycle_of_length(m, 2), ArgumentError);
  CHECK_THROWS_AS(oracle::has_cycle_of_length(m, 7), ArgumentError);
  CHECK_THROWS_AS(oracle::has_cycle_of_length(m, 14), ArgumentError);
}

TEST_CASE("girth agrees with edge-removal search on random matrices") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const BinaryMatrix m = random_sparse(rng, 1 + rng() % 14, 1 + rng() % 14, 8 + rng() % 30);
    const Girth g = oracle::girth(m);
    CHECK(g == girth_by_edge_removal(m));
    CHECK(g == oracle::girth(m.transpose()));
    CHECK(g == oracle::girth(permuted(m, rng)));
    for (std::size_t len = 4; len <= 12; len += 2) {
      if (len < g.length()) CHECK_FALSE(oracle::has_cycle_of_length(m, len));
      if (len == g.length()) CHECK(oracle::has_cycle_of_length(m, len));
    }
  }
}

TEST_CASE("exact-length search finds longer cycles past the girth") {
  // A 4-cycle and a disjoint 8-cycle.
  BinaryMatrix m(6, 6);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 0);
  m.set(1, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    m.set(2 + i, 2 + i);
    m.set(2 + i, 2 + (i + 1) % 4);
  }
  CHECK(oracle::girth(m) == Girth(4));
  CHECK(oracle::has_cycle_of_length(m, 4));
  CHECK_FALSE(oracle::has_cycle_of_length(m, 6));
  CHECK(oracle::has_cycle_of_length(m, 8));
  CHECK_FALSE(oracle::has_cycle_of_length(m, 10));
}

TEST_CASE("Tanner graph adjacency") {
  BinaryMatrix m(2, 3);
  m.set(0, 2);
  m.set(0, 0);
  m.set(1, 2);
  const TannerGraph g(m);
  CHECK(g.variable_count() == 3);
  CHECK(g.check_count() == 2);
  CHECK(g.variables_of(0) == std::vector<std::size_t>{0, 2});
  CHECK(g.checks_of(2) == std::vector<std::size_t>{0, 1});
  CHECK(g.checks_of(1).empty());
}

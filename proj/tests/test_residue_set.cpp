#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "permldpc/error.hpp"
#include "permldpc/permutation.hpp"
#include "permldpc/residue_set.hpp"

using namespace permldpc;

namespace {

ResidueSet signed_set(std::uint64_t m, std::initializer_list<std::int64_t> magnitudes) {
  std::vector<Residue> out;
  for (std::int64_t x : magnitudes) {
    out.push_back(reduce_mod(x, m));
    out.push_back(reduce_mod(-x, m));
  }
  return ResidueSet::collect(m, out);
}

ResidueSet random_set(std::mt19937_64& rng, std::uint64_t m, std::size_t max_size) {
  const std::size_t k = 1 + rng() % std::min<std::uint64_t>(max_size, m);
  std::set<Residue> picked;
  while (picked.size() < k) picked.insert(rng() % m);
  return ResidueSet::collect(m, {picked.begin(), picked.end()});
}

// All sums of t-element multisets, counted directly.
bool bt_by_counting(const ResidueSet& b, unsigned t) {
  const auto e = b.elements();
  std::map<Residue, int> counts;
  std::vector<std::size_t> idx(t, 0);
  while (true) {
    Residue s = 0;
    for (std::size_t i : idx) s = (s + e[i]) % b.modulus();
    if (++counts[s] > 1) return false;
    std::size_t pos = t;
    while (pos > 0 && idx[pos - 1] == e.size() - 1) --pos;
    if (pos == 0) return true;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < t; ++i) idx[i] = v;
  }
}

}  // namespace

TEST_CASE("construction") {
  const ResidueSet s(17, {0, -1, 4});
  CHECK(std::vector<Residue>(s.elements().begin(), s.elements().end()) ==
        std::vector<Residue>{0, 4, 16});
  CHECK(s.contains(16));
  CHECK_FALSE(s.contains(1));
  CHECK_THROWS_AS(ResidueSet(17, {1, 18}), MalformedSetError);
  CHECK_THROWS_AS(ResidueSet(0, {0}), ArgumentError);
  CHECK(ResidueSet::collect(5, {3, 3, 1}) == ResidueSet(5, {1, 3}));
}

TEST_CASE("difference sets") {
  CHECK(difference_set(ResidueSet(7, {0})).empty());
  CHECK(difference_set(ResidueSet(29, {0, 1, 4, 6, 13})) ==
        signed_set(29, {1, 2, 3, 4, 5, 6, 7, 9, 12, 13}));
  CHECK(difference_set(ResidueSet(101, {0, 1, 4, 6, 12, 10, 15, 24})) ==
        signed_set(101, {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 14, 15, 18, 20, 23, 24}));
  CHECK(to_signed_string(difference_set(ResidueSet(29, {0, 1, 4, 6, 13}))) ==
        "{±1, ±2, ±3, ±4, ±5, ±6, ±7, ±9, ±12, ±13}");
}

TEST_CASE("sum sets") {
  CHECK(sum_set(ResidueSet(5, {0})) == ResidueSet(5, {0}));
  CHECK(sum_set(ResidueSet(29, {0, 1, 4, 6, 13})) ==
        ResidueSet(29, {0, 1, 2, 4, 5, 6, 7, 8, 10, 12, 13, 14, 17, 19, 26}));
  CHECK(sum_set(ResidueSet(100, {0, 1, 2})) == ResidueSet(100, {0, 1, 2, 3, 4}));
}

TEST_CASE("product sets") {
  const ResidueSet a(17, {0, 1, -1});
  const ResidueSet i(17, {0, 2, 4, 6, 8});
  const ResidueSet a_delta = difference_set(a);
  CHECK(a_delta == signed_set(17, {1, 2}));

  // Doubling I_Delta = {±2, ±4, ±6, ±8} gives ±4, ±8, ±12, ±16; 6 is not among them.
  const ResidueSet two_i_delta = product_set(ResidueSet(17, {2}), difference_set(i));
  CHECK(two_i_delta == signed_set(17, {4, 8, 12, 16}));
  CHECK_FALSE(two_i_delta.contains(6));
  CHECK(product_set(ResidueSet(17, {2}), i) == ResidueSet(17, {0, 4, 8, 12, 16}));
  CHECK(product_set(a_delta, difference_set(i)) == signed_set(17, {2, 4, 6, 8, 12, 16}));

  CHECK(product_set(ResidueSet(17, {1}), i) == i);
  CHECK(product_set(ResidueSet(17, {-1, 1}), ResidueSet(17, {3})) == ResidueSet(17, {3, 14}));
  CHECK_THROWS_AS(product_set(ResidueSet(17, {1}), ResidueSet(13, {1})), ModulusMismatchError);
}

TEST_CASE("Sidon sets") {
  CHECK(is_bt_set(ResidueSet(7, {}), 2));
  CHECK(is_bt_set(ResidueSet(7, {3}), 2));
  CHECK(is_bt_set(ResidueSet(29, {0, 1, 4, 6, 13}), 2));
  CHECK_FALSE(is_bt_set(ResidueSet(17, {0, 1, 2, 3, 4}), 2));
  CHECK(is_bt_set(ResidueSet(17, {0, 1, 2, 3, 4}), 1));
  CHECK_FALSE(is_bt_set(ResidueSet(17, {0, 1, -1}), 2));
  CHECK_THROWS_AS(is_bt_set(ResidueSet(7, {0}), 0), ArgumentError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t m = 2 + rng() % 60;
    const ResidueSet b = random_set(rng, m, 6);
    for (unsigned t = 1; t <= 3; ++t) CHECK(is_bt_set(b, t) == bt_by_counting(b, t));
  }
}

TEST_CASE("B2 equivalences") {
  const B2Equivalences ex2 = b2_equivalences(ResidueSet(29, {0, 1, 4, 6, 13}));
  CHECK(ex2.distinct_pair_sums);
  CHECK(ex2.full_sum_set);
  CHECK(ex2.zero_free_sum_differences);
  CHECK(sum_set(ResidueSet(29, {0, 1, 4, 6, 13})).size() == 15);

  const B2Equivalences ex4 = b2_equivalences(ResidueSet(17, {0, 1, 2, 3, 4}));
  CHECK_FALSE(ex4.distinct_pair_sums);
  CHECK_FALSE(ex4.full_sum_set);
  CHECK_FALSE(ex4.zero_free_sum_differences);

  const B2Equivalences single = b2_equivalences(ResidueSet(7, {0}));
  CHECK(single.distinct_pair_sums);
  CHECK(single.full_sum_set);
  CHECK(single.zero_free_sum_differences);
}

TEST_CASE("set properties over random sets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t m = 1 + rng() % 101;
    const ResidueSet b = random_set(rng, m, 8);
    const ResidueSet d = difference_set(b);
    CHECK_FALSE(d.contains(0));
    for (Residue x : d.elements()) CHECK(d.contains((m - x) % m));

    const std::size_t k = b.size();
    const std::size_t sums = sum_set(b).size();
    CHECK(sums <= (k * k + k) / 2);
    CHECK((sums == (k * k + k) / 2) == is_bt_set(b, 2));
    CHECK(b2_equivalences(b).agree());
  }
}

TEST_CASE("greedy B2 construction") {
  CHECK(greedy_b2(1).elements == std::vector<std::int64_t>{0});
  CHECK(greedy_b2(4).elements == std::vector<std::int64_t>{0, 1, 3, 7});
  CHECK(greedy_b2(5).elements == std::vector<std::int64_t>{0, 1, 3, 7, 15});
  CHECK(is_bt_set(greedy_b2(5).reduce(31), 2));
  CHECK(greedy_b2(5).min_odd_modulus == 31);
  CHECK_THROWS_AS(greedy_b2(0), ArgumentError);

  for (std::size_t k = 1; k <= 6; ++k) {
    const GreedyB2 g = greedy_b2(k);
    const std::int64_t largest = g.elements.back();
    for (std::uint64_t m = 2 * largest + 1; m < 2 * largest + 60; m += 2) {
      if (m < 2) continue;
      CHECK(is_bt_set(g.reduce(m), 2));
    }
  }
}

TEST_CASE("sequence streams") {
  CHECK(enumerate_sequences(ResidueSet(5, {3}), 4, SequenceKind::S).next() == std::nullopt);

  auto collect = [](SequenceStream stream) {
    std::vector<std::vector<Residue>> out;
    for (const ExponentSequence& s : stream) out.push_back(s.terms);
    return out;
  };
  const ResidueSet b(7, {0, 1});
  CHECK(collect(enumerate_sequences(b, 1, SequenceKind::S)) ==
        std::vector<std::vector<Residue>>{{0, 1}, {1, 0}});
  CHECK(collect(enumerate_sequences(b, 3, SequenceKind::S)) ==
        std::vector<std::vector<Residue>>{{0, 1, 0, 1}, {1, 0, 1, 0}});
  CHECK(collect(enumerate_sequences(b, 2, SequenceKind::S)).empty());

  // Brute force over all index tuples, in lexicographic order.
  const ResidueSet c(11, {0, 2, 5, 7});
  for (unsigned t = 1; t <= 4; ++t) {
    std::vector<std::vector<Residue>> expected;
    std::vector<std::size_t> idx(t + 1, 0);
    const auto e = c.elements();
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i <= t; ++i)
        if (idx[i] == idx[(i + 1) % (t + 1)]) ok = false;
      if (ok) {
        std::vector<Residue> terms;
        for (std::size_t i : idx) terms.push_back(e[i]);
        expected.push_back(terms);
      }
      std::size_t pos = t + 1;
      while (pos > 0 && idx[pos - 1] == e.size() - 1) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
    CHECK(collect(enumerate_sequences(c, t, SequenceKind::S)) == expected);

    for (const ExponentSequence& d : enumerate_sequences(c, t, SequenceKind::d)) {
      CHECK(d.kind == SequenceKind::d);
      Residue sum = 0;
      for (Residue x : d.terms) sum = (sum + x) % 11;
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("set literals") {
  CHECK(parse_residue_set("{0, 1, 4, 6, 13}", 29) == ResidueSet(29, {0, 1, 4, 6, 13}));
  CHECK(parse_residue_set("0, 1, -1", 17) == ResidueSet(17, {0, 1, 16}));
  CHECK_THROWS_AS(parse_residue_set("0 1", 17), ParseError);
  CHECK(parse_residue_set("{}", 17).empty());
  CHECK(to_string(ResidueSet(17, {0, 1, -1})) == "{0, 1, 16}");
  CHECK_THROWS_AS(parse_residue_set("{0, 1, 18}", 17), MalformedSetError);
  try {
    parse_residue_set("{0, 1, x}", 17);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_residue_set("{0, 1", 17), ParseError);
}

#include <numeric>
#include <random>

#include "doctest.h"
#include "permldpc/error.hpp"
#include "permldpc/permutation.hpp"

using namespace permldpc;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Symbol> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

// Order by composing until the identity comes back.
std::uint64_t order_by_iteration(const Permutation& f) {
  const Permutation id = Permutation::identity(f.size());
  Permutation g = f;
  std::uint64_t k = 1;
  while (!(g == id)) {
    g = compose(f, g);
    ++k;
  }
  return k;
}

Permutation two_13_cycles() {
  CycleNotation c{26, {{}, {}}};
  for (Symbol x = 0; x < 13; ++x) {
    c.cycles[0].push_back(x);
    c.cycles[1].push_back(13 + x);
  }
  return Permutation::from_cycles(c);
}

}  // namespace

TEST_CASE("construction validates bijections") {
  CHECK_THROWS_AS(Permutation(std::vector<Symbol>{}), DomainSizeError);
  CHECK_THROWS_AS(Permutation(std::vector<Symbol>{0, 0, 1}), DomainSizeError);
  CHECK_THROWS_AS(Permutation(std::vector<Symbol>{0, 3, 1}), DomainSizeError);
  CHECK(Permutation(std::vector<Symbol>{2, 0, 1}).order() == 3);
}

TEST_CASE("compose") {
  const Permutation id5 = Permutation::identity(5);
  CHECK(compose(id5, id5) == id5);

  const Permutation f = Permutation::m_cycle(17);
  CHECK(compose(f, f.inverse()) == Permutation::identity(17));

  // (0 1 2) twice: 0 -> 1 -> 2, 1 -> 2 -> 0, 2 -> 0 -> 1.
  const Permutation c3 = parse_permutation("(0 1 2)");
  CHECK(compose(c3, c3) == Permutation(std::vector<Symbol>{2, 0, 1}));
  CHECK(to_string(compose(c3, c3)) == "(0 2 1)");

  CHECK_THROWS_AS(compose(id5, Permutation::identity(4)), DomainSizeError);
}

TEST_CASE("power reduces exponents modulo the order") {
  const Permutation f = Permutation::m_cycle(17);
  CHECK(power(f, 17) == Permutation::identity(17));
  CHECK(power(f, 1) == f);
  CHECK(power(f, 0) == Permutation::identity(17));
  CHECK(power(f, -1) == f.inverse());
  CHECK(power(f, -5) == power(f, 12));

  const Permutation g = two_13_cycles();
  CHECK(power(g, 13) == Permutation::identity(26));
  Permutation repeated = Permutation::identity(26);
  for (int k = 0; k < 13; ++k) repeated = compose(g, repeated);
  CHECK(repeated == Permutation::identity(26));
}

TEST_CASE("order") {
  CHECK(Permutation::identity(10).order() == 1);
  CHECK(two_13_cycles().order() == 13);
  CHECK(Permutation::m_cycle(29).order() == 29);
  CHECK(parse_permutation("(0 1 2)(3 4)").order() == 6);
}

TEST_CASE("derangements and fixed points") {
  CHECK_FALSE(Permutation::identity(1).is_derangement());
  CHECK_FALSE(Permutation::identity(7).is_derangement());

  const Permutation p = Permutation::m_cycle(13);
  for (int i = 1; i < 13; ++i) CHECK(power(p, i).is_derangement());
  CHECK_FALSE(power(p, 13).is_derangement());

  const Permutation g = parse_permutation("(0 1 2)(3 4)");
  CHECK_FALSE(power(g, 3).is_derangement());
  CHECK(power(g, 3).fixed_points() == std::vector<Symbol>{0, 1, 2});

  CHECK(Permutation::identity(4).fixed_points() == std::vector<Symbol>{0, 1, 2, 3});
  CHECK(Permutation::m_cycle(9).fixed_points().empty());
  CHECK(parse_permutation("(0 1 2)(3 4)", 6).fixed_points() == std::vector<Symbol>{5});
}

TEST_CASE("from_cycles and m_cycle") {
  CHECK(Permutation::from_cycles({5, {}}) == Permutation::identity(5));

  const Permutation f = Permutation::m_cycle(17);
  CHECK(f.order() == 17);
  CHECK(f.is_derangement());
  for (Symbol x = 0; x < 17; ++x) CHECK(f(x) == (x + 1) % 17);

  const Permutation g = two_13_cycles();
  CHECK(g(12) == 0);
  CHECK(g(25) == 13);
  CHECK(g.cycles().cycles.size() == 2);

  CHECK_THROWS_AS(Permutation::from_cycles({5, {{0, 1}, {1, 2}}}), MalformedCyclesError);
  CHECK_THROWS_AS(Permutation::from_cycles({3, {{0, 5}}}), MalformedCyclesError);
}

TEST_CASE("apply_power and fixed-point queries agree with materialized powers") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation f = random_permutation(1 + rng() % 30, rng);
    for (std::int64_t e = -40; e <= 40; e += 3) {
      const Permutation fe = power(f, e);
      for (Symbol x = 0; x < f.size(); ++x) CHECK(f.apply_power(x, e) == fe(x));
      CHECK(f.power_has_fixed_point(e) == !fe.is_derangement());
    }
  }
}

TEST_CASE("orbit representatives and cycle lengths") {
  const Permutation g = parse_permutation("(0 3)(1 4 2)", 6);
  CHECK(g.orbit_representatives() == std::vector<Symbol>{0, 1, 5});
  CHECK(std::vector<std::size_t>(g.cycle_lengths().begin(), g.cycle_lengths().end()) ==
        std::vector<std::size_t>{1, 2, 3});
  CHECK(g.cycle_length_of(4) == 3);
  CHECK(g.cycle_length_of(5) == 1);
}

TEST_CASE("properties over random permutations") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const Permutation f = random_permutation(n, rng);
    const std::uint64_t m = f.order();
    CHECK(m == order_by_iteration(f));

    const std::int64_t k = static_cast<std::int64_t>(rng() % 200) - 100;
    CHECK(power(f, k) == power(f, static_cast<std::int64_t>(reduce_mod(k, m))));
    CHECK(compose(f, power(f, static_cast<std::int64_t>(m) - 1)) == Permutation::identity(n));
    CHECK(f.inverse() == power(f, static_cast<std::int64_t>(m) - 1));

    const auto fixed = f.fixed_points();
    for (std::int64_t i = 1; i <= 6; ++i) {
      const auto fixed_i = power(f, i).fixed_points();
      for (Symbol x : fixed) CHECK(std::binary_search(fixed_i.begin(), fixed_i.end(), x));
    }

    if (f.is_derangement())
      for (std::uint64_t i = 1; i < 3 * m; ++i)
        if (std::gcd(i, m) == 1) CHECK(power(f, static_cast<std::int64_t>(i)).is_derangement());
  }
}

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(-1, 17) == 16);
  CHECK(reduce_mod(-17, 17) == 0);
  CHECK(reduce_mod(40, 17) == 6);
  CHECK(reduce_mod(INT64_MIN, 3) == static_cast<std::uint64_t>((INT64_MIN % 3 + 3) % 3));
}

TEST_CASE("cycle notation parsing and printing") {
  CHECK(to_string(parse_permutation("(0 1 2)(3 4)")) == "(0 1 2)(3 4)");
  CHECK(parse_permutation("(0 1 2)(3 4)").size() == 5);
  CHECK(parse_permutation("( 2 0 1 )").size() == 3);
  CHECK(parse_permutation("cycle:29") == Permutation::m_cycle(29));
  CHECK(parse_permutation("id:5") == Permutation::identity(5));
  CHECK(parse_permutation("id", 4) == Permutation::identity(4));
  CHECK(to_string(Permutation::identity(3)) == "id");
  CHECK(parse_permutation("(0 1)", 4).size() == 4);

  const CycleNotation c = parse_cycle_notation("(4 2)(0 3 1)");
  CHECK(c.n == 5);
  CHECK(c.cycles.size() == 2);

  CHECK_THROWS_AS(parse_cycle_notation("id"), ParseError);
  CHECK_THROWS_AS(parse_cycle_notation("(0 1"), ParseError);
  CHECK_THROWS_AS(parse_cycle_notation("(0 x)"), ParseError);
  CHECK_THROWS_AS(parse_cycle_notation("(0 1)(1 2)"), MalformedCyclesError);
  CHECK_THROWS_AS(parse_cycle_notation("(0 7)", 5), MalformedCyclesError);
  CHECK_THROWS_AS(parse_permutation("cycle:0"), Error);

  try {
    parse_cycle_notation("(0 1)(2 ?)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
  }
}

TEST_CASE("round trip through cycle notation") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation f = random_permutation(1 + rng() % 20, rng);
    CHECK(parse_permutation(to_string(f), f.size()) == f);
    CHECK(Permutation::from_cycles(f.cycles()) == f);
  }
}

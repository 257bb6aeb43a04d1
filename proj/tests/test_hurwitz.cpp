#include "doctest.h"
#include "characters.hpp"
#include "hurwitz.hpp"

using namespace dmm;

TEST_CASE("pinned covering counts, character route") {
  CHECK(hurwitz(2, {Partition{3}, Partition{3}}) == Rat(1, 3));
  CHECK(hurwitz(2, {Partition{3, 3}, Partition{3, 3}}) == Rat(1, 18));
  CHECK(hurwitz(1, {Partition{1, 1, 1}}) == Rat(2, 3));
  CHECK(hurwitz(2, {Partition{2}, Partition{2}, Partition{1, 1}}) == Rat(1, 2));
}

TEST_CASE("pinned covering counts, enumeration route") {
  // Euler characteristic e = 2 - 2h - m fixes the handle/puncture data
  CHECK(hurwitz_bruteforce(0, 0, {Partition{3}, Partition{3}}) == Rat(1, 3));
  CHECK(hurwitz_bruteforce(0, 0, {Partition{3, 3}, Partition{3, 3}}) == Rat(1, 18));
  CHECK(hurwitz_bruteforce(0, 1, {Partition{1, 1, 1}}) == Rat(2, 3));
  CHECK(hurwitz_bruteforce(0, 0, {Partition{2}, Partition{2}, Partition{1, 1}}) == Rat(1, 2));
}

TEST_CASE("two routes agree on small inputs") {
  // all profile lists of weight 3 with two branch points, spheres with 0 or 1
  // extra simple handles or punctures folded into e
  auto p3 = enumerate_partitions(3);
  for (auto& a : p3)
    for (auto& b : p3) {
      CHECK(hurwitz(2, {a, b}) == hurwitz_bruteforce(0, 0, {a, b}));
      CHECK(hurwitz(1, {a, b}) == hurwitz_bruteforce(0, 1, {a, b}));
      CHECK(hurwitz(0, {a, b}) == hurwitz_bruteforce(1, 0, {a, b}));
    }
  auto p2 = enumerate_partitions(2);
  for (auto& a : p2) CHECK(hurwitz(-1, {a}) == hurwitz_bruteforce(1, 1, {a}));
}

TEST_CASE("degree resolution") {
  CHECK(hurwitz(2, {Partition{3}, Partition{3}}, 3) == Rat(1, 3));
  CHECK_THROWS_AS(hurwitz(2, {Partition{3}, Partition{3}}, 4), error);
  CHECK_THROWS_AS(hurwitz(2, {Partition{3}, Partition{2}}), error);  // mixed weights
  CHECK_THROWS_AS(hurwitz(3, {Partition{2}}), error);  // Euler characteristic above 2
}

TEST_CASE("weighted sums") {
  // m = 0 removes the Pochhammer factor entirely
  CHECK(hurwitz_weighted(2, {Partition{3}, Partition{3}}, 0, Rat(7)) ==
        hurwitz(2, {Partition{3}, Partition{3}}));
  // independent recomputation of the m = 1 sum at weight 2
  Rat N(5, 2);
  Rat want(0);
  for (auto& la : enumerate_partitions(2)) {
    Rat term = rat_pow(dim_over_dfact(la), 2);
    term *= phi(la, Partition{2});
    term /= pochhammer_lambda(N, la);
    want += term;
  }
  CHECK(hurwitz_weighted(2, {Partition{2}}, 1, N) == want);
  // (N)_lambda vanishes at N = 1 for two-row shapes
  CHECK_THROWS_AS(hurwitz_weighted(2, {Partition{1, 1}}, 1, Rat(1)), error);
  try {
    hurwitz_weighted(2, {Partition{1, 1}}, 1, Rat(1));
  } catch (const error& e) {
    CHECK(e.code == errc::domain);
  }
}

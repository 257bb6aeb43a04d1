#include "doctest.h"
#include "characters.hpp"

using namespace dmm;

static Int factorial(int d) {
  Int f(1);
  for (int k = 2; k <= d; ++k) f *= k;
  return f;
}

TEST_CASE("pinned character values") {
  // trivial and sign representations
  for (int d = 1; d <= 5; ++d)
    for (auto& de : enumerate_partitions(d)) {
      CHECK(character(Partition{d}, de) == 1);
      int sign = ((d - de.length()) % 2 == 0) ? 1 : -1;
      CHECK(character(Partition(std::vector<int>(d, 1)), de) == sign);
    }
  // standard rep of S3
  CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(character(Partition{2, 1}, Partition{3}) == -1);
  // a d=4 row
  CHECK(character(Partition{2, 2}, Partition{1, 1, 1, 1}) == 2);
  CHECK(character(Partition{2, 2}, Partition{2, 1, 1}) == 0);
  CHECK(character(Partition{2, 2}, Partition{2, 2}) == 2);
  CHECK(character(Partition{2, 2}, Partition{3, 1}) == -1);
  CHECK(character(Partition{2, 2}, Partition{4}) == 0);
  // identity class gives the dimension
  for (int d = 1; d <= 6; ++d)
    for (auto& la : enumerate_partitions(d)) {
      Rat dim = dim_over_dfact(la) * Rat(factorial(d));
      CHECK(Rat(character(la, Partition(std::vector<int>(d, 1)))) == dim);
    }
}

TEST_CASE("recursion agrees with the linear-solve oracle") {
  for (int d = 1; d <= 5; ++d) {
    auto all = enumerate_partitions(d);
    for (auto& la : all)
      for (auto& de : all) CHECK(character(la, de) == character_oracle(la, de));
  }
}

TEST_CASE("row orthogonality") {
  for (int d = 1; d <= 6; ++d) {
    auto all = enumerate_partitions(d);
    for (auto& la : all)
      for (auto& mu : all) {
        Rat acc(0);
        for (auto& de : all)
          acc += Rat(character(la, de)) * Rat(character(mu, de)) / z_of(de);
        CHECK(acc == (la == mu ? Rat(1) : Rat(0)));
      }
  }
}

TEST_CASE("column orthogonality") {
  for (int d = 1; d <= 6; ++d) {
    auto all = enumerate_partitions(d);
    for (auto& de : all)
      for (auto& de2 : all) {
        Rat acc(0);
        for (auto& la : all) acc += Rat(character(la, de)) * Rat(character(la, de2));
        CHECK(acc == (de == de2 ? z_of(de) : Rat(0)));
      }
  }
}

TEST_CASE("normalized characters") {
  // phi = chi * d! / (dim * z); the identity class normalizes to 1
  for (int d = 1; d <= 6; ++d)
    for (auto& la : enumerate_partitions(d))
      CHECK(phi(la, Partition(std::vector<int>(d, 1))) == Rat(1));
  CHECK(phi(Partition{2}, Partition{2}) == Rat(1));
  CHECK(phi(Partition{1, 1}, Partition{2}) == Rat(-1));
  // chi = -1, d! = 6, dim = 2, z = 3
  CHECK(phi(Partition{2, 1}, Partition{3}) == Rat(-1) * Rat(6) / (Rat(2) * Rat(3)));
}

TEST_CASE("character table caching and layout") {
  const auto& t4 = character_table(4);
  CHECK(t4.d == 4);
  CHECK(t4.labels.size() == 5);
  auto all = enumerate_partitions(4);
  for (size_t i = 0; i < all.size(); ++i) CHECK(t4.labels[i] == all[i]);
  for (auto& la : all)
    for (auto& de : all) CHECK(t4.at(la, de) == character(la, de));
  CHECK(&character_table(4) == &t4);  // memoized
}

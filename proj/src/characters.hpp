#pragma once

#include <map>

#include "partition.hpp"
#include "rational.hpp"

namespace dmm {

// irreducible symmetric group character chi_lambda(Delta), |lambda| = |Delta|,
// by the border strip recursion with memoization
Int character(const Partition& la, const Partition& delta);

// normalized character value chi_lambda(Delta) d! / (dim lambda * z_Delta)
Rat phi(const Partition& la, const Partition& delta);

// full table at one weight; rows lambda, columns Delta, both in the
// enumeration order of enumerate_partitions(d)
struct CharacterTable {
  int d = 0;
  std::vector<Partition> labels;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Int> entries;
  Int at(const Partition& la, const Partition& delta) const;
};
const CharacterTable& character_table(int d);

// independent recomputation of chi_lambda(Delta) by exactly solving for the
// expansion of p_Delta over the Schur polynomials at weight d (d <= 6)
Int character_oracle(const Partition& la, const Partition& delta);

}  // namespace dmm

#pragma once

#include <optional>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace dmm {

// sum over partitions of weight d of (dim/d!)^e prod_i phi_lambda(Delta^i);
// d is inferred from the profiles and may be passed explicitly only when the
// profile list is empty (an unbranched count)
Rat hurwitz(int e, const std::vector<Partition>& profiles, std::optional<int> d = std::nullopt);

// weighted variant with an extra factor (1/(N)_lambda)^m per term
Rat hurwitz_weighted(int e, const std::vector<Partition>& profiles, int m, const Rat& N,
                     std::optional<int> d = std::nullopt);

// independent oracle: counts tuples in S_d with
//   sigma_1 ... sigma_F rho_1^2 ... rho_m^2 [alpha_1,beta_1] ... [alpha_h,beta_h] = id,
// sigma_i constrained to the class of profile i, everything else free,
// divided by d!; equals hurwitz(2 - 2h - m, profiles)
Rat hurwitz_bruteforce(int h, int m, const std::vector<Partition>& profiles,
                       std::optional<int> d = std::nullopt);

}  // namespace dmm

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mc.hpp"

namespace dmm {

struct VerifyCase {
  std::string name;
  Cplx closed{0.0, 0.0};
  Cplx mc{0.0, 0.0};
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  double z_re = 0.0;
  double z_im = 0.0;
  long samples = 0;
  bool inverted = false;  // negative control: pass means the discrepancy was detected
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  int N = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<VerifyCase> cases;
  bool all_pass = true;
};

std::vector<std::string> verify_suites();

// runs one named suite (or "all") of closed-form vs Monte Carlo comparisons;
// pass criterion is z <= 4 on each of the real and imaginary components
VerifyReport run_verify(const std::string& suite, int N, long samples, std::uint64_t seed,
                        int workers = 0);

}  // namespace dmm

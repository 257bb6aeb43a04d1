#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "ensemble.hpp"

namespace dmm {

struct McConfig {
  uint64_t seed = 1;
  long samples = 100000;
  int workers = 0;  // 0: take DMM_WORKERS from the environment, else run single-threaded
};

// one joint sample of all edge matrices, with the fixed sources alongside
struct Draw {
  const EnsembleSpec* ens = nullptr;
  const SourceAssignment* src = nullptr;
  std::vector<Eigen::MatrixXcd> edge;  // 1-based: edge[i] is the matrix on edge i

  // letter +i gives X_i C_{+i}, letter -i gives X_i^dagger C_{-i}
  // (the adjoint is the inverse on the unitary edges)
  Eigen::MatrixXcd dressed(int letter) const;
  Eigen::MatrixXcd monodromy(const std::vector<int>& word) const;
};

using Observable = std::function<Cplx(const Draw&)>;

struct McEstimate {
  Cplx mean{0.0, 0.0};
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  long samples = 0;
};

Eigen::MatrixXcd sample_ginibre(int N, double hbar, std::uint64_t key);
Eigen::MatrixXcd sample_haar_unitary(int N, std::uint64_t key);

// mean and per-component standard errors of obs over cfg.samples joint draws;
// results depend only on (seed, samples), not on the worker count
McEstimate mc_estimate(const EnsembleSpec& ens, const SourceAssignment& src, const Observable& obs,
                       const McConfig& cfg);

}  // namespace dmm

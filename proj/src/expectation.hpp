#pragma once

#include <string>
#include <vector>

#include "dessin.hpp"
#include "ensemble.hpp"
#include "partition.hpp"
#include "rfunc.hpp"
#include "sympoly.hpp"

namespace dmm {

// which side of the model indexes the observable; the closed form runs over the other side
enum class Side { faces, vertices };

inline const char* side_name(Side s) { return s == Side::faces ? "faces" : "vertices"; }

struct SeriesTerm {
  std::vector<Partition> labels;
  Cplx coeff{0.0, 0.0};
  bool exact = false;
  Rat exact_coeff = 0;
};

struct ClosedFormResult {
  Cplx value{0.0, 0.0};
  bool exact = false;
  Rat exact_value = 0;
  std::vector<SeriesTerm> series;
  std::string formula;
  std::string side;
  std::vector<std::string> notes;
  bool zero_by_mismatch = false;
};

// E{ prod_i tr(dressed W_i) } = hbar^n1 N^-n2 prod_j tr(W*_j)
ClosedFormResult trace_product_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                           const SourceAssignment& sources,
                                           Side side = Side::faces);

// E{ prod_i s_{lambda^i}(dressed W_i) }, one partition per observable word
ClosedFormResult schur_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                   const SourceAssignment& sources,
                                   const std::vector<Partition>& lambdas, Side side = Side::faces);

// E{ prod_i s_{lambda^i}(dressed W_i) det(dressed W_i)^{alpha_i} }, alphas nonnegative
ClosedFormResult schur_det_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                       const SourceAssignment& sources,
                                       const std::vector<Partition>& lambdas,
                                       const std::vector<int>& alphas, Side side = Side::faces);

// E{ prod_{i<=k} p_{delta^i}(dressed W_i) prod_{i>k} s_{mu^i}(dressed W_i) }, 1 <= k < word count
ClosedFormResult mixed_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                   const SourceAssignment& sources,
                                   const std::vector<Partition>& deltas,
                                   const std::vector<Partition>& mus, Side side = Side::faces);

// E{ prod_i p_{delta^i}(dressed W_i) } as a weighted-Hurwitz sum over opposite-side profiles
ClosedFormResult power_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                   const SourceAssignment& sources,
                                   const std::vector<Partition>& deltas, Side side = Side::faces);

// partition series sum_la r_la hbar^{n1|la|} (dim/|la|!)^{-n} prod_j s_la(W*_j) prod_i s_la(p^i),
// r_la = ((N)_la)^{-n2} prod_i r^i_la(0); one weight and one power-sum point per observable word
ClosedFormResult theorem_series(const DessinModel& model, const EnsembleSpec& ens,
                                const SourceAssignment& sources,
                                const std::vector<RFunction>& weights,
                                const std::vector<PowerSumPoint>& points, int d_max,
                                Side side = Side::faces);

}  // namespace dmm

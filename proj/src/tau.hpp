#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "rfunc.hpp"
#include "sympoly.hpp"

namespace dmm {

struct TauResult {
  Cplx series{0.0, 0.0};
  std::optional<Cplx> determinant;
  std::vector<std::string> notes;
};

// 1 + sum_{m=1}^{cap} (prod_{k=1}^m r(n+k)) x^m; pole inside the range is a domain error
Cplx tau_scalar(const RFunction& r, int n, Cplx x, int cap);

// sum_{|la|<=cap} r_la(n) s_la(X) s_la(Y) against its determinantal form
TauResult tau_XY(const RFunction& r, int n, const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y,
                 int cap);

// needs r(0)=0; series over l(la)<=n, |la|<=cap, against the shifted-entry determinant
TauResult tau_pp(const RFunction& r, int n, const PowerSumPoint& p1, const PowerSumPoint& p2,
                 int cap);

// sum r_la(n) s_la(X) s_la(p) against its determinantal form
TauResult tau_Xp(const RFunction& r, int n, const Eigen::MatrixXcd& X, const PowerSumPoint& p,
                 int cap);

// sum_la alpha^{|la|}/(N)_la s_la(A)s_la(B) against det[e^{alpha a_i b_j}] normalized to 1 at alpha=0
TauResult hciz(Cplx alpha, const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, int cap);

// sum over l(la)<=N, |la|<=cap of s_la(p) s_la(pbar)
Cplx morozov_series(const PowerSumPoint& p, const PowerSumPoint& pbar, int N, int cap);

}  // namespace dmm

#include "tau.hpp"

#include <cmath>

#include "partition.hpp"

namespace dmm {

namespace {

std::vector<Cplx> spectrum(const Eigen::MatrixXcd& X) {
  if (X.rows() != X.cols()) throw error(errc::argument, "matrix must be square");
  Eigen::VectorXcd ev = X.eigenvalues();
  return std::vector<Cplx>(ev.data(), ev.data() + ev.size());
}

bool degenerate_spectrum(const std::vector<Cplx>& ev, std::string& why) {
  double scale = 0;
  for (auto& v : ev) scale = std::max(scale, std::abs(v));
  double thresh = 1e-8 * std::max(scale, 1e-12);
  for (size_t i = 0; i < ev.size(); ++i)
    for (size_t j = i + 1; j < ev.size(); ++j)
      if (std::abs(ev[i] - ev[j]) <= thresh) {
        why = "eigenvalue gap " + std::to_string(std::abs(ev[i] - ev[j])) +
              " is below the resolution threshold";
        return true;
      }
  return false;
}

Cplx vandermonde(const std::vector<Cplx>& ev) {
  Cplx v(1.0, 0.0);
  for (size_t i = 0; i < ev.size(); ++i)
    for (size_t j = i + 1; j < ev.size(); ++j) v *= (ev[i] - ev[j]);
  return v;
}

// R[m] = prod_{k=1}^m r(nu+k); false when a pole sits in the range
bool weight_chain(const RFunction& r, const Rat& nu, int cap, std::vector<Rat>& R,
                  std::string& why) {
  R.assign(cap + 1, Rat(1));
  for (int m = 1; m <= cap; ++m) {
    Rat v;
    if (!r.eval(nu + m, v)) {
      why = "weight function has a pole at x=" + rat_str(nu + m);
      return false;
    }
    R[m] = R[m - 1] * v;
  }
  return true;
}

Rat content_weight_product(const RFunction& r, int n, const Partition& la) {
  return content_product([&](const Rat& x, Rat& out) { return r.eval(x, out); }, n, la);
}

// a pole of r at 0 makes every coefficient with more than n rows vanish under
// gamma-function regularization; rows_capped reports the skip so callers can note it
bool pole_at_zero(const RFunction& r) {
  Rat v;
  return !r.eval(Rat(0), v);
}

// s_(m) at a power-sum point, m = 0..cap
std::vector<Cplx> row_schur_values(const PowerSumPoint& p, int cap) {
  std::vector<Cplx> h(cap + 1);
  h[0] = Cplx(1.0, 0.0);
  for (int m = 1; m <= cap; ++m) h[m] = schur_at_point(Partition{m}, p);
  return h;
}

// partitions with at most rows parts, each at most maxpart
void box_partitions(int maxpart, int rows, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  out.push_back(Partition(std::vector<int>(cur)));
  if ((int)cur.size() >= rows) return;
  int hi = cur.empty() ? maxpart : std::min(maxpart, cur.back());
  for (int p = hi; p >= 1; --p) {
    cur.push_back(p);
    box_partitions(maxpart, rows, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Cplx tau_scalar(const RFunction& r, int n, Cplx x, int cap) {
  if (cap < 0) throw error(errc::argument, "series cap must be nonnegative");
  Cplx out(1.0, 0.0);
  Rat run(1);
  Cplx xp(1.0, 0.0);
  for (int m = 1; m <= cap; ++m) {
    run *= r.eval_or_throw(Rat(n) + m);
    xp *= x;
    out += Cplx(to_double(run), 0.0) * xp;
  }
  return out;
}

TauResult tau_XY(const RFunction& r, int n, const Eigen::MatrixXcd& X, const Eigen::MatrixXcd& Y,
                 int cap) {
  if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows())
    throw error(errc::argument, "X and Y must be square matrices of the same size");
  if (cap < 0) throw error(errc::argument, "series cap must be nonnegative");
  int N = (int)X.rows();
  auto sx = spectrum(X), sy = spectrum(Y);

  TauResult res;
  bool trunc = pole_at_zero(r), trunc_hit = false;
  for (int d = 0; d <= cap; ++d)
    for (const auto& la : enumerate_partitions(d)) {
      if (la.length() > N) continue;
      if (trunc && la.length() > n) {
        trunc_hit = true;
        continue;
      }
      Rat w = content_weight_product(r, n, la);
      if (w == 0) continue;
      res.series += Cplx(to_double(w), 0.0) * schur_eval_spectrum(la, sx) *
                    schur_eval_spectrum(la, sy);
    }
  if (trunc_hit)
    res.notes.push_back("weight pole at x=0 truncates the sum to partitions with at most " +
                        std::to_string(n) + " rows");

  std::string why;
  if (degenerate_spectrum(sx, why) || degenerate_spectrum(sy, why)) {
    res.notes.push_back("determinant route refused: " + why);
    return res;
  }
  int mcap = cap + N - 1;
  std::vector<Rat> R;
  if (!weight_chain(r, Rat(n - N), mcap, R, why)) {
    res.notes.push_back("determinant route refused: " + why + " inside the entry range");
    return res;
  }
  Rat norm(1);
  for (int t = 1; t <= N - 1; ++t) {
    Rat v;
    if (!r.eval(Rat(n - t), v)) {
      res.notes.push_back("determinant route refused: weight function has a pole at x=" +
                          rat_str(Rat(n - t)) + " in the normalization");
      return res;
    }
    if (v == 0) {
      res.notes.push_back("determinant route refused: weight function vanishes at x=" +
                          rat_str(Rat(n - t)) + ", normalization constant undefined");
      return res;
    }
    norm *= rat_pow(v, t);
  }
  Eigen::MatrixXcd E(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Cplx u = sx[i] * sy[j], up(1.0, 0.0), acc(1.0, 0.0);
      for (int m = 1; m <= mcap; ++m) {
        up *= u;
        acc += Cplx(to_double(R[m]), 0.0) * up;
      }
      E(i, j) = acc;
    }
  res.determinant =
      E.determinant() / (vandermonde(sx) * vandermonde(sy) * Cplx(to_double(norm), 0.0));
  return res;
}

TauResult tau_pp(const RFunction& r, int n, const PowerSumPoint& p1, const PowerSumPoint& p2,
                 int cap) {
  Rat r0;
  if (!r.eval(Rat(0), r0) || r0 != 0)
    throw error(errc::domain, "this representation needs a weight function with r(0) = 0");
  if (n < 1) throw error(errc::argument, "matrix order n must be at least 1");
  if (cap < 0) throw error(errc::argument, "series cap must be nonnegative");

  // the series runs over the same box the capped-entry determinant expands to,
  // so the two routes compute identical finite sums
  TauResult res;
  std::vector<Partition> box;
  {
    std::vector<int> cur;
    box_partitions(cap, n, cur, box);
  }
  for (const auto& la : box) {
    Rat w = content_weight_product(r, n, la);
    if (w == 0) continue;
    res.series += Cplx(to_double(w), 0.0) * schur_at_point(la, p1) * schur_at_point(la, p2);
  }

  std::string why;
  Rat cn(1);
  for (int i = 1; i <= n - 1; ++i) {
    Rat v;
    if (!r.eval(Rat(i), v) || v == 0) {
      res.notes.push_back("determinant route refused: normalization needs nonzero r(" +
                          std::to_string(i) + ")");
      return res;
    }
    cn *= rat_pow(v, i - n);
  }
  int mcap = cap + n - 1;
  std::vector<Rat> R;
  if (!weight_chain(r, Rat(0), mcap, R, why)) {
    res.notes.push_back("determinant route refused: " + why + " inside the entry range");
    return res;
  }
  auto h1 = row_schur_values(p1, mcap), h2 = row_schur_values(p2, mcap);
  Eigen::MatrixXcd E(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Cplx acc(0.0, 0.0);
      for (int m = std::max(a, b); m <= mcap; ++m)
        acc += Cplx(to_double(R[m]), 0.0) * h1[m - a] * h2[m - b];
      E(a, b) = acc;
    }
  res.determinant = Cplx(to_double(cn), 0.0) * E.determinant();
  return res;
}

TauResult tau_Xp(const RFunction& r, int n, const Eigen::MatrixXcd& X, const PowerSumPoint& p,
                 int cap) {
  if (X.rows() != X.cols()) throw error(errc::argument, "X must be square");
  if (cap < 0) throw error(errc::argument, "series cap must be nonnegative");
  int N = (int)X.rows();
  auto sx = spectrum(X);

  TauResult res;
  bool trunc = pole_at_zero(r), trunc_hit = false;
  for (int d = 0; d <= cap; ++d)
    for (const auto& la : enumerate_partitions(d)) {
      if (la.length() > N) continue;
      if (trunc && la.length() > n) {
        trunc_hit = true;
        continue;
      }
      Rat w = content_weight_product(r, n, la);
      if (w == 0) continue;
      res.series += Cplx(to_double(w), 0.0) * schur_eval_spectrum(la, sx) * schur_at_point(la, p);
    }
  if (trunc_hit)
    res.notes.push_back("weight pole at x=0 truncates the sum to partitions with at most " +
                        std::to_string(n) + " rows");

  std::string why;
  if (degenerate_spectrum(sx, why)) {
    res.notes.push_back("determinant route refused: " + why);
    return res;
  }
  int mcap = cap + N - 1;
  auto h = row_schur_values(p, mcap);
  Eigen::MatrixXcd M(N, N);
  for (int k = 1; k <= N; ++k) {
    std::vector<Rat> R;
    if (!weight_chain(r, Rat(n - k), mcap, R, why)) {
      res.notes.push_back("determinant route refused: " + why + " inside the entry range");
      return res;
    }
    for (int i = 0; i < N; ++i) {
      Cplx xp(1.0, 0.0), acc(1.0, 0.0);
      for (int m = 1; m <= mcap; ++m) {
        xp *= sx[i];
        acc += Cplx(to_double(R[m]), 0.0) * xp * h[m];
      }
      M(i, k - 1) = std::pow(sx[i], N - k) * acc;
    }
  }
  res.determinant = M.determinant() / vandermonde(sx);
  return res;
}

TauResult hciz(Cplx alpha, const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, int cap) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw error(errc::argument, "A and B must be square matrices of the same size");
  if (cap < 0) throw error(errc::argument, "series cap must be nonnegative");
  int N = (int)A.rows();
  TauResult res;
  if (alpha == Cplx(0.0, 0.0)) {
    res.series = Cplx(1.0, 0.0);
    res.determinant = Cplx(1.0, 0.0);
    res.notes.push_back("alpha = 0: both routes are identically 1");
    return res;
  }
  auto sa = spectrum(A), sb = spectrum(B);
  Cplx ap(1.0, 0.0);
  for (int d = 0; d <= cap; ++d) {
    for (const auto& la : enumerate_partitions(d)) {
      if (la.length() > N) continue;
      Rat poch = pochhammer_lambda(Rat(N), la);
      res.series +=
          ap / Cplx(to_double(poch), 0.0) * schur_eval_spectrum(la, sa) * schur_eval_spectrum(la, sb);
    }
    ap *= alpha;
  }
  std::string why;
  if (degenerate_spectrum(sa, why) || degenerate_spectrum(sb, why)) {
    res.notes.push_back("determinant route refused: " + why);
    return res;
  }
  Eigen::MatrixXcd E(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) E(i, j) = std::exp(alpha * sa[i] * sb[j]);
  Cplx norm(1.0, 0.0);
  for (int t = 1; t <= N - 1; ++t) norm *= std::pow(Cplx(N - t, 0.0) / alpha, t);
  res.determinant = E.determinant() / (vandermonde(sa) * vandermonde(sb)) * norm;
  return res;
}

Cplx morozov_series(const PowerSumPoint& p, const PowerSumPoint& pbar, int N, int cap) {
  if (N < 1) throw error(errc::argument, "matrix size must be positive");
  if (cap < 0) throw error(errc::argument, "series cap must be nonnegative");
  Cplx out(0.0, 0.0);
  for (int d = 0; d <= cap; ++d)
    for (const auto& la : enumerate_partitions(d)) {
      if (la.length() > N) continue;
      out += schur_at_point(la, p) * schur_at_point(la, pbar);
    }
  return out;
}

}  // namespace dmm

#include "mc.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "seeding.hpp"

namespace dmm {

namespace {

// explicit uniform/normal generation so streams are bit-stable across platforms
struct NormalStream {
  std::mt19937_64 eng;
  double spare = 0.0;
  bool has_spare = false;

  explicit NormalStream(std::uint64_t key) : eng(key) {}

  double uniform() { return (double)(eng() >> 11) * 0x1.0p-53; }

  double normal() {
    if (has_spare) {
      has_spare = false;
      return spare;
    }
    double u1 = 1.0 - uniform();  // keep away from log(0)
    double u2 = uniform();
    double m = std::sqrt(-2.0 * std::log(u1));
    spare = m * std::sin(2.0 * M_PI * u2);
    has_spare = true;
    return m * std::cos(2.0 * M_PI * u2);
  }
};

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DMM_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

Eigen::MatrixXcd sample_ginibre(int N, double hbar, std::uint64_t key) {
  NormalStream g(key);
  double s = std::sqrt(hbar / 2.0);
  Eigen::MatrixXcd Z(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double re = g.normal(), im = g.normal();
      Z(i, j) = Cplx(s * re, s * im);
    }
  return Z;
}

Eigen::MatrixXcd sample_haar_unitary(int N, std::uint64_t key) {
  NormalStream g(key);
  Eigen::MatrixXcd G(N, N);
  double s = std::sqrt(0.5);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double re = g.normal(), im = g.normal();
      G(i, j) = Cplx(s * re, s * im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(N, N);
  Eigen::MatrixXcd R = qr.matrixQR();
  // fix the phase ambiguity of QR so Q is Haar distributed
  for (int j = 0; j < N; ++j) {
    Cplx d = R(j, j);
    double a = std::abs(d);
    Cplx phase = (a > 0) ? d / a : Cplx(1.0, 0.0);
    Q.col(j) *= phase;
  }
  return Q;
}

Eigen::MatrixXcd Draw::dressed(int letter) const {
  int i = letter > 0 ? letter : -letter;
  const Eigen::MatrixXcd& X = edge.at((size_t)i);
  const Eigen::MatrixXcd& C = src->mats.at(letter);
  if (letter > 0) return X * C;
  return X.adjoint() * C;
}

Eigen::MatrixXcd Draw::monodromy(const std::vector<int>& word) const {
  int N = ens->N;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(N, N);
  for (int letter : word) M = M * dressed(letter);
  return M;
}

McEstimate mc_estimate(const EnsembleSpec& ens, const SourceAssignment& src, const Observable& obs,
                       const McConfig& cfg) {
  if (cfg.samples <= 0) throw error(errc::argument, "sample count must be positive");
  src.validate(ens.n(), ens.N);
  long S = cfg.samples;
  int workers = resolve_workers(cfg.workers);
  if (workers > S) workers = (int)S;
  double hb = to_double(ens.hbar);

  std::vector<Cplx> vals((size_t)S);
  auto run = [&](long lo, long hi) {
    for (long s = lo; s < hi; ++s) {
      Draw d;
      d.ens = &ens;
      d.src = &src;
      d.edge.resize((size_t)ens.n() + 1);
      for (int e = 1; e <= ens.n(); ++e) {
        std::uint64_t key = key3(cfg.seed, (std::uint64_t)s, (std::uint64_t)e);
        d.edge[(size_t)e] = (ens.kinds[(size_t)e - 1] == EdgeKind::gaussian)
                                ? sample_ginibre(ens.N, hb, key)
                                : sample_haar_unitary(ens.N, key);
      }
      vals[(size_t)s] = obs(d);
    }
  };

  if (workers <= 1) {
    run(0, S);
  } else {
    std::vector<std::thread> pool;
    long chunk = (S + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long lo = (long)w * chunk, hi = std::min(S, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  Kahan sre, sim;
  for (long s = 0; s < S; ++s) {
    sre.add(vals[(size_t)s].real());
    sim.add(vals[(size_t)s].imag());
  }
  McEstimate est;
  est.samples = S;
  est.mean = Cplx(sre.sum / (double)S, sim.sum / (double)S);
  if (S > 1) {
    Kahan vre, vim;
    for (long s = 0; s < S; ++s) {
      double dre = vals[(size_t)s].real() - est.mean.real();
      double dim = vals[(size_t)s].imag() - est.mean.imag();
      vre.add(dre * dre);
      vim.add(dim * dim);
    }
    est.stderr_re = std::sqrt(vre.sum / (double)(S - 1) / (double)S);
    est.stderr_im = std::sqrt(vim.sum / (double)(S - 1) / (double)S);
  }
  return est;
}

}  // namespace dmm

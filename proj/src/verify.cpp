#include "verify.hpp"

#include <algorithm>
#include <cmath>

#include "expectation.hpp"
#include "seeding.hpp"
#include "sympoly.hpp"
#include "tau.hpp"

namespace dmm {

namespace {

struct Ctx {
  int N;
  long samples;
  std::uint64_t seed;
  int workers;
  VerifyReport* rep;

  McConfig cfg() const {
    McConfig c;
    c.samples = samples;
    c.workers = workers;
    c.seed = mix64(key2(seed, (std::uint64_t)rep->cases.size()));
    return c;
  }
};

void push_case(Ctx& ctx, const std::string& name, Cplx closed, const EnsembleSpec& ens,
               const SourceAssignment& src, const Observable& obs, bool inverted = false) {
  VerifyCase vc;
  vc.name = name;
  vc.closed = closed;
  vc.inverted = inverted;
  auto est = mc_estimate(ens, src, obs, ctx.cfg());
  vc.mc = est.mean;
  vc.stderr_re = est.stderr_re;
  vc.stderr_im = est.stderr_im;
  vc.samples = est.samples;
  vc.z_re = std::abs(closed.real() - est.mean.real()) / std::max(est.stderr_re, 1e-10);
  vc.z_im = std::abs(closed.imag() - est.mean.imag()) / std::max(est.stderr_im, 1e-10);
  bool agree = vc.z_re <= 4.0 && vc.z_im <= 4.0;
  vc.pass = inverted ? !agree : agree;
  ctx.rep->all_pass = ctx.rep->all_pass && vc.pass;
  ctx.rep->cases.push_back(std::move(vc));
}

Observable obs_trace_product(const DessinModel& m) {
  auto faces = m.faces();
  return [faces](const Draw& d) {
    Cplx out(1.0, 0.0);
    for (const auto& w : faces) out *= d.monodromy(w).trace();
    return out;
  };
}

Observable obs_schur_product(const DessinModel& m, std::vector<Partition> las) {
  auto faces = m.faces();
  return [faces, las](const Draw& d) {
    Cplx out(1.0, 0.0);
    for (size_t f = 0; f < faces.size(); ++f) out *= schur_eval_matrix(las[f], d.monodromy(faces[f]));
    return out;
  };
}

Observable obs_power_product(const DessinModel& m, std::vector<Partition> deltas) {
  auto faces = m.faces();
  return [faces, deltas](const Draw& d) {
    Cplx out(1.0, 0.0);
    for (size_t f = 0; f < faces.size(); ++f) out *= power_sum_eval(deltas[f], d.monodromy(faces[f]));
    return out;
  };
}

Observable obs_det_schur_product(const DessinModel& m, std::vector<Partition> las,
                                 std::vector<int> alphas) {
  auto faces = m.faces();
  return [faces, las, alphas](const Draw& d) {
    Cplx out(1.0, 0.0);
    for (size_t f = 0; f < faces.size(); ++f) {
      Eigen::MatrixXcd M = d.monodromy(faces[f]);
      Cplx det = M.determinant(), dp(1.0, 0.0);
      for (int k = 0; k < alphas[f]; ++k) dp *= det;
      out *= dp * schur_eval_matrix(las[f], M);
    }
    return out;
  };
}

Observable obs_mixed_product(const DessinModel& m, std::vector<Partition> deltas,
                             std::vector<Partition> mus) {
  auto faces = m.faces();
  size_t k = deltas.size();
  return [faces, deltas, mus, k](const Draw& d) {
    Cplx out(1.0, 0.0);
    for (size_t f = 0; f < faces.size(); ++f) {
      Eigen::MatrixXcd M = d.monodromy(faces[f]);
      out *= (f < k) ? power_sum_eval(deltas[f], M) : schur_eval_matrix(mus[f - k], M);
    }
    return out;
  };
}

// every two-edge map: faces are the cycles of a permutation of the four letters
std::vector<DessinModel> connected_two_edge_models() {
  const int letters[4] = {1, -1, 2, -2};
  int idx[4] = {0, 1, 2, 3};
  std::vector<DessinModel> out;
  std::sort(idx, idx + 4);
  do {
    bool seen[4] = {false, false, false, false};
    std::vector<std::vector<int>> faces;
    for (int s = 0; s < 4; ++s) {
      if (seen[s]) continue;
      std::vector<int> cyc;
      int cur = s;
      while (!seen[cur]) {
        seen[cur] = true;
        cyc.push_back(letters[cur]);
        cur = idx[cur];
      }
      faces.push_back(std::move(cyc));
    }
    DessinModel m = DessinModel::from_faces(faces);
    if (m.connected()) out.push_back(std::move(m));
  } while (std::next_permutation(idx, idx + 4));
  return out;
}

void suite_lemmas(Ctx& ctx) {
  Rat hb(1, ctx.N);
  auto ensG = EnsembleSpec::parse("G", ctx.N, hb);
  auto ensU = EnsembleSpec::parse("U", ctx.N, {});
  auto cyc = DessinModel::from_faces({{1, -1}});    // one face, two stars
  auto split = DessinModel::from_faces({{1}, {-1}});  // two faces, one star
  auto src = SourceAssignment::deterministic(1, ctx.N, 11);

  push_case(ctx, "gaussian-trace-joined", trace_product_expectation(cyc, ensG, src).value, ensG,
            src, obs_trace_product(cyc));
  push_case(ctx, "gaussian-trace-split", trace_product_expectation(split, ensG, src).value, ensG,
            src, obs_trace_product(split));

  std::vector<Partition> ws = {Partition{1}, Partition{2}, Partition{1, 1},
                               Partition{3}, Partition{2, 1}, Partition{1, 1, 1}};
  for (const auto& la : ws)
    push_case(ctx, "gaussian-schur-" + la.str(),
              schur_expectation(cyc, ensG, src, {la}).value, ensG, src,
              obs_schur_product(cyc, {la}));

  // the two degree-2 single-trace identities
  push_case(ctx, "gaussian-trace-of-square",
            power_expectation(cyc, ensG, src, {Partition{2}}).value, ensG, src,
            obs_power_product(cyc, {Partition{2}}));
  push_case(ctx, "gaussian-squared-trace",
            power_expectation(cyc, ensG, src, {Partition{1, 1}}).value, ensG, src,
            obs_power_product(cyc, {Partition{1, 1}}));
  push_case(ctx, "gaussian-power-w3",
            power_expectation(cyc, ensG, src, {Partition{2, 1}}).value, ensG, src,
            obs_power_product(cyc, {Partition{2, 1}}));

  // split Schur pair: diagonal in the labels
  push_case(ctx, "gaussian-schur-pair-equal",
            schur_expectation(split, ensG, src, {Partition{2}, Partition{2}}).value, ensG, src,
            obs_schur_product(split, {Partition{2}, Partition{2}}));
  push_case(ctx, "gaussian-schur-pair-offdiag",
            schur_expectation(split, ensG, src, {Partition{2}, Partition{1, 1}}).value, ensG, src,
            obs_schur_product(split, {Partition{2}, Partition{1, 1}}));

  // unitary-edge analogues
  for (const auto& la : {Partition{1}, Partition{2}, Partition{1, 1}})
    push_case(ctx, "unitary-schur-" + la.str(),
              schur_expectation(cyc, ensU, src, {la}).value, ensU, src,
              obs_schur_product(cyc, {la}));
  push_case(ctx, "unitary-schur-pair-equal",
            schur_expectation(split, ensU, src, {Partition{2}, Partition{2}}).value, ensU, src,
            obs_schur_product(split, {Partition{2}, Partition{2}}));
  push_case(ctx, "unitary-schur-pair-offdiag",
            schur_expectation(split, ensU, src, {Partition{1, 1}, Partition{2}}).value, ensU, src,
            obs_schur_product(split, {Partition{1, 1}, Partition{2}}));

  Cplx truth = trace_product_expectation(cyc, ensG, src).value;
  push_case(ctx, "negative-control", truth * 2.0, ensG, src, obs_trace_product(cyc), true);
}

void suite_prop1(Ctx& ctx) {
  Rat hb(1, ctx.N);
  auto ensGG = EnsembleSpec::parse("G,G", ctx.N, hb);
  auto src = SourceAssignment::deterministic(2, ctx.N, 23);

  auto models = connected_two_edge_models();
  int i = 0;
  for (const auto& m : models) {
    std::string name = "two-edge-" + std::to_string(++i) + "-F" + std::to_string(m.num_faces()) +
                       "V" + std::to_string(m.num_vertices()) + "g" + std::to_string(m.genus());
    push_case(ctx, name, trace_product_expectation(m, ensGG, src).value, ensGG, src,
              obs_trace_product(m));
  }

  // the three-face chain presentation
  auto chain = DessinModel::from_faces({{-1, -2}, {1}, {2}});
  push_case(ctx, "chain-three-faces", trace_product_expectation(chain, ensGG, src).value, ensGG,
            src, obs_trace_product(chain));

  auto torus = DessinModel::from_faces({{1, -2, -1, 2}});
  auto ensGU = EnsembleSpec::parse("G,U", ctx.N, hb);
  push_case(ctx, "torus-mixed-ensemble", trace_product_expectation(torus, ensGU, src).value, ensGU,
            src, obs_trace_product(torus));
  auto sphere = DessinModel::from_faces({{1, -1, 2, -2}});
  auto ensUU = EnsembleSpec::parse("U,U", ctx.N, {});
  push_case(ctx, "one-face-unitary-pair", trace_product_expectation(sphere, ensUU, src).value,
            ensUU, src, obs_trace_product(sphere));

  Cplx truth = trace_product_expectation(models[0], ensGG, src).value;
  push_case(ctx, "negative-control", truth * 3.0, ensGG, src, obs_trace_product(models[0]), true);
}

void suite_prop2(Ctx& ctx) {
  Rat hb(1, ctx.N);
  auto ensG = EnsembleSpec::parse("G", ctx.N, hb);
  auto cyc = DessinModel::from_faces({{1, -1}});

  // determinant insertion with the second source pinned to the identity
  auto srcI = SourceAssignment::deterministic(1, ctx.N, 31);
  srcI.mats[-1] = Eigen::MatrixXcd::Identity(ctx.N, ctx.N);
  srcI.exact[-1] = RatMat::identity(ctx.N);
  push_case(ctx, "det-weighted-schur",
            schur_det_expectation(cyc, ensG, srcI, {Partition{1}}, {1}).value, ensG, srcI,
            obs_det_schur_product(cyc, {Partition{1}}, {1}));

  auto src2 = SourceAssignment::deterministic(2, ctx.N, 37);
  auto ensGG = EnsembleSpec::parse("G,G", ctx.N, hb);
  auto oneface = DessinModel::from_faces({{1, 2, -1, -2}});
  push_case(ctx, "two-edge-schur-2",
            schur_expectation(oneface, ensGG, src2, {Partition{2}}).value, ensGG, src2,
            obs_schur_product(oneface, {Partition{2}}));
  auto ensGU = EnsembleSpec::parse("G,U", ctx.N, hb);
  push_case(ctx, "two-edge-schur-11-mixed-ensemble",
            schur_expectation(oneface, ensGU, src2, {Partition{1, 1}}).value, ensGU, src2,
            obs_schur_product(oneface, {Partition{1, 1}}));

  auto chain = DessinModel::from_faces({{-1, -2}, {1}, {2}});
  push_case(ctx, "mixed-basis-cycle",
            mixed_expectation(chain, ensGG, src2, {Partition{2}}, {Partition{2}, Partition{2}}).value,
            ensGG, src2, obs_mixed_product(chain, {Partition{2}}, {Partition{2}, Partition{2}}));
  push_case(
      ctx, "mixed-basis-square",
      mixed_expectation(chain, ensGG, src2, {Partition{1, 1}}, {Partition{1, 1}, Partition{1, 1}})
          .value,
      ensGG, src2,
      obs_mixed_product(chain, {Partition{1, 1}}, {Partition{1, 1}, Partition{1, 1}}));

  // anchor the control on the lowest-variance case so the shift is detectable
  Cplx truth = schur_det_expectation(cyc, ensG, srcI, {Partition{1}}, {1}).value;
  push_case(ctx, "negative-control", truth * 2.0, ensG, srcI,
            obs_det_schur_product(cyc, {Partition{1}}, {1}), true);
}

void suite_prop4(Ctx& ctx) {
  Rat hb(1, ctx.N);
  auto ensG = EnsembleSpec::parse("G", ctx.N, hb);
  auto split = DessinModel::from_faces({{1}, {-1}});
  auto src = SourceAssignment::deterministic(1, ctx.N, 41);

  std::vector<std::pair<Partition, Partition>> pairs = {
      {Partition{1}, Partition{1}},
      {Partition{2}, Partition{2}},
      {Partition{2}, Partition{1, 1}},
      {Partition{1, 1}, Partition{1, 1}},
      {Partition{3}, Partition{3}},
      {Partition{3}, Partition{2, 1}},
      {Partition{3}, Partition{1, 1, 1}},
      {Partition{2, 1}, Partition{2, 1}},
      {Partition{2, 1}, Partition{1, 1, 1}},
      {Partition{1, 1, 1}, Partition{1, 1, 1}},
  };
  for (const auto& [da, db] : pairs)
    push_case(ctx, "power-pair-" + da.str() + "-" + db.str(),
              power_expectation(split, ensG, src, {da, db}).value, ensG, src,
              obs_power_product(split, {da, db}));
  // unequal weights force an exact zero
  push_case(ctx, "power-pair-weight-mismatch",
            power_expectation(split, ensG, src, {Partition{2}, Partition{1}}).value, ensG, src,
            obs_power_product(split, {Partition{2}, Partition{1}}));

  // anchor the control on the lowest-variance case so the shift is detectable
  Cplx truth = power_expectation(split, ensG, src, {Partition{1}, Partition{1}}).value;
  push_case(ctx, "negative-control", truth * 4.0, ensG, src,
            obs_power_product(split, {Partition{1}, Partition{1}}), true);
}

void suite_hciz(Ctx& ctx) {
  // spectra are kept modest so the truncated series is converged far below MC noise
  auto mk_diag = [](std::vector<double> v) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero((int)v.size(), (int)v.size());
    for (int i = 0; i < (int)v.size(); ++i) M(i, i) = v[(size_t)i];
    return M;
  };
  {
    int N = 2;
    Eigen::MatrixXcd A = mk_diag({1.0, 2.0}), B = mk_diag({3.0, 5.0});
    Cplx alpha(0.1, 0.0);
    Cplx closed = hciz(alpha, A, B, 24).series;
    auto ens = EnsembleSpec::parse("U", N, {});
    SourceAssignment src;
    src.mats[1] = A;
    src.mats[-1] = B;
    push_case(ctx, "coupled-exponential-N2", closed, ens, src, [alpha](const Draw& d) {
      return std::exp(alpha * d.monodromy({1, -1}).trace());
    });
  }
  {
    int N = ctx.N;
    std::vector<double> av, bv;
    for (int i = 0; i < N; ++i) {
      av.push_back(0.3 + 0.4 * i);
      bv.push_back(0.2 + 0.3 * i);
    }
    Eigen::MatrixXcd A = mk_diag(av), B = mk_diag(bv);
    Cplx alpha(0.3, 0.0);
    Cplx closed = hciz(alpha, A, B, 26).series;
    auto ens = EnsembleSpec::parse("U", N, {});
    SourceAssignment src;
    src.mats[1] = A;
    src.mats[-1] = B;
    push_case(ctx, "coupled-exponential-NN", closed, ens, src, [alpha](const Draw& d) {
      return std::exp(alpha * d.monodromy({1, -1}).trace());
    });
    push_case(ctx, "negative-control", closed * 1.1, ens, src, [alpha](const Draw& d) {
      return std::exp(alpha * d.monodromy({1, -1}).trace());
    }, true);
  }
}

void suite_morozov(Ctx& ctx) {
  auto coupling_obs = [](std::vector<double> p, std::vector<double> pb) {
    return [p, pb](const Draw& d) {
      const Eigen::MatrixXcd& U = d.edge[1];
      Eigen::MatrixXcd Uk = U;
      Cplx s(0.0, 0.0);
      for (size_t m = 0; m < p.size() || m < pb.size(); ++m) {
        if (m) Uk = Uk * U;
        Cplx tU = Uk.trace();
        if (m < p.size()) s += p[m] * tU / (double)(m + 1);
        if (m < pb.size()) s += pb[m] * std::conj(tU) / (double)(m + 1);
      }
      return std::exp(s);
    };
  };
  auto mk_point = [](const std::vector<double>& v) {
    std::vector<Cplx> c;
    for (double x : v) c.push_back(Cplx(x, 0.0));
    return PowerSumPoint::from_values(c);
  };
  {
    // single phase: the integral is a Bessel-type series
    std::vector<double> p = {0.6}, pb = {0.6};
    Cplx closed = morozov_series(mk_point(p), mk_point(pb), 1, 30);
    auto ens = EnsembleSpec::parse("U", 1, {});
    SourceAssignment src;
    src.mats[1] = Eigen::MatrixXcd::Identity(1, 1);
    src.mats[-1] = Eigen::MatrixXcd::Identity(1, 1);
    push_case(ctx, "phase-integral", closed, ens, src, coupling_obs(p, pb));
  }
  {
    std::vector<double> p = {0.4, 0.3}, pb = {0.5};
    Cplx closed = morozov_series(mk_point(p), mk_point(pb), ctx.N, 20);
    auto ens = EnsembleSpec::parse("U", ctx.N, {});
    SourceAssignment src;
    src.mats[1] = Eigen::MatrixXcd::Identity(ctx.N, ctx.N);
    src.mats[-1] = Eigen::MatrixXcd::Identity(ctx.N, ctx.N);
    push_case(ctx, "coupled-series-NN", closed, ens, src, coupling_obs(p, pb));
    push_case(ctx, "negative-control", closed + Cplx(0.5, 0.0), ens, src, coupling_obs(p, pb),
              true);
  }
}

}  // namespace

std::vector<std::string> verify_suites() {
  return {"lemmas", "prop1", "prop2", "prop4", "hciz", "morozov"};
}

VerifyReport run_verify(const std::string& suite, int N, long samples, std::uint64_t seed,
                        int workers) {
  if (N < 1) throw error(errc::argument, "matrix size must be positive");
  VerifyReport rep;
  rep.suite = suite;
  rep.N = N;
  rep.samples = samples;
  rep.seed = seed;
  Ctx ctx{N, samples, seed, workers, &rep};

  bool known = false;
  auto want = [&](const char* s) {
    bool w = (suite == s || suite == "all");
    known = known || suite == s;
    return w;
  };
  if (want("lemmas")) suite_lemmas(ctx);
  if (want("prop1")) suite_prop1(ctx);
  if (want("prop2")) suite_prop2(ctx);
  if (want("prop4")) suite_prop4(ctx);
  if (want("hciz")) suite_hciz(ctx);
  if (want("morozov")) suite_morozov(ctx);
  if (!known && suite != "all")
    throw error(errc::argument, "unknown suite '" + suite + "' (try one of lemmas, prop1, prop2, prop4, hciz, morozov, all)");
  return rep;
}

}  // namespace dmm

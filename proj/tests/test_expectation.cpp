#include "doctest.h"

#include <vector>

#include "characters.hpp"
#include "expectation.hpp"

using namespace dmm;

namespace {

// evaluate a Schur polynomial at the exact power sums of a rational matrix
Rat schur_of(const Partition& la, const RatMat& M) {
  std::vector<Rat> tr(la.weight() + 1, Rat(0));
  RatMat P = RatMat::identity((int)M.rows());
  for (int k = 1; k <= la.weight(); ++k) {
    P = P * M;
    tr[k] = P.trace();
  }
  Rat out(0);
  for (auto& [delta, c] : schur_in_powersum(la)) {
    Rat t = c;
    for (int i = 0; i < delta.length(); ++i) t *= tr[delta.part(i)];
    out += t;
  }
  return out;
}

}  // namespace

TEST_CASE("ensemble parsing") {
  auto g = EnsembleSpec::parse("G", 3);
  CHECK(g.hbar == Rat(1, 3));  // default scale is 1/N
  CHECK(g.n1() == 1);
  auto gu = EnsembleSpec::parse("g,U", 2, Rat(1, 7));
  CHECK(gu.n() == 2);
  CHECK(gu.n1() == 1);
  CHECK(gu.n2() == 1);
  CHECK(gu.hbar == Rat(1, 7));
  CHECK(gu.describe() == "G,U");
  CHECK_THROWS_AS(EnsembleSpec::parse("X", 2), error);
  CHECK_THROWS_AS(EnsembleSpec::parse("G", 0), error);
  CHECK_THROWS_AS(EnsembleSpec::parse("G,,G", 2), error);
}

TEST_CASE("deterministic sources are exact and well formed") {
  auto src = SourceAssignment::deterministic(2, 3, 5);
  CHECK(src.all_exact(2));
  src.validate(2, 3);
  CHECK_THROWS_AS(src.validate(3, 3), error);
  CHECK_THROWS_AS(src.validate(2, 4), error);
  for (int k : {1, -1, 2, -2}) {
    auto& E = src.exact.at(k);
    auto& M = src.mats.at(k);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(M(i, j) == Cplx(to_double(E(i, j)), 0.0));
  }
  // two styles differ
  auto other = SourceAssignment::deterministic(2, 3, 6);
  bool differ = false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (src.exact.at(1)(i, j) != other.exact.at(1)(i, j)) differ = true;
  CHECK(differ);
}

TEST_CASE("one-edge trace identities") {
  auto m = DessinModel::from_faces({{1, -1}});
  int N = 3;
  auto ens = EnsembleSpec::parse("G", N, Rat(1, 7));
  auto src = SourceAssignment::deterministic(1, N, 5);
  RatMat A = src.exact.at(1), B = src.exact.at(-1);

  auto t = trace_product_expectation(m, ens, src, Side::faces);
  CHECK(t.exact);
  CHECK(t.exact_value == Rat(1, 7) * A.trace() * B.trace());

  auto ensU = EnsembleSpec::parse("U", N);
  auto tU = trace_product_expectation(m, ensU, src, Side::faces);
  CHECK(tU.exact_value == A.trace() * B.trace() / N);
}

TEST_CASE("degree-two moments of a dressed Gaussian word") {
  auto m = DessinModel::from_faces({{1, -1}});
  int N = 3;
  auto ens = EnsembleSpec::parse("G", N, Rat(1, 7));
  auto src = SourceAssignment::deterministic(1, N, 5);
  RatMat A = src.exact.at(1), B = src.exact.at(-1);
  Rat trA = A.trace(), trB = B.trace();
  Rat trA2 = (A * A).trace(), trB2 = (B * B).trace();
  Rat h2 = Rat(1, 49);

  auto p11 = power_expectation(m, ens, src, {Partition{1, 1}}, Side::faces);
  CHECK(p11.exact);
  CHECK(p11.exact_value == h2 * (trA2 * trB2 + trA * trA * trB * trB));

  auto p2 = power_expectation(m, ens, src, {Partition{2}}, Side::faces);
  CHECK(p2.exact);
  CHECK(p2.exact_value == h2 * (trA2 * trB * trB + trA * trA * trB2));
}

TEST_CASE("degree-two moments at identity sources") {
  // with A = B = I_2 and unit scale the two second moments are 16 and 20
  auto m = DessinModel::from_faces({{1, -1}});
  auto ens = EnsembleSpec::parse("G", 2, Rat(1));
  SourceAssignment src;
  src.exact[1] = RatMat::identity(2);
  src.exact[-1] = RatMat::identity(2);
  src.mats[1] = Eigen::MatrixXcd::Identity(2, 2);
  src.mats[-1] = Eigen::MatrixXcd::Identity(2, 2);
  CHECK(power_expectation(m, ens, src, {Partition{2}}, Side::faces).exact_value == Rat(16));
  CHECK(power_expectation(m, ens, src, {Partition{1, 1}}, Side::faces).exact_value == Rat(20));
}

TEST_CASE("character map ties powers to Schur observables") {
  auto m = DessinModel::from_faces({{1, -1}});
  auto ens = EnsembleSpec::parse("G", 3, Rat(1, 7));
  auto src = SourceAssignment::deterministic(1, 3, 5);
  for (auto D : {Partition{2}, Partition{1, 1}}) {
    Rat acc(0);
    for (auto& la : enumerate_partitions(2)) {
      auto s = schur_expectation(m, ens, src, {la}, Side::faces);
      acc += s.exact_value * Rat(character(la, D));
    }
    CHECK(acc == power_expectation(m, ens, src, {D}, Side::faces).exact_value);
  }
}

TEST_CASE("one-edge Schur closed form") {
  auto m = DessinModel::from_faces({{1, -1}});
  int N = 3;
  auto ens = EnsembleSpec::parse("G", N, Rat(1, 7));
  auto src = SourceAssignment::deterministic(1, N, 5);
  Partition la{2, 1};
  auto s = schur_expectation(m, ens, src, {la}, Side::faces);
  Rat want = rat_pow(Rat(1, 7), 3) * schur_of(la, src.exact.at(1)) *
             schur_of(la, src.exact.at(-1)) / dim_over_dfact(la);
  CHECK(s.exact);
  CHECK(s.exact_value == want);
}

TEST_CASE("paired Schur observables and mismatch vanishing") {
  auto m2 = DessinModel::from_faces({{1}, {-1}});
  auto ens = EnsembleSpec::parse("G", 3, Rat(1, 7));
  auto src = SourceAssignment::deterministic(1, 3, 5);

  auto bad = schur_expectation(m2, ens, src, {Partition{2}, Partition{1, 1}}, Side::faces);
  CHECK(bad.zero_by_mismatch);
  CHECK(bad.exact);
  CHECK(bad.exact_value == Rat(0));

  auto badp = power_expectation(m2, ens, src, {Partition{1}, Partition{2}}, Side::faces);
  CHECK(badp.exact_value == Rat(0));
  CHECK(badp.zero_by_mismatch);

  // equal labels survive: value is h^d s_la(AB) / (dim/d!)
  Partition la{2};
  auto s = schur_expectation(m2, ens, src, {la, la}, Side::faces);
  Rat want = rat_pow(Rat(1, 7), 2) * schur_of(la, src.exact.at(1) * src.exact.at(-1)) /
             dim_over_dfact(la);
  CHECK(s.exact_value == want);
}

TEST_CASE("mixed observables against their expansions") {
  auto m2 = DessinModel::from_faces({{1}, {-1}});
  auto ens = EnsembleSpec::parse("G", 3, Rat(1, 7));
  auto src = SourceAssignment::deterministic(1, 3, 5);
  Partition mu{2};
  auto mx = mixed_expectation(m2, ens, src, {Partition{1, 1}}, {mu}, Side::faces);
  RatMat AB = src.exact.at(1) * src.exact.at(-1);
  Rat want = Rat(character(mu, Partition{1, 1})) * rat_pow(Rat(1, 7), 2) *
             rat_pow(dim_over_dfact(mu), -1) * schur_of(mu, AB);
  CHECK(mx.exact);
  CHECK(mx.exact_value == want);

  auto pw = power_expectation(m2, ens, src, {Partition{2}, Partition{2}}, Side::faces);
  Rat acc(0);
  for (auto& la : enumerate_partitions(2)) {
    auto s = schur_expectation(m2, ens, src, {la, la}, Side::faces);
    acc += s.exact_value * Rat(character(la, Partition{2})) * Rat(character(la, Partition{2}));
  }
  CHECK(acc == pw.exact_value);
}

TEST_CASE("determinant insertions shift the partition") {
  auto m = DessinModel::from_faces({{1, -1}});
  int N = 3;
  Rat hb(1, 7);
  auto ens = EnsembleSpec::parse("G", N, hb);
  auto src = SourceAssignment::deterministic(1, N, 5);
  Partition la{1};
  auto sd = schur_det_expectation(m, ens, src, {la}, {1}, Side::faces);
  auto s = schur_expectation(m, ens, src, {la.shifted(1, N)}, Side::faces);
  CHECK(sd.exact);
  CHECK(sd.exact_value == s.exact_value);

  // with the reversed-letter source set to the identity the value collapses to
  // hook-content factor 8, dimension factor s_mu(I_3) = 3, and tr A
  SourceAssignment srcI;
  srcI.exact[1] = src.exact.at(1);
  srcI.exact[-1] = RatMat::identity(N);
  srcI.mats[1] = src.mats.at(1);
  srcI.mats[-1] = Eigen::MatrixXcd::Identity(N, N);
  RatMat A = srcI.exact.at(1);
  auto pin = schur_det_expectation(m, ens, srcI, {la}, {1}, Side::faces);
  CHECK(pin.exact_value == Rat(24) * rat_pow(hb, 4) * A.det() * A.trace());
}

TEST_CASE("series of the full expansion matches a direct label sum") {
  auto m = DessinModel::from_faces({{1, -1}});
  int N = 3;
  auto ens = EnsembleSpec::parse("G", N, Rat(1, 7));
  auto src = SourceAssignment::deterministic(1, N, 5);
  auto th = theorem_series(m, ens, src, {RFunction::one()}, {PowerSumPoint::infty()}, 2,
                           Side::faces);
  CHECK(th.exact);
  Rat acc(0);
  for (int d = 0; d <= 2; ++d)
    for (auto& la : enumerate_partitions(d))
      if (la.length() <= N)
        acc += rat_pow(Rat(1, 7), d) * schur_of(la, src.exact.at(1)) *
               schur_of(la, src.exact.at(-1));
  CHECK(th.exact_value == acc);
  CHECK(th.series.size() >= 3);
}

TEST_CASE("face and vertex readings swap under duality") {
  auto ens2 = EnsembleSpec::parse("G,G", 3, Rat(1, 5));
  auto src2 = SourceAssignment::deterministic(2, 3, 7);
  for (auto& m : all_models(2)) {
    auto d = m.dual();
    auto a = trace_product_expectation(m, ens2, src2, Side::faces);
    auto b = trace_product_expectation(d, ens2, src2, Side::vertices);
    CHECK(a.exact_value == b.exact_value);
    std::vector<Partition> ones(m.num_faces(), Partition{1});
    auto sa = schur_expectation(m, ens2, src2, ones, Side::faces);
    auto sb = schur_expectation(d, ens2, src2, ones, Side::vertices);
    CHECK(sa.exact_value == sb.exact_value);
  }
}

TEST_CASE("closed forms depend only on the joint spectra") {
  // conjugating every source by one invertible matrix conjugates every
  // monodromy word, so the traced closed forms cannot move
  auto m = DessinModel::from_faces(parse_words("(-1,-2)(1)(2)"));
  auto ens = EnsembleSpec::parse("G,G", 3, Rat(1, 3));
  auto base = SourceAssignment::deterministic(2, 3, 5);
  Eigen::MatrixXcd P(3, 3);
  P << 1.0, 0.3, -0.2, 0.1, 1.4, 0.05, -0.3, 0.2, 0.9;
  Eigen::MatrixXcd Pi = P.inverse();
  SourceAssignment conj;
  for (auto& [k, M] : base.mats) conj.mats[k] = Pi * M * P;
  auto a = trace_product_expectation(m, ens, base, Side::faces);
  auto b = trace_product_expectation(m, ens, conj, Side::faces);
  CHECK_FALSE(b.exact);
  CHECK(std::abs(a.value - b.value) <= 1e-9 * (1.0 + std::abs(a.value)));
}

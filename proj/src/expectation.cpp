#include "expectation.hpp"

#include <algorithm>

#include "characters.hpp"
#include "hurwitz.hpp"

namespace dmm {

namespace {

struct SideWords {
  const std::vector<std::vector<int>>* lhs;
  const std::vector<std::vector<int>>* rhs;
};

SideWords bind_side(const DessinModel& model, Side side) {
  if (side == Side::faces) return {&model.faces(), &model.vertices()};
  return {&model.vertices(), &model.faces()};
}

// traces of powers 1..dmax, exact
std::vector<Rat> trace_powers(const RatMat& m, int dmax) {
  std::vector<Rat> tr(dmax + 1, Rat(0));
  RatMat p = RatMat::identity(m.rows());
  for (int k = 1; k <= dmax; ++k) {
    p = p * m;
    tr[k] = p.trace();
  }
  return tr;
}

Rat power_sum_from_traces(const Partition& delta, const std::vector<Rat>& tr) {
  Rat out(1);
  for (size_t i = 0; i < delta.length(); ++i) out *= tr[delta.part(i)];
  return out;
}

// s_la(M) through the character expansion over power sums
Rat schur_from_traces(const Partition& la, const std::vector<Rat>& tr) {
  int d = la.weight();
  if (d == 0) return Rat(1);
  Rat out(0);
  for (const auto& delta : enumerate_partitions(d)) {
    Int chi = character(la, delta);
    if (chi == 0) continue;
    out += Rat(chi) / z_of(delta) * power_sum_from_traces(delta, tr);
  }
  return out;
}

struct WordData {
  bool exact = false;
  RatMat exact_mat;
  std::vector<Rat> exact_tr;
  Eigen::MatrixXcd mat;
};

std::vector<WordData> rhs_monodromies(const std::vector<std::vector<int>>& words,
                                      const SourceAssignment& sources, int N, int dmax) {
  std::vector<WordData> out(words.size());
  for (size_t j = 0; j < words.size(); ++j) {
    out[j].mat = sources.word_product(words[j], N);
    out[j].exact = sources.word_product_exact(words[j], N, out[j].exact_mat);
    if (out[j].exact) out[j].exact_tr = trace_powers(out[j].exact_mat, dmax);
  }
  return out;
}

bool all_exact(const std::vector<WordData>& w) {
  for (const auto& x : w)
    if (!x.exact) return false;
  return true;
}

void finish_exact(ClosedFormResult& r, const Rat& v) {
  r.exact = true;
  r.exact_value = v;
  r.value = Cplx(to_double(v), 0.0);
}

void exact_zero(ClosedFormResult& r, const std::string& why, bool mismatch) {
  finish_exact(r, Rat(0));
  r.zero_by_mismatch = mismatch;
  r.notes.push_back(why);
}

void push_single_term(ClosedFormResult& r, std::vector<Partition> labels) {
  SeriesTerm t;
  t.labels = std::move(labels);
  t.coeff = r.value;
  t.exact = r.exact;
  if (r.exact) t.exact_coeff = r.exact_value;
  r.series.push_back(std::move(t));
}

// hbar^{n1 d} (s_la(p_inf))^{-n1} (s_la(I_N))^{-n2} prod_j s_la(W*_j), exact branch
Rat schur_value_exact(const Partition& la, const EnsembleSpec& ens,
                      const std::vector<WordData>& rhs) {
  int d = la.weight();
  Rat dimf = dim_over_dfact(la);
  Rat v = rat_pow(ens.hbar, (long)ens.n1() * d);
  v *= rat_pow(dimf, -ens.n1());
  if (ens.n2() > 0) v *= rat_pow(pochhammer_lambda(Rat(ens.N), la) * dimf, -ens.n2());
  for (const auto& w : rhs) v *= schur_from_traces(la, w.exact_tr);
  return v;
}

Cplx schur_value_numeric(const Partition& la, const EnsembleSpec& ens,
                         const std::vector<WordData>& rhs) {
  int d = la.weight();
  Rat dimf = dim_over_dfact(la);
  Rat pre = rat_pow(ens.hbar, (long)ens.n1() * d) * rat_pow(dimf, -ens.n1());
  if (ens.n2() > 0) pre *= rat_pow(pochhammer_lambda(Rat(ens.N), la) * dimf, -ens.n2());
  Cplx v(to_double(pre), 0.0);
  for (const auto& w : rhs) v *= schur_eval_matrix(la, w.mat);
  return v;
}

ClosedFormResult schur_common(const DessinModel& model, const EnsembleSpec& ens,
                              const SourceAssignment& sources, const Partition& la, Side side,
                              const char* formula) {
  ClosedFormResult r;
  r.formula = formula;
  r.side = side_name(side);
  auto words = bind_side(model, side);
  auto rhs = rhs_monodromies(*words.rhs, sources, ens.N, la.weight());
  if (all_exact(rhs)) {
    finish_exact(r, schur_value_exact(la, ens, rhs));
  } else {
    r.value = schur_value_numeric(la, ens, rhs);
  }
  push_single_term(r, {la});
  return r;
}

}  // namespace

ClosedFormResult trace_product_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                           const SourceAssignment& sources, Side side) {
  if (model.edges() != ens.n())
    throw error(errc::argument, "ensemble lists " + std::to_string(ens.n()) + " edges, model has " +
                                    std::to_string(model.edges()));
  sources.validate(model.edges(), ens.N);
  ClosedFormResult r;
  r.formula = "trace";
  r.side = side_name(side);
  auto words = bind_side(model, side);
  auto rhs = rhs_monodromies(*words.rhs, sources, ens.N, 1);
  Rat pre = rat_pow(ens.hbar, ens.n1()) * rat_pow(Rat(ens.N), -ens.n2());
  if (all_exact(rhs)) {
    Rat v = pre;
    for (const auto& w : rhs) v *= w.exact_tr[1];
    finish_exact(r, v);
  } else {
    Cplx v(to_double(pre), 0.0);
    for (const auto& w : rhs) v *= w.mat.trace();
    r.value = v;
  }
  push_single_term(r, {});
  return r;
}

ClosedFormResult schur_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                   const SourceAssignment& sources,
                                   const std::vector<Partition>& lambdas, Side side) {
  if (model.edges() != ens.n())
    throw error(errc::argument, "ensemble lists " + std::to_string(ens.n()) + " edges, model has " +
                                    std::to_string(model.edges()));
  sources.validate(model.edges(), ens.N);
  auto words = bind_side(model, side);
  if (lambdas.size() != words.lhs->size())
    throw error(errc::argument, "need one partition per observable word: got " +
                                    std::to_string(lambdas.size()) + " for " +
                                    std::to_string(words.lhs->size()) + " words");
  ClosedFormResult r;
  r.formula = "schur";
  r.side = side_name(side);
  for (size_t i = 1; i < lambdas.size(); ++i)
    if (!(lambdas[i] == lambdas[0])) {
      exact_zero(r, "partitions differ across words (" + lambdas[0].str() + " vs " +
                        lambdas[i].str() + "), so the expectation vanishes",
                 true);
      return r;
    }
  const Partition& la = lambdas[0];
  if ((int)la.length() > ens.N) {
    exact_zero(r, "partition " + la.str() + " has more than N=" + std::to_string(ens.N) +
                      " rows, so every Schur factor vanishes",
               false);
    return r;
  }
  return schur_common(model, ens, sources, la, side, "schur");
}

ClosedFormResult schur_det_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                       const SourceAssignment& sources,
                                       const std::vector<Partition>& lambdas,
                                       const std::vector<int>& alphas, Side side) {
  if (model.edges() != ens.n())
    throw error(errc::argument, "ensemble lists " + std::to_string(ens.n()) + " edges, model has " +
                                    std::to_string(model.edges()));
  sources.validate(model.edges(), ens.N);
  auto words = bind_side(model, side);
  if (lambdas.size() != words.lhs->size() || alphas.size() != words.lhs->size())
    throw error(errc::argument, "need one partition and one determinant power per observable word");
  for (int a : alphas)
    if (a < 0) throw error(errc::argument, "determinant powers must be nonnegative");
  ClosedFormResult r;
  r.formula = "schur-det";
  r.side = side_name(side);
  int N = ens.N;
  for (const auto& la : lambdas)
    if ((int)la.length() > N) {
      exact_zero(r, "partition " + la.str() + " has more than N=" + std::to_string(N) +
                        " rows, so every Schur factor vanishes",
                 false);
      return r;
    }
  int amax = *std::max_element(alphas.begin(), alphas.end());
  for (size_t i = 1; i < lambdas.size(); ++i)
    for (int k = 0; k < N; ++k) {
      long a = (long)lambdas[0].part(k) + alphas[0];
      long b = (long)lambdas[i].part(k) + alphas[i];
      if (a != b) {
        exact_zero(r,
                   "shifted partitions differ across words (row " + std::to_string(k + 1) + ": " +
                       std::to_string(a) + " vs " + std::to_string(b) +
                       "), so the expectation vanishes",
                   true);
        return r;
      }
    }
  size_t im = (size_t)(std::max_element(alphas.begin(), alphas.end()) - alphas.begin());
  Partition mu = lambdas[im].shifted(amax, N);
  if (amax > 0) {
    // the identity moves determinant powers across the duality, so monodromies must be invertible
    auto rhs = rhs_monodromies(*words.rhs, sources, N, 1);
    for (size_t j = 0; j < rhs.size(); ++j) {
      bool singular = rhs[j].exact ? (rhs[j].exact_mat.det() == 0)
                                   : (std::abs(rhs[j].mat.determinant()) < 1e-12);
      if (singular)
        throw error(errc::domain, "monodromy " + std::to_string(j + 1) +
                                      " is singular; determinant powers need invertible words");
    }
  }
  auto res = schur_common(model, ens, sources, mu, side, "schur-det");
  res.notes.push_back("evaluated through the shifted partition " + mu.str());
  return res;
}

ClosedFormResult mixed_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                   const SourceAssignment& sources,
                                   const std::vector<Partition>& deltas,
                                   const std::vector<Partition>& mus, Side side) {
  if (model.edges() != ens.n())
    throw error(errc::argument, "ensemble lists " + std::to_string(ens.n()) + " edges, model has " +
                                    std::to_string(model.edges()));
  sources.validate(model.edges(), ens.N);
  auto words = bind_side(model, side);
  size_t k = deltas.size();
  if (k < 1 || k >= words.lhs->size() || k + mus.size() != words.lhs->size())
    throw error(errc::argument,
                "need 1 <= (power-sum words) < (all words), with Schur partitions for the rest");
  ClosedFormResult r;
  r.formula = "mixed";
  r.side = side_name(side);
  for (size_t i = 1; i < mus.size(); ++i)
    if (!(mus[i] == mus[0])) {
      exact_zero(r, "Schur partitions differ across words (" + mus[0].str() + " vs " +
                        mus[i].str() + "), so the expectation vanishes",
                 true);
      return r;
    }
  const Partition& mu = mus[0];
  int d = mu.weight();
  for (const auto& dl : deltas)
    if (dl.weight() != d) {
      exact_zero(r, "power-sum profile " + dl.str() + " has weight " +
                        std::to_string(dl.weight()) + ", Schur side has weight " +
                        std::to_string(d) + ", so the expectation vanishes",
                 true);
      return r;
    }
  if ((int)mu.length() > ens.N) {
    exact_zero(r, "partition " + mu.str() + " has more than N=" + std::to_string(ens.N) +
                      " rows, so every Schur factor vanishes",
               false);
    return r;
  }
  auto rhs = rhs_monodromies(*words.rhs, sources, ens.N, d);
  Rat dimf = dim_over_dfact(mu);
  Rat pre = rat_pow(ens.hbar, (long)ens.n1() * d) * rat_pow(dimf, -(ens.n1() + ens.n2()));
  if (ens.n2() > 0) pre *= rat_pow(pochhammer_lambda(Rat(ens.N), mu), -ens.n2());
  for (const auto& dl : deltas) pre *= Rat(character(mu, dl));
  if (all_exact(rhs)) {
    Rat v = pre;
    for (const auto& w : rhs) v *= schur_from_traces(mu, w.exact_tr);
    finish_exact(r, v);
  } else {
    Cplx v(to_double(pre), 0.0);
    for (const auto& w : rhs) v *= schur_eval_matrix(mu, w.mat);
    r.value = v;
  }
  push_single_term(r, {mu});
  return r;
}

ClosedFormResult power_expectation(const DessinModel& model, const EnsembleSpec& ens,
                                   const SourceAssignment& sources,
                                   const std::vector<Partition>& deltas, Side side) {
  if (model.edges() != ens.n())
    throw error(errc::argument, "ensemble lists " + std::to_string(ens.n()) + " edges, model has " +
                                    std::to_string(model.edges()));
  sources.validate(model.edges(), ens.N);
  auto words = bind_side(model, side);
  if (deltas.size() != words.lhs->size())
    throw error(errc::argument, "need one power-sum profile per observable word: got " +
                                    std::to_string(deltas.size()) + " for " +
                                    std::to_string(words.lhs->size()) + " words");
  ClosedFormResult r;
  r.formula = "power";
  r.side = side_name(side);
  int d = deltas[0].weight();
  for (size_t i = 1; i < deltas.size(); ++i)
    if (deltas[i].weight() != d) {
      exact_zero(r, "profile weights differ across words (" + std::to_string(d) + " vs " +
                        std::to_string(deltas[i].weight()) + "), so the expectation vanishes",
                 true);
      return r;
    }
  if (d == 0) {
    finish_exact(r, Rat(1));
    push_single_term(r, {});
    return r;
  }
  if (ens.n2() > 0 && d > ens.N)
    throw error(errc::domain, "unitary weights ((N)_lambda)^{-1} hit a vanishing Pochhammer when the profile weight " +
                                  std::to_string(d) + " exceeds N=" + std::to_string(ens.N));
  int euler = model.euler();
  auto tuples_of = enumerate_partitions(d);
  size_t V = words.rhs->size();
  double space = 1.0;
  for (size_t j = 0; j < V; ++j) space *= (double)tuples_of.size();
  if (space > 1e6)
    throw error(errc::scale, "profile-tuple sum has about " + std::to_string((long long)space) +
                                 " terms; refusing above 1e6");
  auto rhs = rhs_monodromies(*words.rhs, sources, ens.N, d);
  bool exact = all_exact(rhs);

  // per-vertex table of p_profile(W*_j)
  std::vector<std::vector<Rat>> pex(V);
  std::vector<std::vector<Cplx>> pnum(V);
  for (size_t j = 0; j < V; ++j) {
    for (const auto& dt : tuples_of) {
      if (exact)
        pex[j].push_back(power_sum_from_traces(dt, rhs[j].exact_tr));
      else
        pnum[j].push_back(power_sum_eval(dt, rhs[j].mat));
    }
  }

  Rat zpre(1);
  for (const auto& dl : deltas) zpre *= z_of(dl);
  Rat pre = zpre * rat_pow(ens.hbar, (long)ens.n1() * d);

  std::vector<Partition> profiles(V + deltas.size(), Partition{});
  for (size_t i = 0; i < deltas.size(); ++i) profiles[V + i] = deltas[i];

  Rat vex(0);
  Cplx vnum(0.0, 0.0);
  std::vector<size_t> idx(V, 0);
  while (true) {
    for (size_t j = 0; j < V; ++j) profiles[j] = tuples_of[idx[j]];
    Rat h = ens.n2() > 0 ? hurwitz_weighted(euler, profiles, ens.n2(), Rat(ens.N), d)
                         : hurwitz(euler, profiles, d);
    if (h != 0) {
      SeriesTerm t;
      t.labels.assign(profiles.begin(), profiles.begin() + V);
      if (exact) {
        Rat term = pre * h;
        for (size_t j = 0; j < V; ++j) term *= pex[j][idx[j]];
        vex += term;
        t.exact = true;
        t.exact_coeff = term;
        t.coeff = Cplx(to_double(term), 0.0);
      } else {
        Cplx term(to_double(pre * h), 0.0);
        for (size_t j = 0; j < V; ++j) term *= pnum[j][idx[j]];
        vnum += term;
        t.coeff = term;
      }
      r.series.push_back(std::move(t));
    }
    size_t j = 0;
    while (j < V && ++idx[j] == tuples_of.size()) idx[j++] = 0;
    if (j == V) break;
  }
  if (exact)
    finish_exact(r, vex);
  else
    r.value = vnum;
  return r;
}

ClosedFormResult theorem_series(const DessinModel& model, const EnsembleSpec& ens,
                                const SourceAssignment& sources,
                                const std::vector<RFunction>& weights,
                                const std::vector<PowerSumPoint>& points, int d_max, Side side) {
  if (model.edges() != ens.n())
    throw error(errc::argument, "ensemble lists " + std::to_string(ens.n()) + " edges, model has " +
                                    std::to_string(model.edges()));
  sources.validate(model.edges(), ens.N);
  auto words = bind_side(model, side);
  if (weights.size() != words.lhs->size() || points.size() != words.lhs->size())
    throw error(errc::argument,
                "need one weight function and one power-sum point per observable word");
  if (d_max < 0) throw error(errc::argument, "series degree cap must be nonnegative");
  ClosedFormResult r;
  r.formula = "theorem";
  r.side = side_name(side);
  auto rhs = rhs_monodromies(*words.rhs, sources, ens.N, d_max);
  bool exact = all_exact(rhs);
  bool skipped_rows = false;

  Rat vex(0);
  Cplx vnum(0.0, 0.0);
  for (int d = 0; d <= d_max; ++d) {
    for (const auto& la : enumerate_partitions(d)) {
      if ((int)la.length() > ens.N) {
        skipped_rows = true;
        continue;
      }
      Rat rla(1);
      if (ens.n2() > 0) rla = rat_pow(pochhammer_lambda(Rat(ens.N), la), -ens.n2());
      for (const auto& w : weights)
        rla *= content_product([&](const Rat& x, Rat& out) { return w.eval(x, out); }, 0, la);
      Rat pre = rla * rat_pow(ens.hbar, (long)ens.n1() * d) *
                rat_pow(dim_over_dfact(la), -(ens.n1() + ens.n2()));
      SeriesTerm t;
      t.labels = {la};
      bool term_exact = exact;
      Rat tex = pre;
      Cplx tnum(to_double(pre), 0.0);
      if (term_exact) {
        for (const auto& w : rhs) tex *= schur_from_traces(la, w.exact_tr);
        for (const auto& pt : points) {
          Rat sv;
          if (schur_at_point_exact(la, pt, sv))
            tex *= sv;
          else {
            term_exact = false;
            break;
          }
        }
      }
      if (term_exact) {
        t.exact = true;
        t.exact_coeff = tex;
        t.coeff = Cplx(to_double(tex), 0.0);
      } else {
        for (const auto& w : rhs)
          tnum *= w.exact ? Cplx(to_double(schur_from_traces(la, w.exact_tr)), 0.0)
                          : schur_eval_matrix(la, w.mat);
        for (const auto& pt : points) tnum *= schur_at_point(la, pt);
        t.coeff = tnum;
      }
      if (exact && t.exact)
        vex += t.exact_coeff;
      else {
        exact = false;
        vnum += t.coeff;
      }
      r.series.push_back(std::move(t));
    }
  }
  if (exact)
    finish_exact(r, vex);
  else {
    // fold any exact prefix terms back into the numeric total
    Cplx v(0.0, 0.0);
    for (const auto& t : r.series) v += t.coeff;
    r.value = v;
  }
  if (skipped_rows)
    r.notes.push_back("partitions with more than N=" + std::to_string(ens.N) +
                      " rows are excluded from the series");
  return r;
}

}  // namespace dmm

#include "dessinmm.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "dessin.hpp"
#include "ensemble.hpp"
#include "expectation.hpp"
#include "hurwitz.hpp"
#include "jsonio.hpp"
#include "tau.hpp"
#include "verify.hpp"

using dmm::json;

struct dmm_model {
  dmm::DessinModel m;
};

namespace {

thread_local std::string tl_error;

dmm_status code_of(dmm::errc c) {
  switch (c) {
    case dmm::errc::argument: return DMM_ERR_ARGUMENT;
    case dmm::errc::domain: return DMM_ERR_DOMAIN;
    case dmm::errc::scale: return DMM_ERR_SCALE;
    case dmm::errc::numeric: return DMM_ERR_NUMERIC;
    case dmm::errc::parse: return DMM_ERR_PARSE;
    case dmm::errc::verify: return DMM_ERR_VERIFY;
  }
  return DMM_ERR_INTERNAL;
}

template <class F>
dmm_status guarded(F&& f) {
  try {
    f();
    tl_error.clear();
    return DMM_OK;
  } catch (const dmm::error& e) {
    tl_error = e.what();
    return code_of(e.code);
  } catch (const json::exception& e) {
    tl_error = e.what();
    return DMM_ERR_PARSE;
  } catch (const std::exception& e) {
    tl_error = e.what();
    return DMM_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw dmm::error(dmm::errc::argument, what);
}

char* dup_cstr(const std::string& s) {
  char* p = (char*)std::malloc(s.size() + 1);
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(const json& j, char** out) { *out = dup_cstr(j.dump(2)); }

json request_of(const char* text) {
  require(text != nullptr, "null request");
  json j = json::parse(text, nullptr, true, true);
  if (!j.is_object()) throw dmm::error(dmm::errc::parse, "request must be a JSON object");
  return j;
}

/* ---- field parsers ---------------------------------------------------- */

dmm::Rat rat_field(const json& j, const char* what) {
  if (j.is_string()) return dmm::parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return dmm::Rat(j.get<long>());
  if (j.is_number_float()) return dmm::parse_rat(dmm::fmt_double(j.get<double>()));
  throw dmm::error(dmm::errc::parse, std::string(what) + " must be a number or rational string");
}

dmm::Cplx cplx_field(const json& j, const char* what) {
  if (j.is_number()) return dmm::Cplx(j.get<double>(), 0.0);
  if (j.is_string()) return dmm::Cplx(dmm::to_double(dmm::parse_rat(j.get<std::string>())), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return dmm::Cplx(j[0].get<double>(), j[1].get<double>());
  throw dmm::error(dmm::errc::parse,
                   std::string(what) + " must be a number, [re,im] pair, or rational string");
}

std::vector<dmm::Cplx> spectrum_field(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw dmm::error(dmm::errc::parse, std::string(what) + " must be a nonempty array");
  std::vector<dmm::Cplx> out;
  for (const auto& e : j) out.push_back(cplx_field(e, what));
  return out;
}

Eigen::MatrixXcd diag_of(const std::vector<dmm::Cplx>& eigs) {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero((long)eigs.size(), (long)eigs.size());
  for (long i = 0; i < (long)eigs.size(); ++i) M(i, i) = eigs[(size_t)i];
  return M;
}

dmm::Partition partition_field(const json& j, const char* what) {
  std::vector<int> parts;
  if (j.is_string()) {
    // comma-joined parts; "0" or "" is the empty partition
    std::string tok;
    auto flush = [&] {
      if (!tok.empty()) parts.push_back(std::stoi(tok));
      tok.clear();
    };
    for (char c : j.get<std::string>()) {
      if (c == ',')
        flush();
      else if (!std::isspace((unsigned char)c))
        tok += c;
    }
    flush();
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_number_integer())
        throw dmm::error(dmm::errc::parse, std::string(what) + " parts must be integers");
      parts.push_back(e.get<int>());
    }
  } else {
    throw dmm::error(dmm::errc::parse,
                     std::string(what) + " must be an integer array or comma-joined string");
  }
  std::erase(parts, 0);
  for (int p : parts)
    if (p < 0) throw dmm::error(dmm::errc::parse, std::string(what) + " parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return dmm::Partition(parts);
}

std::vector<dmm::Partition> partitions_field(const json& j, const char* what) {
  if (!j.is_array()) throw dmm::error(dmm::errc::parse, std::string(what) + " must be an array");
  std::vector<dmm::Partition> out;
  for (const auto& e : j) out.push_back(partition_field(e, what));
  return out;
}

std::vector<std::vector<int>> faces_field(const json& jin) {
  json j = jin;
  if (j.is_object()) {
    if (!j.contains("faces")) throw dmm::error(dmm::errc::parse, "missing 'faces' key");
    j = j["faces"];
  }
  if (!j.is_array()) throw dmm::error(dmm::errc::parse, "faces must be an array of integer arrays");
  std::vector<std::vector<int>> faces;
  for (const auto& fj : j) {
    if (!fj.is_array())
      throw dmm::error(dmm::errc::parse, "faces must be an array of integer arrays");
    std::vector<int> w;
    for (const auto& e : fj) {
      if (!e.is_number_integer())
        throw dmm::error(dmm::errc::parse, "face letters must be integers");
      w.push_back(e.get<int>());
    }
    faces.push_back(std::move(w));
  }
  return faces;
}

// letter -> matrix; a matrix whose entries are all integers or rational
// strings additionally feeds the exact evaluation path
dmm::SourceAssignment sources_field(const json& j, int& N_out) {
  if (!j.is_object())
    throw dmm::error(dmm::errc::parse, "sources must be an object of letter -> matrix");
  dmm::SourceAssignment src;
  N_out = 0;
  for (const auto& [key, mj] : j.items()) {
    int letter = 0;
    try {
      size_t pos = 0;
      letter = std::stoi(key, &pos);
      if (pos != key.size()) letter = 0;
    } catch (const std::exception&) {
      letter = 0;
    }
    if (letter == 0)
      throw dmm::error(dmm::errc::parse, "source key '" + key + "' is not a nonzero letter");
    if (!mj.is_array() || mj.empty())
      throw dmm::error(dmm::errc::parse, "source matrix must be an array of rows");
    long n = (long)mj.size();
    if (N_out == 0) N_out = (int)n;
    Eigen::MatrixXcd M(n, n);
    dmm::RatMat R(n, n);
    bool exact = true;
    for (long r = 0; r < n; ++r) {
      const json& row = mj[(size_t)r];
      if (!row.is_array() || (long)row.size() != n)
        throw dmm::error(dmm::errc::parse, "source matrix must be square, row-major");
      for (long c = 0; c < n; ++c) {
        const json& cell = row[(size_t)c];
        if (cell.is_number_integer()) {
          R(r, c) = dmm::Rat(cell.get<long>());
          M(r, c) = dmm::Cplx((double)cell.get<long>(), 0.0);
        } else if (cell.is_string()) {
          R(r, c) = dmm::parse_rat(cell.get<std::string>());
          M(r, c) = dmm::Cplx(dmm::to_double(R(r, c)), 0.0);
        } else {
          exact = false;
          M(r, c) = cplx_field(cell, "source matrix entry");
        }
      }
    }
    src.mats[letter] = M;
    if (exact) src.exact[letter] = R;
  }
  return src;
}

dmm::PowerSumPoint point_field(const json& j, const char* what) {
  auto values_of = [&](const std::string& csv) {
    std::vector<dmm::Rat> vals;
    std::string tok;
    auto flush = [&] {
      if (!tok.empty()) vals.push_back(dmm::parse_rat(tok));
      tok.clear();
    };
    for (char c : csv) {
      if (c == ',')
        flush();
      else
        tok += c;
    }
    flush();
    return vals;
  };
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "infty" || s == "inf") return dmm::PowerSumPoint::infty();
    if (s.rfind("geom:", 0) == 0)
      return dmm::PowerSumPoint::geometric(dmm::parse_rat(s.substr(5)));
    if (s.rfind("qt:", 0) == 0) {
      auto vals = values_of(s.substr(3));
      if (vals.size() != 2)
        throw dmm::error(dmm::errc::parse, std::string(what) + " qt point needs q,t");
      return dmm::PowerSumPoint::qt_point(vals[0], vals[1]);
    }
    if (s.rfind("values:", 0) == 0) return dmm::PowerSumPoint::from_exact(values_of(s.substr(7)));
    throw dmm::error(dmm::errc::parse, std::string(what) +
                                           " must be infty, geom:a, qt:q,t, or values:v1,v2,...");
  }
  if (j.is_object()) {
    std::string kind = j.value("kind", std::string("infty"));
    if (kind == "infty") return dmm::PowerSumPoint::infty();
    if (kind == "geometric" || kind == "geom")
      return dmm::PowerSumPoint::geometric(rat_field(j.at("a"), "point parameter a"));
    if (kind == "qt")
      return dmm::PowerSumPoint::qt_point(rat_field(j.at("q"), "q"), rat_field(j.at("t"), "t"));
    if (kind == "values") {
      const json& vj = j.at("values");
      if (!vj.is_array())
        throw dmm::error(dmm::errc::parse, std::string(what) + " values must be an array");
      bool exact = true;
      for (const auto& e : vj)
        if (!(e.is_number_integer() || e.is_string())) exact = false;
      if (exact) {
        std::vector<dmm::Rat> vals;
        for (const auto& e : vj) vals.push_back(rat_field(e, what));
        return dmm::PowerSumPoint::from_exact(vals);
      }
      std::vector<dmm::Cplx> vals;
      for (const auto& e : vj) vals.push_back(cplx_field(e, what));
      return dmm::PowerSumPoint::from_values(vals);
    }
    throw dmm::error(dmm::errc::parse, std::string(what) + " has unknown kind '" + kind + "'");
  }
  throw dmm::error(dmm::errc::parse, std::string(what) + " must be a string or object");
}

/* ---- response builders ------------------------------------------------ */

json cplx_out(const dmm::Cplx& z) {
  return json{{"re", dmm::fmt_double(z.real())}, {"im", dmm::fmt_double(z.imag())}};
}

json value_out(const dmm::Cplx& z, bool exact, const dmm::Rat& exact_value) {
  if (exact) return json{{"re", dmm::rat_str(exact_value)}, {"im", "0"}};
  return cplx_out(z);
}

json closed_form_out(const dmm::ClosedFormResult& res) {
  json out;
  out["value"] = value_out(res.value, res.exact, res.exact_value);
  out["exact"] = res.exact;
  out["zero_by_mismatch"] = res.zero_by_mismatch;
  json series = json::array();
  for (const auto& t : res.series) {
    json labels = json::array();
    for (const auto& la : t.labels) labels.push_back(dmm::partition_json(la));
    json term{{"labels", labels}};
    if (t.exact)
      term["coeff"] = json{{"re", dmm::rat_str(t.exact_coeff)}, {"im", "0"}};
    else
      term["coeff"] = cplx_out(t.coeff);
    series.push_back(term);
  }
  out["series"] = series;
  json notes = json::array();
  for (const auto& s : res.notes) notes.push_back(s);
  out["notes"] = notes;
  return out;
}

/* ---- subsystem dispatchers -------------------------------------------- */

void do_hurwitz(const json& req, char** out) {
  int e = req.at("euler").get<int>();
  std::vector<dmm::Partition> profiles;
  if (req.contains("profiles")) profiles = partitions_field(req.at("profiles"), "profiles");
  std::optional<int> d;
  if (req.contains("d")) d = req.at("d").get<int>();
  bool oracle = req.value("oracle", false);

  dmm::Rat value;
  bool weighted = req.contains("weight_m");
  if (weighted) {
    require(!oracle, "the enumeration oracle does not support the weighted count");
    int m = req.at("weight_m").get<int>();
    dmm::Rat N = rat_field(req.at("N"), "N");
    value = dmm::hurwitz_weighted(e, profiles, m, N, d);
  } else if (oracle) {
    // realize the euler characteristic as 2 - 2h - m with m in {0,1}
    int m = (((2 - e) % 2) + 2) % 2;
    int h = (2 - e - m) / 2;
    require(h >= 0, "the enumeration oracle needs euler characteristic at most 2");
    value = dmm::hurwitz_bruteforce(h, m, profiles, d);
  } else {
    value = dmm::hurwitz(e, profiles, d);
  }

  int d_used = profiles.empty() ? d.value_or(0) : profiles[0].weight();
  json resp;
  resp["euler"] = e;
  resp["d"] = d_used;
  json pj = json::array();
  for (const auto& p : profiles) pj.push_back(dmm::partition_json(p));
  resp["profiles"] = pj;
  resp["weighted"] = weighted;
  resp["oracle"] = oracle;
  resp["value"] = dmm::rat_str(value);
  resp["decimal"] = dmm::fmt_double(dmm::to_double(value));
  emit(resp, out);
}

void do_characters(const json& req, char** out) {
  if (req.contains("lambda") || req.contains("delta")) {
    auto la = partition_field(req.at("lambda"), "lambda");
    auto de = partition_field(req.at("delta"), "delta");
    json resp;
    resp["lambda"] = dmm::partition_json(la);
    resp["delta"] = dmm::partition_json(de);
    if (req.value("normalized", false))
      resp["value"] = dmm::rat_str(dmm::phi(la, de));
    else
      resp["value"] = dmm::character(la, de).str();
    emit(resp, out);
    return;
  }
  int d = req.at("d").get<int>();
  require(d >= 1, "weight must be positive");
  if (d > 12) throw dmm::error(dmm::errc::scale, "character tables are limited to weight 12");
  const auto& tab = dmm::character_table(d);
  json labels = json::array();
  for (const auto& la : tab.labels) labels.push_back(dmm::partition_json(la));
  json rows = json::array();
  for (const auto& la : tab.labels) {
    json row = json::array();
    for (const auto& de : tab.labels) row.push_back(tab.at(la, de).str());
    rows.push_back(row);
  }
  json resp;
  resp["d"] = d;
  resp["labels"] = labels;
  resp["table"] = rows;
  emit(resp, out);
}

void do_expect(const json& req, char** out) {
  std::string formula = req.at("formula").get<std::string>();
  auto model = dmm::DessinModel::from_faces(faces_field(req.at("faces")));
  int N_sources = 0;
  auto src = sources_field(req.at("sources"), N_sources);
  int N = req.value("N", N_sources);
  require(N >= 1, "cannot determine the matrix size; pass N or at least one source");
  std::optional<dmm::Rat> hb;
  if (req.contains("hbar")) hb = rat_field(req.at("hbar"), "hbar");
  auto ens = dmm::EnsembleSpec::parse(req.at("ensemble").get<std::string>(), N, hb);

  std::string side_s = req.value("side", std::string("faces"));
  dmm::Side side;
  if (side_s == "faces")
    side = dmm::Side::faces;
  else if (side_s == "vertices")
    side = dmm::Side::vertices;
  else
    throw dmm::error(dmm::errc::argument, "side must be 'faces' or 'vertices'");

  int dmax = req.value("dmax", 8);
  dmm::ClosedFormResult res;
  if (formula == "trace") {
    res = dmm::trace_product_expectation(model, ens, src, side);
  } else if (formula == "schur") {
    res = dmm::schur_expectation(model, ens, src,
                                 partitions_field(req.at("partitions"), "partitions"), side);
  } else if (formula == "schur-det") {
    auto lambdas = partitions_field(req.at("partitions"), "partitions");
    std::vector<int> alphas;
    for (const auto& a : req.at("alphas")) alphas.push_back(a.get<int>());
    res = dmm::schur_det_expectation(model, ens, src, lambdas, alphas, side);
  } else if (formula == "mixed") {
    res = dmm::mixed_expectation(model, ens, src, partitions_field(req.at("deltas"), "deltas"),
                                 partitions_field(req.at("mus"), "mus"), side);
  } else if (formula == "power") {
    res = dmm::power_expectation(model, ens, src,
                                 partitions_field(req.at("partitions"), "partitions"), side);
  } else if (formula == "theorem") {
    std::vector<dmm::RFunction> weights;
    for (const auto& w : req.at("weights")) weights.push_back(dmm::RFunction::parse(w.get<std::string>()));
    std::vector<dmm::PowerSumPoint> points;
    for (const auto& p : req.at("points")) points.push_back(point_field(p, "point"));
    res = dmm::theorem_series(model, ens, src, weights, points, dmax, side);
  } else {
    throw dmm::error(dmm::errc::argument,
                     "formula must be trace, schur, schur-det, mixed, power, or theorem");
  }

  json resp;
  resp["formula"] = formula;
  resp["side"] = res.side;
  resp["model"] = dmm::model_json(model);
  json resolved{{"N", N}, {"hbar", dmm::rat_str(ens.hbar)}, {"ensemble", ens.describe()},
                {"side", side_s}};
  if (formula == "theorem") resolved["dmax"] = dmax;
  resp["resolved"] = resolved;
  resp.update(closed_form_out(res));
  resp["kind"] = res.formula;
  emit(resp, out);
}

void do_tau(const json& req, char** out) {
  std::string which = req.at("which").get<std::string>();
  auto r = dmm::RFunction::parse(req.value("r", std::string("1")));
  int cap = req.value("cap", 12);
  require(cap >= 0, "cap must be nonnegative");
  int n = req.value("n", 0);

  json resolved{{"which", which}, {"r", r.describe()}, {"cap", cap}};
  json resp;
  resp["which"] = which;

  auto finish_pair = [&](const dmm::TauResult& t) {
    resp["resolved"] = resolved;
    resp["series"] = cplx_out(t.series);
    if (t.determinant) {
      resp["determinant"] = cplx_out(*t.determinant);
      resp["discrepancy"] = dmm::fmt_double(std::abs(t.series - *t.determinant));
    } else {
      resp["determinant"] = nullptr;
      resp["discrepancy"] = nullptr;
    }
    json notes = json::array();
    for (const auto& s : t.notes) notes.push_back(s);
    resp["notes"] = notes;
    emit(resp, out);
  };
  auto finish_series = [&](dmm::Cplx v, std::vector<std::string> notes = {}) {
    resp["resolved"] = resolved;
    resp["series"] = cplx_out(v);
    resp["determinant"] = nullptr;
    resp["discrepancy"] = nullptr;
    json nj = json::array();
    for (const auto& s : notes) nj.push_back(s);
    resp["notes"] = nj;
    emit(resp, out);
  };

  if (which == "scalar") {
    resolved["n"] = n;
    dmm::Cplx x = cplx_field(req.at("x"), "x");
    finish_series(dmm::tau_scalar(r, n, x, cap));
  } else if (which == "xy") {
    resolved["n"] = n;
    auto X = spectrum_field(req.at("X"), "X");
    auto Y = spectrum_field(req.at("Y"), "Y");
    finish_pair(dmm::tau_XY(r, n, diag_of(X), diag_of(Y), cap));
  } else if (which == "pp") {
    resolved["n"] = n;
    finish_pair(dmm::tau_pp(r, n, point_field(req.at("p1"), "p1"),
                            point_field(req.at("p2"), "p2"), cap));
  } else if (which == "xp") {
    resolved["n"] = n;
    auto X = spectrum_field(req.at("X"), "X");
    finish_pair(dmm::tau_Xp(r, n, diag_of(X), point_field(req.at("p"), "p"), cap));
  } else if (which == "hciz") {
    dmm::Cplx alpha = cplx_field(req.at("alpha"), "alpha");
    auto A = spectrum_field(req.at("A"), "A");
    auto B = spectrum_field(req.at("B"), "B");
    require(A.size() == B.size(), "A and B must have the same size");
    resolved["alpha"] = cplx_out(alpha);
    resolved["N"] = (int)A.size();
    finish_pair(dmm::hciz(alpha, diag_of(A), diag_of(B), cap));
  } else if (which == "morozov") {
    int N = req.value("N", 1);
    resolved["N"] = N;
    auto p = point_field(req.at("p"), "p");
    auto pb = point_field(req.at("pbar"), "pbar");
    finish_series(dmm::morozov_series(p, pb, N, cap));
  } else {
    throw dmm::error(dmm::errc::argument,
                     "which must be scalar, xy, pp, xp, hciz, or morozov");
  }
}

void do_verify(const json& req, char** out) {
  std::string suite = req.value("suite", std::string("all"));
  int N = req.value("N", 3);
  long samples = req.value("samples", 200000L);
  uint64_t seed = req.value("seed", (uint64_t)42);
  int workers = req.value("workers", 0);

  auto rep = dmm::run_verify(suite, N, samples, seed, workers);

  int resolved_workers = workers;
  if (resolved_workers <= 0) {
    if (const char* env = std::getenv("DMM_WORKERS")) resolved_workers = std::atoi(env);
    if (resolved_workers <= 0) resolved_workers = 1;
  }

  json resp;
  resp["suite"] = rep.suite;
  resp["N"] = rep.N;
  resp["samples"] = rep.samples;
  resp["seed"] = rep.seed;
  resp["workers"] = resolved_workers;
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json cj;
    cj["name"] = c.name;
    cj["closed"] = cplx_out(c.closed);
    cj["mc"] = cplx_out(c.mc);
    cj["stderr"] = json{{"re", dmm::fmt_double(c.stderr_re)}, {"im", dmm::fmt_double(c.stderr_im)}};
    cj["z"] = json{{"re", dmm::fmt_double(c.z_re)}, {"im", dmm::fmt_double(c.z_im)}};
    cj["samples"] = c.samples;
    cj["inverted"] = c.inverted;
    cj["pass"] = c.pass;
    cases.push_back(cj);
  }
  resp["cases"] = cases;
  resp["all_pass"] = rep.all_pass;
  emit(resp, out);
}

}  // namespace

/* ---- exported surface -------------------------------------------------- */

extern "C" {

const char* dmm_version(void) { return "1.0.0"; }

const char* dmm_last_error(void) { return tl_error.c_str(); }

void dmm_string_free(char* s) { std::free(s); }

dmm_status dmm_model_from_faces_json(const char* faces_json, dmm_model** out) {
  return guarded([&] {
    require(faces_json && out, "null argument");
    *out = new dmm_model{dmm::DessinModel::from_faces(faces_field(json::parse(faces_json)))};
  });
}

dmm_status dmm_model_from_text(const char* text, dmm_model** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new dmm_model{dmm::DessinModel::from_faces(dmm::parse_words(text))};
  });
}

void dmm_model_free(dmm_model* m) { delete m; }

dmm_status dmm_model_dual(const dmm_model* m, dmm_model** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = new dmm_model{m->m.dual()};
  });
}

dmm_status dmm_model_stats_json(const dmm_model* m, char** out_json) {
  return guarded([&] {
    require(m && out_json, "null argument");
    emit(dmm::model_json(m->m), out_json);
  });
}

dmm_status dmm_hurwitz_json(const char* request_json, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output");
    do_hurwitz(request_of(request_json), out_json);
  });
}

dmm_status dmm_characters_json(const char* request_json, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output");
    do_characters(request_of(request_json), out_json);
  });
}

dmm_status dmm_expect_json(const char* request_json, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output");
    do_expect(request_of(request_json), out_json);
  });
}

dmm_status dmm_tau_json(const char* request_json, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output");
    do_tau(request_of(request_json), out_json);
  });
}

dmm_status dmm_verify_json(const char* request_json, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output");
    do_verify(request_of(request_json), out_json);
  });
}

}  // extern "C"

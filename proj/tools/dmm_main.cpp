// command-line front end; all computation goes through the C API
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dessinmm.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct cli_error {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw cli_error{code, msg}; }

// input-shaped failures exit 2, everything else 1
int fail_code(dmm_status st) {
  switch (st) {
    case DMM_ERR_ARGUMENT:
    case DMM_ERR_DOMAIN:
    case DMM_ERR_SCALE:
    case DMM_ERR_PARSE:
      return 2;
    default:
      return 1;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(2, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(2, "cannot write '" + out_path + "'");
  out << text << "\n";
}

// run a C API call, returning the malloc'd response as a std::string
template <class F>
std::string call(F&& f) {
  char* raw = nullptr;
  dmm_status st = f(&raw);
  if (st != DMM_OK) fail(fail_code(st), dmm_last_error());
  std::string out = raw ? raw : "";
  dmm_string_free(raw);
  return out;
}

// partitions '|'-separated, parts ','-separated; "0" is the empty partition
json parse_partition_list(const std::string& text, const char* what) {
  json out = json::array();
  std::string group;
  auto flush_group = [&] {
    json parts = json::array();
    std::string tok;
    auto flush_tok = [&] {
      if (tok.empty()) return;
      try {
        int v = std::stoi(tok);
        if (v != 0) parts.push_back(v);
      } catch (const std::exception&) {
        fail(2, std::string(what) + ": bad part '" + tok + "'");
      }
      tok.clear();
    };
    for (char c : group) {
      if (c == ',')
        flush_tok();
      else if (!std::isspace((unsigned char)c))
        tok += c;
    }
    flush_tok();
    out.push_back(parts);
    group.clear();
  };
  for (char c : text) {
    if (c == '|')
      flush_group();
    else
      group += c;
  }
  flush_group();
  return out;
}

// complex token: a, bi, a+bi, a-bi, with i or j suffix
std::complex<double> parse_cplx_token(std::string t) {
  std::string s;
  for (char c : t)
    if (!std::isspace((unsigned char)c)) s += (c == 'j' ? 'i' : c);
  if (s.empty()) fail(2, "empty number");
  auto stod_or = [&](const std::string& x) {
    if (x.empty() || x == "+") return 1.0;
    if (x == "-") return -1.0;
    try {
      size_t pos = 0;
      double v = std::stod(x, &pos);
      if (pos != x.size()) fail(2, "bad number '" + t + "'");
      return v;
    } catch (const cli_error&) {
      throw;
    } catch (const std::exception&) {
      fail(2, "bad number '" + t + "'");
    }
  };
  if (s.back() != 'i') return {stod_or(s), 0.0};
  s.pop_back();
  // split at the sign separating the real part, skipping exponent signs
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
      return {stod_or(s.substr(0, k)), stod_or(s.substr(k))};
  }
  return {0.0, stod_or(s)};
}

json cplx_req(const std::complex<double>& z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

json parse_spectrum(const std::string& text, const char* what) {
  json out = json::array();
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) out.push_back(cplx_req(parse_cplx_token(tok)));
    tok.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      tok += c;
  }
  flush();
  if (out.empty()) fail(2, std::string(what) + " must list at least one value");
  return out;
}

// '|'-separated list for per-word flags (weights, points)
std::vector<std::string> split_bar(const std::string& text) {
  std::vector<std::string> out;
  std::string tok;
  for (char c : text) {
    if (c == '|') {
      out.push_back(tok);
      tok.clear();
    } else {
      tok += c;
    }
  }
  out.push_back(tok);
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string partition_label(const json& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ",";
    s += std::to_string(p.get<int>());
  }
  return s;
}

/* ---- model loading ---------------------------------------------------- */

struct ModelHandle {
  dmm_model* m = nullptr;
  ~ModelHandle() { dmm_model_free(m); }
};

// inline faces use ';' or '|' between faces; files may be text or JSON
void load_model(const std::string& file, const std::string& inline_faces, ModelHandle& h) {
  if (file.empty() && inline_faces.empty()) fail(2, "pass --faces-file or --faces");
  dmm_status st;
  if (!file.empty()) {
    std::string text = slurp(file);
    size_t k = text.find_first_not_of(" \t\r\n");
    if (k != std::string::npos && (text[k] == '[' || text[k] == '{'))
      st = dmm_model_from_faces_json(text.c_str(), &h.m);
    else
      st = dmm_model_from_text(text.c_str(), &h.m);
  } else {
    std::string text = inline_faces;
    for (char& c : text)
      if (c == ';' || c == '|') c = '\n';
    st = dmm_model_from_text(text.c_str(), &h.m);
  }
  if (st != DMM_OK) fail(fail_code(st), dmm_last_error());
}

json model_stats(const dmm_model* m) {
  return json::parse(call([&](char** out) { return dmm_model_stats_json(m, out); }));
}

/* ---- subcommand runners ------------------------------------------------ */

int run_dessin(const std::string& action, const std::string& file, const std::string& inline_faces,
               const std::string& out_path) {
  ModelHandle h;
  load_model(file, inline_faces, h);
  if (action == "check") {
    write_out(model_stats(h.m).dump(2), out_path);
    return 0;
  }
  ModelHandle d;
  dmm_status st = dmm_model_dual(h.m, &d.m);
  if (st != DMM_OK) fail(fail_code(st), dmm_last_error());
  write_out(model_stats(d.m).dump(2), out_path);
  return 0;
}

int run_hurwitz(int euler, const std::string& profiles, int weight_m, const std::string& N_str,
                int d, bool oracle, const std::string& format, const std::string& out_path) {
  json req;
  req["euler"] = euler;
  if (!profiles.empty()) req["profiles"] = parse_partition_list(profiles, "profiles");
  if (d > 0) req["d"] = d;
  if (weight_m >= 0) {
    req["weight_m"] = weight_m;
    if (N_str.empty()) fail(2, "--weight-m needs --N");
    req["N"] = N_str;
  }
  if (oracle) req["oracle"] = true;
  std::string resp = call([&](char** out) { return dmm_hurwitz_json(req.dump().c_str(), out); });
  if (format == "csv") {
    json r = json::parse(resp);
    std::string prof;
    for (const auto& p : r["profiles"]) {
      if (!prof.empty()) prof += "|";
      prof += partition_label(p);
    }
    std::ostringstream ss;
    ss << "euler,d,profiles,value,decimal\n";
    ss << r["euler"].get<int>() << "," << r["d"].get<int>() << "," << csv_quote(prof) << ","
       << csv_quote(r["value"].get<std::string>()) << "," << r["decimal"].get<std::string>();
    write_out(ss.str(), out_path);
  } else {
    write_out(resp, out_path);
  }
  return 0;
}

int run_characters(int d, const std::string& lambda, const std::string& delta, bool normalized,
                   const std::string& format, const std::string& out_path) {
  json req;
  if (!lambda.empty() || !delta.empty()) {
    if (lambda.empty() || delta.empty()) fail(2, "--lambda and --delta go together");
    req["lambda"] = parse_partition_list(lambda, "lambda")[0];
    req["delta"] = parse_partition_list(delta, "delta")[0];
    if (normalized) req["normalized"] = true;
  } else {
    if (d <= 0) fail(2, "pass --d for the table or --lambda/--delta for one value");
    req["d"] = d;
  }
  std::string resp = call([&](char** out) { return dmm_characters_json(req.dump().c_str(), out); });
  if (format == "csv") {
    json r = json::parse(resp);
    if (!r.contains("table")) fail(2, "csv output needs the table form (--d without --lambda)");
    std::ostringstream ss;
    ss << "lambda";
    for (const auto& la : r["labels"]) ss << "," << csv_quote(partition_label(la));
    for (size_t i = 0; i < r["labels"].size(); ++i) {
      ss << "\n" << csv_quote(partition_label(r["labels"][i]));
      for (const auto& v : r["table"][i]) ss << "," << v.get<std::string>();
    }
    write_out(ss.str(), out_path);
  } else {
    write_out(resp, out_path);
  }
  return 0;
}

int run_expect(const std::string& formula, const std::string& faces_file,
               const std::string& inline_faces, const std::string& sources_file,
               const std::string& ensemble, const std::string& hbar, int N,
               const std::string& side, const std::string& partitions, const std::string& alphas,
               const std::string& deltas, const std::string& mus, int dmax,
               const std::string& weights, const std::string& points,
               const std::string& out_path) {
  ModelHandle h;
  load_model(faces_file, inline_faces, h);
  json req;
  req["formula"] = formula;
  req["faces"] = model_stats(h.m)["faces"];
  if (sources_file.empty()) fail(2, "pass --sources-file");
  req["sources"] = json::parse(slurp(sources_file));
  req["ensemble"] = ensemble;
  if (N > 0) req["N"] = N;
  if (!hbar.empty()) req["hbar"] = hbar;
  if (!side.empty()) req["side"] = side;
  if (!partitions.empty()) req["partitions"] = parse_partition_list(partitions, "partitions");
  if (!alphas.empty()) {
    json arr = json::array();
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      try {
        arr.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(2, "bad alpha '" + tok + "'");
      }
      tok.clear();
    };
    for (char c : alphas) {
      if (c == ',')
        flush();
      else if (!std::isspace((unsigned char)c))
        tok += c;
    }
    flush();
    req["alphas"] = arr;
  }
  if (!deltas.empty()) req["deltas"] = parse_partition_list(deltas, "deltas");
  if (!mus.empty()) req["mus"] = parse_partition_list(mus, "mus");
  if (dmax > 0) req["dmax"] = dmax;
  if (!weights.empty()) {
    json arr = json::array();
    for (const auto& w : split_bar(weights)) arr.push_back(w);
    req["weights"] = arr;
  }
  if (!points.empty()) {
    json arr = json::array();
    for (const auto& p : split_bar(points)) arr.push_back(p);
    req["points"] = arr;
  }
  write_out(call([&](char** out) { return dmm_expect_json(req.dump().c_str(), out); }), out_path);
  return 0;
}

int run_tau(const std::string& which, const std::string& r, int cap, int n, const std::string& x,
            const std::string& X, const std::string& Y, const std::string& p1,
            const std::string& p2, const std::string& p, const std::string& pbar,
            const std::string& alpha, const std::string& A, const std::string& B, int N,
            const std::string& out_path) {
  json req;
  req["which"] = which;
  if (!r.empty()) req["r"] = r;
  req["cap"] = cap;
  req["n"] = n;
  if (!x.empty()) req["x"] = cplx_req(parse_cplx_token(x));
  if (!X.empty()) req["X"] = parse_spectrum(X, "X");
  if (!Y.empty()) req["Y"] = parse_spectrum(Y, "Y");
  if (!p1.empty()) req["p1"] = p1;
  if (!p2.empty()) req["p2"] = p2;
  if (!p.empty()) req["p"] = p;
  if (!pbar.empty()) req["pbar"] = pbar;
  if (!alpha.empty()) req["alpha"] = cplx_req(parse_cplx_token(alpha));
  if (!A.empty()) req["A"] = parse_spectrum(A, "A");
  if (!B.empty()) req["B"] = parse_spectrum(B, "B");
  if (N > 0) req["N"] = N;
  write_out(call([&](char** out) { return dmm_tau_json(req.dump().c_str(), out); }), out_path);
  return 0;
}

int run_verify(const std::string& suite, int N, long samples, unsigned long seed, int workers,
               const std::string& format, const std::string& out_path) {
  json req;
  req["suite"] = suite;
  req["N"] = N;
  req["samples"] = samples;
  req["seed"] = seed;
  if (workers > 0) req["workers"] = workers;
  std::string resp = call([&](char** out) { return dmm_verify_json(req.dump().c_str(), out); });
  json rep = json::parse(resp);
  if (format == "csv") {
    std::ostringstream ss;
    ss << "name,closed_re,closed_im,mc_re,mc_im,stderr_re,stderr_im,z_re,z_im,samples,inverted,"
          "pass";
    for (const auto& c : rep["cases"]) {
      ss << "\n"
         << csv_quote(c["name"].get<std::string>()) << "," << c["closed"]["re"].get<std::string>()
         << "," << c["closed"]["im"].get<std::string>() << "," << c["mc"]["re"].get<std::string>()
         << "," << c["mc"]["im"].get<std::string>() << "," << c["stderr"]["re"].get<std::string>()
         << "," << c["stderr"]["im"].get<std::string>() << "," << c["z"]["re"].get<std::string>()
         << "," << c["z"]["im"].get<std::string>() << "," << c["samples"].get<long>() << ","
         << (c["inverted"].get<bool>() ? 1 : 0) << "," << (c["pass"].get<bool>() ? 1 : 0);
    }
    write_out(ss.str(), out_path);
  } else {
    write_out(resp, out_path);
  }
  return rep["all_pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix models on combinatorial maps: exact expectations, tau functions, and "
               "Monte Carlo verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(dmm_version()); });

  // dessin
  auto* dessin = app.add_subcommand("dessin", "inspect a map or compute its dual");
  dessin->require_subcommand(1);
  std::string ds_file, ds_inline, ds_out;
  auto* ds_check = dessin->add_subcommand("check", "print edges, faces, vertices, euler, genus");
  auto* ds_dual = dessin->add_subcommand("dual", "print the dual map's stats");
  for (auto* sc : {ds_check, ds_dual}) {
    sc->add_option("--faces-file", ds_file, "faces as text (one face per line) or JSON");
    sc->add_option("--faces", ds_inline, "inline faces, ';' or '|' between faces");
    sc->add_option("-o,--out", ds_out, "write output here instead of stdout");
  }

  // hurwitz
  auto* hw = app.add_subcommand("hurwitz", "branched-covering count from the character sum");
  int hw_euler = 2, hw_m = -1, hw_d = 0;
  std::string hw_profiles, hw_N, hw_format = "json", hw_out;
  bool hw_oracle = false;
  hw->add_option("--euler", hw_euler, "euler characteristic of the base surface")->required();
  hw->add_option("--profiles", hw_profiles, "branching profiles, e.g. \"3|3\" or \"2|1,1\"");
  hw->add_option("--weight-m", hw_m, "weighted count: extra 1/(N)_lambda factor, m copies");
  hw->add_option("--N", hw_N, "parameter N for the weighted count, rational");
  hw->add_option("--d", hw_d, "sheet count when no profiles are given");
  hw->add_flag("--oracle", hw_oracle, "recompute by brute-force enumeration");
  hw->add_option("--format", hw_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  hw->add_option("-o,--out", hw_out, "write output here instead of stdout");

  // characters
  auto* ch = app.add_subcommand("characters", "symmetric group character table or a single value");
  int ch_d = 0;
  std::string ch_lambda, ch_delta, ch_format = "json", ch_out;
  bool ch_norm = false;
  ch->add_option("--d", ch_d, "weight: full table on all partitions of d");
  ch->add_option("--lambda", ch_lambda, "row label, e.g. \"2,1\"");
  ch->add_option("--delta", ch_delta, "class label, e.g. \"1,1,1\"");
  ch->add_flag("--normalized", ch_norm, "scale the value by d!/(dim * z)");
  ch->add_option("--format", ch_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  ch->add_option("-o,--out", ch_out, "write output here instead of stdout");

  // expect
  auto* ex = app.add_subcommand("expect", "closed-form expectation value on a map");
  std::string ex_formula, ex_file, ex_inline, ex_sources, ex_ensemble, ex_hbar, ex_side;
  std::string ex_partitions, ex_alphas, ex_deltas, ex_mus, ex_weights, ex_points, ex_out;
  int ex_N = 0, ex_dmax = 0;
  ex->add_option("--formula", ex_formula, "trace, schur, schur-det, mixed, power, or theorem")
      ->required()
      ->check(CLI::IsMember({"trace", "schur", "schur-det", "mixed", "power", "theorem"}));
  ex->add_option("--faces-file", ex_file, "faces as text (one face per line) or JSON");
  ex->add_option("--faces", ex_inline, "inline faces, ';' or '|' between faces");
  ex->add_option("--sources-file", ex_sources, "JSON map letter -> N x N matrix")->required();
  ex->add_option("--ensemble", ex_ensemble, "edge kinds, e.g. \"G,G,U\"")->required();
  ex->add_option("--hbar", ex_hbar, "coupling, rational; default 1/N");
  ex->add_option("--N", ex_N, "matrix size; default inferred from the sources");
  ex->add_option("--side", ex_side, "faces or vertices")
      ->check(CLI::IsMember({"faces", "vertices"}));
  ex->add_option("--partitions", ex_partitions, "one partition per word, e.g. \"2,1|1\"");
  ex->add_option("--alphas", ex_alphas, "determinant powers, comma list");
  ex->add_option("--deltas", ex_deltas, "power-sum labels for the word prefix");
  ex->add_option("--mus", ex_mus, "partition labels for the word suffix");
  ex->add_option("--dmax", ex_dmax, "series truncation weight, default 8");
  ex->add_option("--weights", ex_weights, "one weight function per word, '|'-separated");
  ex->add_option("--points", ex_points, "one power-sum point per word, '|'-separated");
  ex->add_option("-o,--out", ex_out, "write output here instead of stdout");

  // tau
  auto* ta = app.add_subcommand("tau", "hypergeometric tau function, series and determinant");
  std::string ta_which, ta_r, ta_x, ta_X, ta_Y, ta_p1, ta_p2, ta_p, ta_pbar, ta_alpha, ta_A, ta_B,
      ta_out;
  int ta_cap = 12, ta_n = 0, ta_N = 0;
  ta->add_option("--which", ta_which, "scalar, xy, pp, xp, hciz, or morozov")
      ->required()
      ->check(CLI::IsMember({"scalar", "xy", "pp", "xp", "hciz", "morozov"}));
  ta->add_option("--r", ta_r, "weight function, e.g. \"p:1/2,3;q:5;c:2/3\" or \"x\"");
  ta->add_option("--cap", ta_cap, "series truncation, default 12");
  ta->add_option("--n", ta_n, "lattice offset");
  ta->add_option("--x", ta_x, "scalar: evaluation point, e.g. \"0.3\" or \"0.1+0.2i\"");
  ta->add_option("--X", ta_X, "spectrum, comma list of complex numbers");
  ta->add_option("--Y", ta_Y, "spectrum, comma list of complex numbers");
  ta->add_option("--p1", ta_p1, "power-sum point: infty, geom:a, qt:q,t, values:v1,v2,...");
  ta->add_option("--p2", ta_p2, "power-sum point");
  ta->add_option("--p", ta_p, "power-sum point");
  ta->add_option("--pbar", ta_pbar, "power-sum point");
  ta->add_option("--alpha", ta_alpha, "coupling for hciz");
  ta->add_option("--A", ta_A, "spectrum for hciz");
  ta->add_option("--B", ta_B, "spectrum for hciz");
  ta->add_option("--N", ta_N, "unitary group size for morozov");
  ta->add_option("-o,--out", ta_out, "write output here instead of stdout");

  // verify
  auto* vf = app.add_subcommand("verify", "closed forms against seeded Monte Carlo");
  std::string vf_suite = "all", vf_format = "json", vf_out;
  int vf_N = 3, vf_workers = 0;
  long vf_samples = 200000;
  unsigned long vf_seed = 42;
  vf->add_option("--suite", vf_suite, "lemmas, prop1, prop2, prop4, hciz, morozov, or all")
      ->check(CLI::IsMember({"lemmas", "prop1", "prop2", "prop4", "hciz", "morozov", "all"}));
  vf->add_option("--N", vf_N, "matrix size, default 3");
  vf->add_option("--samples", vf_samples, "Monte Carlo samples per case, default 200000");
  vf->add_option("--seed", vf_seed, "base seed, default 42");
  vf->add_option("--workers", vf_workers, "sampling threads; default DMM_WORKERS or 1");
  vf->add_option("--format", vf_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  vf->add_option("-o,--out", vf_out, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ds_check->parsed()) return run_dessin("check", ds_file, ds_inline, ds_out);
    if (ds_dual->parsed()) return run_dessin("dual", ds_file, ds_inline, ds_out);
    if (hw->parsed())
      return run_hurwitz(hw_euler, hw_profiles, hw_m, hw_N, hw_d, hw_oracle, hw_format, hw_out);
    if (ch->parsed()) return run_characters(ch_d, ch_lambda, ch_delta, ch_norm, ch_format, ch_out);
    if (ex->parsed())
      return run_expect(ex_formula, ex_file, ex_inline, ex_sources, ex_ensemble, ex_hbar, ex_N,
                        ex_side, ex_partitions, ex_alphas, ex_deltas, ex_mus, ex_dmax, ex_weights,
                        ex_points, ex_out);
    if (ta->parsed())
      return run_tau(ta_which, ta_r, ta_cap, ta_n, ta_x, ta_X, ta_Y, ta_p1, ta_p2, ta_p, ta_pbar,
                     ta_alpha, ta_A, ta_B, ta_N, ta_out);
    if (vf->parsed())
      return run_verify(vf_suite, vf_N, vf_samples, vf_seed, vf_workers, vf_format, vf_out);
  } catch (const cli_error& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"
#include "seeding.hpp"

namespace dmm {

// which random matrix dresses each edge: complex Gaussian or Haar unitary
enum class EdgeKind { gaussian, unitary };

struct EnsembleSpec {
  std::vector<EdgeKind> kinds;
  int N = 0;
  Rat hbar = 0;

  int n() const { return (int)kinds.size(); }
  int n1() const {
    int c = 0;
    for (auto k : kinds)
      if (k == EdgeKind::gaussian) ++c;
    return c;
  }
  int n2() const { return n() - n1(); }

  // kinds_csv like "G,G,U"; hbar defaults to 1/N
  static EnsembleSpec parse(const std::string& kinds_csv, int N,
                            std::optional<Rat> hbar = std::nullopt) {
    if (N < 1) throw error(errc::argument, "matrix size must be positive");
    EnsembleSpec s;
    s.N = N;
    std::string tok;
    auto flush = [&] {
      size_t a = tok.find_first_not_of(" \t");
      size_t b = tok.find_last_not_of(" \t");
      std::string t = (a == std::string::npos) ? "" : tok.substr(a, b - a + 1);
      if (t.empty()) throw error(errc::parse, "empty ensemble entry in '" + kinds_csv + "'");
      if (t == "G" || t == "g")
        s.kinds.push_back(EdgeKind::gaussian);
      else if (t == "U" || t == "u")
        s.kinds.push_back(EdgeKind::unitary);
      else
        throw error(errc::parse, "ensemble entry must be G or U, got '" + t + "'");
      tok.clear();
    };
    for (char c : kinds_csv) {
      if (c == ',')
        flush();
      else
        tok += c;
    }
    flush();
    s.hbar = hbar ? *hbar : Rat(1, N);
    return s;
  }

  std::string describe() const {
    std::string s;
    for (size_t i = 0; i < kinds.size(); ++i) {
      if (i) s += ",";
      s += (kinds[i] == EdgeKind::gaussian) ? "G" : "U";
    }
    return s;
  }
};

// fixed source matrices, one per signed letter; +i and -i are independent
struct SourceAssignment {
  std::map<int, Eigen::MatrixXcd> mats;
  std::map<int, RatMat> exact;

  bool all_exact(int n) const {
    for (int k = 1; k <= n; ++k)
      if (!exact.count(k) || !exact.count(-k)) return false;
    return true;
  }

  void validate(int n, int N) const {
    for (int k = 1; k <= n; ++k)
      for (int s : {k, -k}) {
        auto it = mats.find(s);
        if (it == mats.end())
          throw error(errc::argument, "missing source matrix for letter " + std::to_string(s));
        if (it->second.rows() != N || it->second.cols() != N)
          throw error(errc::argument, "source matrix for letter " + std::to_string(s) +
                                          " is not " + std::to_string(N) + "x" + std::to_string(N));
      }
    for (auto& [s, m] : exact) {
      if (!mats.count(s))
        throw error(errc::argument, "exact source without numeric twin for letter " + std::to_string(s));
      if (m.rows() != N || m.cols() != N)
        throw error(errc::argument, "exact source matrix for letter " + std::to_string(s) +
                                        " is not " + std::to_string(N) + "x" + std::to_string(N));
    }
  }

  // product of source matrices along a word, each letter keyed directly
  Eigen::MatrixXcd word_product(const std::vector<int>& word, int N) const {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(N, N);
    for (int s : word) {
      auto it = mats.find(s);
      if (it == mats.end())
        throw error(errc::argument, "missing source matrix for letter " + std::to_string(s));
      out = out * it->second;
    }
    return out;
  }

  bool word_product_exact(const std::vector<int>& word, int N, RatMat& out) const {
    out = RatMat::identity(N);
    for (int s : word) {
      auto it = exact.find(s);
      if (it == exact.end()) return false;
      out = out * it->second;
    }
    return true;
  }

  // small deterministic rational sources, reproducible from a style key
  static SourceAssignment deterministic(int n, int N, uint64_t style = 0) {
    SourceAssignment sa;
    for (int k = 1; k <= n; ++k)
      for (int s : {k, -k}) {
        RatMat m(N, N);
        Eigen::MatrixXcd z(N, N);
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j) {
            uint64_t h = key3(style, (uint64_t)(s + 64), key2((uint64_t)i, (uint64_t)j));
            long num = (long)(h % 9) - 4;
            long den = 1 + (long)((h >> 8) % 3);
            m(i, j) = Rat(num, den);
            z(i, j) = std::complex<double>((double)num / (double)den, 0.0);
          }
        sa.exact[s] = m;
        sa.mats[s] = z;
      }
    return sa;
  }
};

}  // namespace dmm

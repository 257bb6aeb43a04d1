#include "dessin.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace dmm {

int letter_key(int v) { return 2 * std::abs(v) + (v < 0 ? 1 : 0); }

namespace {

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](int x, int y) { return letter_key(x) < letter_key(y); });
}

}  // namespace

std::vector<int> canonical_rotation(const std::vector<int>& word) {
  if (word.empty()) return word;
  size_t L = word.size();
  size_t best = 0;
  for (size_t s = 1; s < L; ++s) {
    for (size_t j = 0; j < L; ++j) {
      int ks = letter_key(word[(s + j) % L]);
      int kb = letter_key(word[(best + j) % L]);
      if (ks != kb) {
        if (ks < kb) best = s;
        break;
      }
    }
  }
  std::vector<int> out(L);
  for (size_t j = 0; j < L; ++j) out[j] = word[(best + j) % L];
  return out;
}

std::vector<std::vector<int>> canonical_collection(std::vector<std::vector<int>> words) {
  for (auto& w : words) w = canonical_rotation(w);
  std::sort(words.begin(), words.end(), word_less);
  return words;
}

std::string words_str(const std::vector<std::vector<int>>& words) {
  std::ostringstream os;
  for (const auto& w : words) {
    os << '(';
    for (size_t j = 0; j < w.size(); ++j) {
      if (j) os << ',';
      os << w[j];
    }
    os << ')';
  }
  return os.str();
}

std::vector<std::vector<int>> parse_words(const std::string& text) {
  std::vector<std::vector<int>> words(1);
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw error(errc::parse, "bad letter '" + tok + "'");
    }
    if (pos != tok.size()) throw error(errc::parse, "bad letter '" + tok + "'");
    words.back().push_back(v);
    tok.clear();
  };
  for (char c : text) {
    if (c == '|' || c == '(' || c == ')' || c == '\n') {
      flush();
      if (c == '|' || c == ')' || c == '\n') {
        if (!words.back().empty()) words.emplace_back();
      }
    } else if (c == ' ' || c == ',' || c == '\t' || c == '\r') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  if (words.back().empty()) words.pop_back();
  if (words.empty()) throw error(errc::parse, "no words found");
  return words;
}

std::map<int, int> successor_map(const std::vector<std::vector<int>>& words) {
  std::map<int, int> next;
  for (const auto& w : words)
    for (size_t j = 0; j < w.size(); ++j) {
      auto [it, fresh] = next.emplace(w[j], w[(j + 1) % w.size()]);
      if (!fresh) throw error(errc::argument, "letter " + std::to_string(w[j]) + " repeats");
    }
  return next;
}

std::vector<std::vector<int>> cycles_of(const std::map<int, int>& next) {
  std::vector<int> letters;
  for (const auto& [v, _] : next) letters.push_back(v);
  std::sort(letters.begin(), letters.end(), [](int a, int b) { return letter_key(a) < letter_key(b); });
  std::set<int> seen;
  std::vector<std::vector<int>> cycles;
  for (int start : letters) {
    if (seen.count(start)) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      cyc.push_back(x);
      seen.insert(x);
      auto it = next.find(x);
      if (it == next.end()) throw error(errc::argument, "successor map is not a permutation");
      x = it->second;
    } while (x != start);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::vector<std::vector<int>> apply_T(const std::vector<std::vector<int>>& words, int i) {
  if (i <= 0) throw error(errc::argument, "edge index must be positive");
  int wp = -1, pp = -1, wm = -1, pm = -1;
  for (size_t a = 0; a < words.size(); ++a)
    for (size_t j = 0; j < words[a].size(); ++j) {
      if (words[a][j] == i) wp = (int)a, pp = (int)j;
      if (words[a][j] == -i) wm = (int)a, pm = (int)j;
    }
  if (wp < 0 || wm < 0) throw error(errc::argument, "letters " + std::to_string(i) + ", -" + std::to_string(i) + " not found");

  std::vector<std::vector<int>> out = words;
  if (wp == wm) {
    const auto& w = words[(size_t)wp];
    int L = (int)w.size();
    std::vector<int> rot((size_t)L);
    for (int j = 0; j < L; ++j) rot[(size_t)j] = w[(size_t)((pp + j) % L)];
    int q = (pm - pp + L) % L;
    std::vector<int> first(rot.begin(), rot.begin() + q);
    std::vector<int> second(rot.begin() + q, rot.end());
    out[(size_t)wp] = std::move(first);
    out.insert(out.begin() + wp + 1, std::move(second));
  } else {
    const auto& wa = words[(size_t)wp];
    const auto& wb = words[(size_t)wm];
    std::vector<int> join;
    for (size_t j = 0; j < wa.size(); ++j) join.push_back(wa[(pp + j) % wa.size()]);
    for (size_t j = 0; j < wb.size(); ++j) join.push_back(wb[(pm + j) % wb.size()]);
    size_t lo = (size_t)std::min(wp, wm), hi = (size_t)std::max(wp, wm);
    out[lo] = std::move(join);
    out.erase(out.begin() + (long)hi);
  }
  return out;
}

DessinModel DessinModel::from_faces(const std::vector<std::vector<int>>& faces) {
  if (faces.empty()) throw error(errc::argument, "empty face list");
  std::map<int, int> count;
  int n = 0;
  for (const auto& w : faces) {
    if (w.empty()) throw error(errc::argument, "empty face word");
    for (int v : w) {
      if (v == 0) throw error(errc::argument, "letter 0 is not allowed");
      ++count[v];
      n = std::max(n, std::abs(v));
    }
  }
  for (int k = 1; k <= n; ++k)
    if (count[k] != 1 || count[-k] != 1)
      throw error(errc::argument, "letters " + std::to_string(k) + " and -" + std::to_string(k) +
                                      " must each appear exactly once");

  DessinModel m;
  m.n_ = n;
  m.faces_ = faces;

  std::vector<int> parent((size_t)n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[(size_t)x] != x) x = parent[(size_t)x] = parent[(size_t)parent[(size_t)x]];
    return x;
  };
  for (const auto& w : faces)
    for (size_t j = 1; j < w.size(); ++j) parent[(size_t)find(std::abs(w[0]))] = find(std::abs(w[(size_t)j]));
  std::set<int> roots;
  for (int k = 1; k <= n; ++k) roots.insert(find(k));
  m.components_ = (int)roots.size();

  std::map<int, int> succ = successor_map(faces);
  std::map<int, int> vert;
  for (const auto& [x, y] : succ) vert[x] = -y;
  m.vertices_ = canonical_collection(cycles_of(vert));
  return m;
}

int DessinModel::genus() const {
  if (!connected()) throw error(errc::domain, "genus needs a connected model");
  int chi = euler();
  if ((2 - chi) % 2 != 0) throw error(errc::numeric, "odd Euler characteristic");
  return (2 - chi) / 2;
}

DessinModel DessinModel::dual() const { return from_faces(vertices_); }

Partition DessinModel::face_profile() const {
  std::vector<int> lens;
  for (const auto& w : faces_) lens.push_back((int)w.size());
  return Partition(lens);
}

Partition DessinModel::vertex_profile() const {
  std::vector<int> lens;
  for (const auto& w : vertices_) lens.push_back((int)w.size());
  return Partition(lens);
}

bool DessinModel::operator==(const DessinModel& o) const {
  return n_ == o.n_ && canonical_faces() == o.canonical_faces();
}

DessinModel random_model(int n, uint64_t seed, bool require_connected) {
  if (n < 1) throw error(errc::argument, "need at least one edge");
  std::mt19937_64 rng(seed);
  std::vector<int> letters;
  for (int k = 1; k <= n; ++k) {
    letters.push_back(k);
    letters.push_back(-k);
  }
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<int> images = letters;
    std::shuffle(images.begin(), images.end(), rng);
    std::map<int, int> succ;
    for (size_t j = 0; j < letters.size(); ++j) succ[letters[j]] = images[j];
    DessinModel m = DessinModel::from_faces(cycles_of(succ));
    if (!require_connected || m.connected()) return m;
  }
  throw error(errc::numeric, "no connected model found");
}

std::vector<DessinModel> all_models(int n) {
  if (n < 1 || n > 3) throw error(errc::scale, "full enumeration supported for 1..3 edges");
  std::vector<int> letters;
  for (int k = 1; k <= n; ++k) {
    letters.push_back(k);
    letters.push_back(-k);
  }
  std::vector<int> images = letters;
  std::sort(images.begin(), images.end());
  std::vector<DessinModel> out;
  do {
    std::map<int, int> succ;
    for (size_t j = 0; j < letters.size(); ++j) succ[letters[j]] = images[j];
    DessinModel m = DessinModel::from_faces(cycles_of(succ));
    if (m.connected()) out.push_back(std::move(m));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool is_isomorphic(const DessinModel& a, const DessinModel& b) {
  if (a.edges() != b.edges()) return false;
  int n = a.edges();
  if (n > 7) throw error(errc::scale, "isomorphism search supported for up to 7 edges");
  if (a.num_faces() != b.num_faces() || a.num_vertices() != b.num_vertices()) return false;
  if (!(a.face_profile() == b.face_profile()) || !(a.vertex_profile() == b.vertex_profile()))
    return false;

  auto target = b.canonical_faces();
  std::vector<int> perm((size_t)n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::vector<int>> mapped = a.faces();
      for (auto& w : mapped)
        for (int& v : w) {
          int e = std::abs(v);
          int img = perm[(size_t)(e - 1)];
          int s = (mask >> (e - 1)) & 1u ? -1 : 1;
          v = s * (v > 0 ? img : -img);
        }
      if (canonical_collection(std::move(mapped)) == target) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Eigen::MatrixXcd word_matrix(const std::vector<int>& word,
                             const std::vector<Eigen::MatrixXcd>& edge_mats) {
  if (edge_mats.empty()) throw error(errc::argument, "no edge matrices");
  long N = edge_mats[0].rows();
  for (const auto& M : edge_mats)
    if (M.rows() != N || M.cols() != N) throw error(errc::argument, "edge matrices must be square of equal size");
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(N, N);
  for (int v : word) {
    size_t e = (size_t)std::abs(v) - 1;
    if (e >= edge_mats.size()) throw error(errc::argument, "word uses an edge with no matrix assigned");
    if (v > 0)
      P = P * edge_mats[e];
    else
      P = P * edge_mats[e].adjoint();
  }
  return P;
}

}  // namespace dmm
